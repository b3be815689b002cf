#pragma once

/**
 * @file cli.hpp
 * @brief Command-line driver and structured record formats.
 *
 * Every structured emission is one JSON object per line:
 *
 *     {"schema_version":"1","command":<name>,"payload":{...}}
 *
 * with payload keys in a fixed order per command (see the to_payload
 * overloads). Exit codes: 0 success/affirmative, 1 negative or mismatch,
 * 2 usage or input error.
 */

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fp2gen/theorem.hpp"

namespace fp2gen::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,
    kUsageError = 2,
};

Json to_json(const Fp2Element& u);
Json to_payload(const ClassificationResult& r);
Json to_json(const VerificationReport& r);
Json to_json(const BenchmarkSummary& s);

/// Wraps a payload into the versioned record envelope.
Json make_record(std::string_view command, Json payload);

/// Serializes a record as a single line (no trailing newline).
std::string dump_record(const Json& record);

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fp2gen::cli
