#include "fp2gen/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace fp2gen::cli {

Json to_json(const Fp2Element& u) {
    Json j;
    j["a"] = u.a();
    j["b"] = u.b();
    return j;
}

Json to_payload(const ClassificationResult& r) {
    const FieldContext& ctx = r.element.context();
    Json j;
    j["p"] = ctx.p().value();
    j["n"] = ctx.n_input();
    j["n_reduced"] = ctx.n().value();
    j["element"] = to_json(r.element);
    j["norm"] = r.norm_value.value();
    j["norm_is_primitive"] = r.norm_is_primitive;
    j["norm_order"] = r.norm_order;
    j["f_value"] = to_json(r.f_value);
    j["f_order"] = r.f_order;
    j["f_generates_kernel"] = r.f_generates_kernel;
    j["is_generator"] = r.is_generator;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json mismatches = Json::array();
    for (const Mismatch& m : r.mismatches) {
        Json entry;
        entry["kind"] = std::string(to_string(m.kind));
        entry["a"] = m.a;
        entry["b"] = m.b;
        entry["criterion"] = m.criterion;
        entry["oracle_order"] = m.oracle_order;
        mismatches.push_back(std::move(entry));
    }
    Json j;
    j["p"] = r.p;
    j["n"] = r.n;
    j["n_reduced"] = r.n_reduced;
    j["total_units"] = r.total_units;
    j["generator_count_theorem"] = r.generator_count_theorem;
    j["generator_count_oracle"] = r.generator_count_oracle;
    j["mismatches"] = std::move(mismatches);
    j["phi_p2_minus_1"] = r.phi_p2_minus_1;
    j["kernel_size"] = r.kernel_size;
    j["norm_image_size"] = r.norm_image_size;
    j["f_image_size"] = r.f_image_size;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

Json to_json(const BenchmarkSummary& s) {
    Json timings = Json::array();
    for (const MethodTiming& t : s.timings) {
        Json row;
        row["method"] = t.method;
        row["mean_ns"] = t.mean_ns;
        row["median_ns"] = t.median_ns;
        timings.push_back(std::move(row));
    }
    Json j;
    j["p"] = s.p;
    j["n"] = s.n;
    j["sample"] = s.sample_size;
    j["generators_in_sample"] = s.generators_in_sample;
    j["max_brute_force_steps"] = s.max_brute_force_steps;
    j["agreement"] = s.agreement;
    j["timings"] = std::move(timings);
    return j;
}

Json make_record(std::string_view command, Json payload) {
    Json j;
    j["schema_version"] = std::string(kSchemaVersion);
    j["command"] = std::string(command);
    j["payload"] = std::move(payload);
    return j;
}

std::string dump_record(const Json& record) {
    return record.dump();
}

namespace {

enum class Format { Table, Json, Csv };

struct Options {
    std::uint64_t p = 0;
    std::int64_t n = 0;
    bool n_given = false;
    std::int64_t a = 0;
    std::int64_t b = 0;
    Format format = Format::Table;
    unsigned threads = 1;
    std::optional<std::uint64_t> limit;
    std::uint64_t max_p = 0;
    bool include_minus_one = false;
    std::uint64_t sample = 100;
};

// Input errors are reported with exit code 2 and a one-line diagnostic.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OddPrime checked_prime(std::uint64_t p) {
    try {
        return OddPrime(p);
    } catch (const Error&) {
        throw UsageError("p must be an odd prime in [3, " + std::to_string(kMaxModulus) +
                         "], got " + std::to_string(p));
    }
}

FieldContext checked_context(const Options& opt) {
    const OddPrime p = checked_prime(opt.p);
    if (!opt.n_given) return FieldContext::with_smallest_nonresidue(p);
    try {
        return FieldContext(p, opt.n);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotNonresidue) {
            throw UsageError("n is a quadratic residue mod p (n = " + std::to_string(opt.n) +
                             ", p = " + std::to_string(p.value()) + ")");
        }
        if (e.code() == ErrorCode::DividesModulus) {
            throw UsageError("n is divisible by p (n = " + std::to_string(opt.n) +
                             ", p = " + std::to_string(p.value()) + ")");
        }
        throw;
    }
}

void require_no_csv(const Options& opt, std::string_view command) {
    if (opt.format == Format::Csv) {
        throw UsageError("--format csv is only supported by enumerate, not " + std::string(command));
    }
}

void emit(std::ostream& out, std::string_view command, Json payload) {
    out << dump_record(make_record(command, std::move(payload))) << '\n';
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

int cmd_classify(const Options& opt, std::ostream& out) {
    require_no_csv(opt, "classify");
    const FieldContext ctx = checked_context(opt);
    const Fp2Element u(ctx, opt.a, opt.b);
    if (u.is_zero()) throw UsageError("the element a + b√n is zero mod p");

    const ClassificationResult r = classify(u);
    if (opt.format == Format::Json) {
        emit(out, "classify", to_payload(r));
    } else {
        out << std::left;
        auto row = [&](std::string_view key, const std::string& value) {
            out << std::setw(20) << key << value << '\n';
        };
        row("p", std::to_string(ctx.p().value()));
        row("n", std::to_string(ctx.n_input()) + " (≡ " + std::to_string(ctx.n().value()) + ")");
        row("element", u.to_string());
        row("norm", std::to_string(r.norm_value.value()));
        row("norm_is_primitive", yes_no(r.norm_is_primitive));
        row("norm_order", std::to_string(r.norm_order));
        row("f_value", r.f_value.to_string());
        row("f_order", std::to_string(r.f_order));
        row("f_generates_kernel", yes_no(r.f_generates_kernel));
        row("verdict", r.is_generator ? "generator" : "non-generator");
    }
    return r.is_generator ? kSuccess : kNegative;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
    const FieldContext ctx = checked_context(opt);
    const std::vector<Fp2Element> generators = enumerate_generators(ctx);
    const std::uint64_t phi = euler_totient(factorize(ctx.unit_count()));
    const std::size_t shown =
        opt.limit ? std::min<std::size_t>(*opt.limit, generators.size()) : generators.size();

    switch (opt.format) {
        case Format::Json: {
            Json listing = Json::array();
            for (std::size_t i = 0; i < shown; ++i) listing.push_back(to_json(generators[i]));
            Json payload;
            payload["p"] = ctx.p().value();
            payload["n"] = ctx.n_input();
            payload["n_reduced"] = ctx.n().value();
            payload["limit"] = opt.limit ? Json(*opt.limit) : Json(nullptr);
            payload["generators"] = std::move(listing);
            payload["count"] = generators.size();
            payload["phi"] = phi;
            emit(out, "enumerate", std::move(payload));
            break;
        }
        case Format::Csv:
            out << "a,b\n";
            for (std::size_t i = 0; i < shown; ++i) {
                out << generators[i].a() << ',' << generators[i].b() << '\n';
            }
            out << "#count=" << generators.size() << " phi=" << phi << '\n';
            break;
        case Format::Table:
            out << "generators of F_" << ctx.p().value() << "^2 = F_" << ctx.p().value() << "(√"
                << ctx.n().value() << ")\n";
            for (std::size_t i = 0; i < shown; ++i) out << "  " << generators[i].to_string() << '\n';
            out << "count=" << generators.size() << " phi=" << phi << '\n';
            break;
    }
    return kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    require_no_csv(opt, "verify");
    if (opt.max_p < 3 || opt.max_p > kMaxModulus) {
        throw UsageError("--max-p must be in [3, " + std::to_string(kMaxModulus) + "]");
    }

    std::vector<VerificationReport> reports;
    for (std::uint64_t q = 3; q <= opt.max_p; q += 2) {
        if (!is_prime_trial_division(q)) continue;
        reports.push_back(verify_theorem(FieldContext::with_smallest_nonresidue(q), opt.threads));
        if (opt.include_minus_one && q % 4 == 3) {
            reports.push_back(verify_theorem(FieldContext(q, -1), opt.threads));
        }
    }

    std::uint64_t total_mismatches = 0;
    bool all_passed = true;
    for (const auto& r : reports) {
        total_mismatches += r.mismatches.size();
        all_passed = all_passed && r.passed();
    }

    if (opt.format == Format::Json) {
        Json rows = Json::array();
        for (const auto& r : reports) rows.push_back(to_json(r));
        Json payload;
        payload["max_p"] = opt.max_p;
        payload["include_minus_one"] = opt.include_minus_one;
        payload["reports"] = std::move(rows);
        payload["total_mismatches"] = total_mismatches;
        payload["all_passed"] = all_passed;
        emit(out, "verify", std::move(payload));
    } else {
        out << std::right << std::setw(6) << "p" << std::setw(6) << "n" << std::setw(8) << "units"
            << std::setw(10) << "gen_thm" << std::setw(10) << "gen_brute" << std::setw(8) << "phi"
            << std::setw(8) << "ker_N" << std::setw(8) << "im_N" << std::setw(8) << "im_f"
            << std::setw(12) << "mismatches" << std::setw(12) << "elapsed_ms" << '\n';
        for (const auto& r : reports) {
            out << std::setw(6) << r.p << std::setw(6) << r.n << std::setw(8) << r.total_units
                << std::setw(10) << r.generator_count_theorem << std::setw(10)
                << r.generator_count_oracle << std::setw(8) << r.phi_p2_minus_1 << std::setw(8)
                << r.kernel_size << std::setw(8) << r.norm_image_size << std::setw(8)
                << r.f_image_size << std::setw(12) << r.mismatches.size() << std::setw(12)
                << std::fixed << std::setprecision(2) << r.elapsed_ms << '\n';
            for (const Mismatch& m : r.mismatches) {
                out << "    " << to_string(m.kind) << " at (" << m.a << ", " << m.b
                    << "): criterion=" << yes_no(m.criterion) << " order=" << m.oracle_order << '\n';
            }
        }
        out << "total_mismatches=" << total_mismatches << " all_passed=" << yes_no(all_passed) << '\n';
    }
    return all_passed ? kSuccess : kNegative;
}

int cmd_residues(const Options& opt, std::ostream& out) {
    require_no_csv(opt, "residues");
    const OddPrime p = checked_prime(opt.p);
    const std::vector<FpElement> residues = quadratic_residues(p);
    const std::uint64_t expected = (p - 1) / 2;

    if (opt.format == Format::Json) {
        Json values = Json::array();
        for (const auto& r : residues) values.push_back(r.value());
        Json payload;
        payload["p"] = p.value();
        payload["residues"] = std::move(values);
        payload["count"] = residues.size();
        payload["expected"] = expected;
        emit(out, "residues", std::move(payload));
    } else {
        out << "Q(" << p.value() << ") = {";
        for (std::size_t i = 0; i < residues.size(); ++i) {
            out << (i ? ", " : "") << residues[i].value();
        }
        out << "}\ncount=" << residues.size() << " expected=" << expected << '\n';
    }
    return kSuccess;
}

int cmd_bench(const Options& opt, std::ostream& out) {
    require_no_csv(opt, "bench");
    if (opt.sample == 0) throw UsageError("--sample must be at least 1");
    const FieldContext ctx = checked_context(opt);
    const BenchmarkSummary s = benchmark_classification(ctx, opt.sample);

    if (opt.format == Format::Json) {
        emit(out, "bench", to_json(s));
    } else {
        out << "p=" << s.p << " n=" << s.n << " sample=" << s.sample_size
            << " generators=" << s.generators_in_sample << '\n';
        out << std::left << std::setw(22) << "method" << std::right << std::setw(14) << "mean_ns"
            << std::setw(14) << "median_ns" << '\n';
        for (const auto& t : s.timings) {
            out << std::left << std::setw(22) << t.method << std::right << std::fixed
                << std::setprecision(1) << std::setw(14) << t.mean_ns << std::setw(14)
                << t.median_ns << '\n';
        }
        out << "agreement=" << yes_no(s.agreement) << '\n';
    }
    return s.agreement ? kSuccess : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generators of F_{p^2}^* via the norm map"};
    app.require_subcommand(1);

    Options opt;
    const std::map<std::string, Format> formats{
        {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

    auto add_common = [&](CLI::App* sub, bool wants_p, bool wants_n) {
        if (wants_p) {
            sub->add_option("--p", opt.p, "odd prime p")->required()->check(
                CLI::Range(std::uint64_t{0}, kMaxModulus));
        }
        if (wants_n) {
            sub->add_option("--n", opt.n, "quadratic nonresidue mod p (default: smallest)")
                ->each([&](const std::string&) { opt.n_given = true; });
        }
        sub->add_option("--format", opt.format, "table|json|csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--threads", opt.threads, "worker threads for verify (0 = all cores)")
            ->check(CLI::Range(0u, 1024u));
    };

    auto* classify_cmd = app.add_subcommand("classify", "decide whether a + b√n generates F_{p^2}^*");
    add_common(classify_cmd, true, true);
    classify_cmd->add_option("--a", opt.a, "coefficient of 1")->required();
    classify_cmd->add_option("--b", opt.b, "coefficient of √n")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list every generator of F_{p^2}^*");
    add_common(enumerate_cmd, true, true);
    enumerate_cmd->add_option("--limit", opt.limit, "print at most this many generators");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive criterion vs brute-force sweep");
    add_common(verify_cmd, false, false);
    verify_cmd->add_option("--max-p", opt.max_p, "largest prime to sweep")->required();
    verify_cmd->add_flag("--include-minus-one", opt.include_minus_one,
                         "also sweep n = -1 when p ≡ 3 (mod 4)");

    auto* residues_cmd = app.add_subcommand("residues", "list the quadratic residues mod p");
    add_common(residues_cmd, true, false);

    auto* bench_cmd = app.add_subcommand("bench", "time three generator tests on a sample");
    add_common(bench_cmd, true, true);
    bench_cmd->add_option("--sample", opt.sample, "number of sampled units");

    std::vector<const char*> argv{"fp2gen"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(opt, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(opt, out);
        if (verify_cmd->parsed()) return cmd_verify(opt, out);
        if (residues_cmd->parsed()) return cmd_residues(opt, out);
        if (bench_cmd->parsed()) return cmd_bench(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace fp2gen::cli
