#pragma once

/**
 * @file theorem.hpp
 * @brief Generators of F_{p^2}^* via the norm and the kernel projection.
 *
 * u generates F_{p^2}^* exactly when N(u) is a primitive root mod p and
 * f(u) = u^2 / N(u) generates the norm-1 subgroup (order p + 1). classify()
 * decides this using only the factorizations of p - 1 and p + 1. The oracle,
 * brute_force_order(), multiplies until it returns to 1 and never touches
 * the factor module; verify_theorem() runs both over every unit.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fp2gen/quadext.hpp"

namespace fp2gen {

struct ClassificationResult {
    Fp2Element element;
    FpElement norm_value;
    bool norm_is_primitive;
    std::uint64_t norm_order;
    Fp2Element f_value;
    std::uint64_t f_order;
    bool f_generates_kernel;  // f_order == p + 1
    bool is_generator;        // norm_is_primitive && f_generates_kernel
};

/// Throws Error(ZeroElement) for 0.
ClassificationResult classify(const Fp2Element& u);

/// Least k >= 1 with u^k = 1, by repeated multiplication.
/// Throws Error(ZeroElement) for 0.
std::uint64_t brute_force_order(const Fp2Element& u);

/// Order of u in F_{p^2}^* from a factorization of p^2 - 1 (the "blind"
/// route that ignores the norm structure).
std::uint64_t order_via_group_factorization(const Fp2Element& u, const Factorization& p2_minus_1);

struct Mismatch {
    enum class Kind {
        Criterion,  // classify disagrees with the brute-force order
        HalfOrder,  // both sub-criteria hold yet ord(u) = (p^2 - 1) / 2
        Forward,    // u generates but N(u) or f(u) does not
        Lcm,        // lcm(ord N(u), ord f(u)) does not divide ord(u)
    };

    Kind kind;
    std::uint64_t a;
    std::uint64_t b;
    bool criterion;
    std::uint64_t oracle_order;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

std::string_view to_string(Mismatch::Kind kind) noexcept;

struct VerificationReport {
    std::uint64_t p = 0;
    std::int64_t n = 0;
    std::uint64_t n_reduced = 0;
    std::uint64_t total_units = 0;
    std::uint64_t generator_count_theorem = 0;
    std::uint64_t generator_count_oracle = 0;
    std::vector<Mismatch> mismatches;
    std::uint64_t phi_p2_minus_1 = 0;
    std::uint64_t kernel_size = 0;
    std::uint64_t norm_image_size = 0;
    std::uint64_t f_image_size = 0;
    double elapsed_ms = 0.0;

    bool passed() const noexcept {
        return mismatches.empty() && generator_count_theorem == phi_p2_minus_1 &&
               generator_count_oracle == phi_p2_minus_1;
    }
};

/**
 * Exhaustive check over every unit: criterion vs oracle, the forward
 * direction, the lcm bound and the half-order dichotomy. Mismatches are
 * collected in enumeration order rather than thrown.
 *
 * `threads` (0 means hardware concurrency) splits the units into contiguous
 * blocks; the merged report is identical for every thread count, apart from
 * elapsed_ms.
 */
VerificationReport verify_theorem(const FieldContext& ctx, unsigned threads = 1);

/// Same counts as verify_theorem() but without the brute-force oracle:
/// generator_count_oracle comes from order_via_group_factorization, so it
/// stays fast for p in the hundreds.
VerificationReport census_theorem(const FieldContext& ctx, unsigned threads = 1);

/// Every u with classify(u).is_generator, in enumeration order.
std::vector<Fp2Element> enumerate_generators(const FieldContext& ctx);

/// The enumeration-least generator.
Fp2Element find_generator(const FieldContext& ctx);

struct MethodTiming {
    std::string method;
    double mean_ns;
    double median_ns;
};

struct BenchmarkSummary {
    std::uint64_t p = 0;
    std::int64_t n = 0;
    std::uint64_t sample_size = 0;
    std::uint64_t generators_in_sample = 0;
    std::uint64_t max_brute_force_steps = 0;
    bool agreement = true;
    std::vector<MethodTiming> timings;  // theorem, group_factorization, brute_force
};

/**
 * Times three generator tests on a reproducible sample of units: the
 * norm/kernel criterion, the order test over a factorization of p^2 - 1,
 * and the brute-force order. Throws Error(InvalidArgument) if
 * sample_size is 0.
 */
BenchmarkSummary benchmark_classification(const FieldContext& ctx, std::uint64_t sample_size);

}  // namespace fp2gen
