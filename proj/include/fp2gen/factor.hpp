#pragma once

/**
 * @file factor.hpp
 * @brief Integer factorization, Euler's totient and multiplicative orders.
 *
 * Supported range: every 64-bit unsigned integer. Factorization first strips
 * primes below kTrialDivisionCutoff by trial division; any cofactor left
 * over is split with Brent's variant of Pollard's rho (polynomial x^2 + c,
 * fixed seeds) and certified with a deterministic Miller-Rabin test, so
 * results are reproducible run to run.
 *
 * multiplicative_order() is generic over the group: the caller supplies the
 * product and the identity, so the same routine serves F_p^*, F_{p^2}^* and
 * the kernel of the norm.
 */

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fp2gen/errors.hpp"

namespace fp2gen {

inline constexpr std::uint64_t kTrialDivisionCutoff = 1u << 16;

// (a * b) mod m and a^e mod m over the full 64-bit range.
constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic trial division up to sqrt(m). Intended for desk-scale m.
bool is_prime_trial_division(std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t m);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer. Primes are strictly increasing
/// and their product with multiplicity equals target().
class Factorization {
public:
    /// Validates the invariants; throws Error(InvalidArgument) if they fail.
    Factorization(std::uint64_t target, std::vector<PrimePower> factors);

    std::uint64_t target() const noexcept { return target_; }
    std::span<const PrimePower> factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }

    /// Multiplies the prime powers back together.
    std::uint64_t product() const;

    std::string to_string() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::uint64_t target_;
    std::vector<PrimePower> factors_;
};

/// m >= 1; factorize(1) has no factors.
Factorization factorize(std::uint64_t m);

std::uint64_t euler_totient(const Factorization& f);

/// x^exp by square-and-multiply in an arbitrary monoid.
template <class T, class Mul>
T generic_pow(T base, std::uint64_t exp, Mul&& mul, T identity) {
    T result = std::move(identity);
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        exp >>= 1;
        if (exp > 0) base = mul(base, base);
    }
    return result;
}

/**
 * Order of x in a group of order group.target().
 *
 * Starts from the group order and divides out each prime factor while the
 * power stays at the identity; never scans exponents one by one.
 * Throws Error(NotInGroup) if x^group_order is not the identity.
 */
template <class T, class Mul>
std::uint64_t multiplicative_order(const T& x, const Factorization& group, Mul&& mul,
                                   const T& identity) {
    std::uint64_t order = group.target();
    if (!(generic_pow(x, order, mul, identity) == identity)) {
        throw Error(ErrorCode::NotInGroup,
                    "element does not satisfy x^" + std::to_string(order) + " = 1");
    }
    for (const auto& [q, e] : group.factors()) {
        for (unsigned i = 0; i < e; ++i) {
            if (generic_pow(x, order / q, mul, identity) == identity) {
                order /= q;
            } else {
                break;
            }
        }
    }
    return order;
}

}  // namespace fp2gen
