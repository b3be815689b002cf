#pragma once

/**
 * @file modular.hpp
 * @brief Arithmetic and quadratic-residue theory in the prime field F_p.
 *
 * Moduli are odd primes below 2^32, so every residue fits in an int64 and
 * every product of two residues fits in a uint64. Primality of p is checked
 * once, by trial division, when an OddPrime is built; everything downstream
 * takes an OddPrime and can rely on it.
 */

#include <cstdint>
#include <vector>

#include "fp2gen/errors.hpp"
#include "fp2gen/factor.hpp"

namespace fp2gen {

inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

/// An odd prime p with 3 <= p <= kMaxModulus.
class OddPrime {
public:
    /// Throws Error(InvalidModulus) for 2, composites and out-of-range values.
    explicit OddPrime(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    operator std::uint64_t() const noexcept { return p_; }

    friend bool operator==(OddPrime, OddPrime) = default;

private:
    std::uint64_t p_;
};

/// A residue class mod p, stored as its representative in [0, p).
class FpElement {
public:
    /// Reduces any integer (including negatives) into [0, p).
    FpElement(std::int64_t value, OddPrime p);

    std::uint64_t value() const noexcept { return value_; }
    OddPrime modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    FpElement operator+(const FpElement& rhs) const;
    FpElement operator-(const FpElement& rhs) const;
    FpElement operator-() const;
    FpElement operator*(const FpElement& rhs) const;

    friend bool operator==(const FpElement&, const FpElement&) = default;
    friend auto operator<=>(const FpElement& lhs, const FpElement& rhs) {
        return lhs.value_ <=> rhs.value_;
    }

private:
    struct Reduced {};
    FpElement(std::uint64_t value, OddPrime p, Reduced) : value_(value), p_(p) {}
    void require_same_modulus(const FpElement& rhs) const;

    std::uint64_t value_;
    OddPrime p_;

    friend FpElement mod_pow(const FpElement&, std::uint64_t);
    friend FpElement mod_inverse(const FpElement&);
};

/// base^exp mod p; 0^0 = 1.
FpElement mod_pow(const FpElement& base, std::uint64_t exp);

/// Extended Euclid. Throws Error(ZeroInverse) for 0.
FpElement mod_inverse(const FpElement& a);

/// Euler's criterion: a^((p-1)/2) is 1 for residues and p-1 for nonresidues.
/// Throws Error(DividesModulus) if p | a.
int legendre_symbol(std::int64_t a, OddPrime p);

/// Q(p) = { x^2 : x in F_p^* }, ascending.
std::vector<FpElement> quadratic_residues(OddPrime p);

bool is_quadratic_nonresidue(std::int64_t n, OddPrime p);

/// Least n >= 2 with legendre_symbol(n, p) = -1.
std::int64_t smallest_nonresidue(OddPrime p);

/// True iff ord(a) = p - 1. `p_minus_1` must factor p - 1.
/// Throws Error(ZeroElement) for 0 and Error(InvalidArgument) on a wrong factorization.
bool is_primitive_root(const FpElement& a, const Factorization& p_minus_1);

/// Order of a nonzero element of F_p^*.
std::uint64_t order_in_fp(const FpElement& a, const Factorization& p_minus_1);

}  // namespace fp2gen
