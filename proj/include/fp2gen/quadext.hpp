#pragma once

/**
 * @file quadext.hpp
 * @brief The quadratic extension F_{p^2} = F_p(sqrt n).
 *
 * Elements are dense pairs (a, b) meaning a + b*sqrt(n) over the fixed basis
 * {1, sqrt n}. Each element carries a FieldContext handle; contexts compare
 * by (p, n mod p), so elements from separately built but equal contexts mix
 * freely.
 *
 * norm(0) is 0 at this level. Operations that only make sense on the unit
 * group (f_map, in_kernel_of_norm, inverse) reject zero explicitly.
 */

#include <cstdint>
#include <memory>
#include <ranges>
#include <string>

#include "fp2gen/errors.hpp"
#include "fp2gen/factor.hpp"
#include "fp2gen/modular.hpp"

namespace fp2gen {

/// Immutable (p, n) pair with n a verified nonresidue, plus cached
/// factorizations of p - 1 and p + 1. Cheap to copy.
class FieldContext {
public:
    /// `n` may be any integer not divisible by p; it is reduced mod p.
    /// Throws Error(InvalidModulus), Error(DividesModulus) or Error(NotNonresidue).
    FieldContext(std::uint64_t p, std::int64_t n);

    /// Uses smallest_nonresidue(p).
    static FieldContext with_smallest_nonresidue(std::uint64_t p);

    OddPrime p() const noexcept { return data_->p; }
    /// n as the caller gave it, e.g. -1.
    std::int64_t n_input() const noexcept { return data_->n_input; }
    /// n reduced into [0, p).
    FpElement n() const noexcept { return data_->n; }

    const Factorization& p_minus_1() const noexcept { return data_->p_minus_1; }
    const Factorization& p_plus_1() const noexcept { return data_->p_plus_1; }

    /// p^2 - 1, the order of F_{p^2}^*.
    std::uint64_t unit_count() const noexcept { return data_->p.value() * data_->p.value() - 1; }

    friend bool operator==(const FieldContext& lhs, const FieldContext& rhs) {
        return lhs.data_ == rhs.data_ || (lhs.p() == rhs.p() && lhs.n() == rhs.n());
    }

private:
    struct Data {
        OddPrime p;
        std::int64_t n_input;
        FpElement n;
        Factorization p_minus_1;
        Factorization p_plus_1;
    };
    std::shared_ptr<const Data> data_;
};

class Fp2Element {
public:
    /// a + b*sqrt(n); both coordinates reduced mod p.
    Fp2Element(const FieldContext& ctx, std::int64_t a, std::int64_t b = 0);

    static Fp2Element zero(const FieldContext& ctx) { return {ctx, 0, 0}; }
    static Fp2Element one(const FieldContext& ctx) { return {ctx, 1, 0}; }
    static Fp2Element sqrt_n(const FieldContext& ctx) { return {ctx, 0, 1}; }

    std::uint64_t a() const noexcept { return a_; }
    std::uint64_t b() const noexcept { return b_; }
    FpElement a_fp() const { return {static_cast<std::int64_t>(a_), ctx_.p()}; }
    FpElement b_fp() const { return {static_cast<std::int64_t>(b_), ctx_.p()}; }
    const FieldContext& context() const noexcept { return ctx_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    bool is_one() const noexcept { return a_ == 1 && b_ == 0; }
    /// True when the element lies in the base field F_p.
    bool is_base() const noexcept { return b_ == 0; }

    Fp2Element operator+(const Fp2Element& rhs) const;
    Fp2Element operator-(const Fp2Element& rhs) const;
    Fp2Element operator-() const;
    /// Throws Error(ContextMismatch) across fields.
    Fp2Element operator*(const Fp2Element& rhs) const;
    /// Multiplies both coordinates by a base-field scalar.
    Fp2Element operator*(const FpElement& scalar) const;

    /// Structural equality; comparing across fields throws Error(ContextMismatch).
    friend bool operator==(const Fp2Element& lhs, const Fp2Element& rhs);

    /// "a+b√n" (with the reduced n spelled out).
    std::string to_string() const;

private:
    struct Reduced {};
    Fp2Element(const FieldContext& ctx, std::uint64_t a, std::uint64_t b, Reduced)
        : a_(a), b_(b), ctx_(ctx) {}
    void require_same_context(const Fp2Element& rhs) const;

    std::uint64_t a_;
    std::uint64_t b_;
    FieldContext ctx_;

    friend Fp2Element conjugate(const Fp2Element&);
};

Fp2Element multiply(const Fp2Element& u, const Fp2Element& v);

/// conjugate(u) / norm(u). Throws Error(ZeroInverse) for 0.
Fp2Element inverse(const Fp2Element& u);

/// Square-and-multiply; u^0 = 1.
Fp2Element power(const Fp2Element& u, std::uint64_t k);

/// a - b*sqrt(n): the automorphism of F_{p^2} fixing F_p.
Fp2Element conjugate(const Fp2Element& u);

/// a^2 - n*b^2. Equals u * conjugate(u).
FpElement norm(const Fp2Element& u);

/// u^2 / N(u) = u / conjugate(u), a point of the norm-1 subgroup.
/// Throws Error(ZeroElement) for 0.
Fp2Element f_map(const Fp2Element& u);

/// norm(u) == 1. Throws Error(ZeroElement) for 0.
bool in_kernel_of_norm(const Fp2Element& u);

/// The unit with position `index` in lexicographic (a, b) order, skipping
/// (0, 0): index 0 is sqrt(n), index p^2 - 2 is (p-1) + (p-1)sqrt(n).
Fp2Element unit_at(const FieldContext& ctx, std::uint64_t index);

/// Inverse of unit_at.
std::uint64_t unit_index(const Fp2Element& u);

/// All p^2 - 1 units, each exactly once, in unit_at order.
inline auto enumerate_units(const FieldContext& ctx) {
    return std::views::iota(std::uint64_t{0}, ctx.unit_count()) |
           std::views::transform([ctx](std::uint64_t i) { return unit_at(ctx, i); });
}

}  // namespace fp2gen
