#include "fp2gen/modular.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace fp2gen {

OddPrime::OddPrime(std::uint64_t p) : p_(p) {
    if (p < 3 || p > kMaxModulus || p % 2 == 0 || !is_prime_trial_division(p)) {
        throw Error(ErrorCode::InvalidModulus,
                    "p = " + std::to_string(p) + " is not an odd prime below 2^32");
    }
}

FpElement::FpElement(std::int64_t value, OddPrime p) : p_(p) {
    const auto m = static_cast<std::int64_t>(p.value());
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint64_t>(r);
}

void FpElement::require_same_modulus(const FpElement& rhs) const {
    if (p_ != rhs.p_) {
        throw Error(ErrorCode::ContextMismatch, "operands live in F_" + std::to_string(p_.value()) +
                                                    " and F_" + std::to_string(rhs.p_.value()));
    }
}

FpElement FpElement::operator+(const FpElement& rhs) const {
    require_same_modulus(rhs);
    std::uint64_t s = value_ + rhs.value_;
    if (s >= p_) s -= p_;
    return {s, p_, Reduced{}};
}

FpElement FpElement::operator-(const FpElement& rhs) const {
    require_same_modulus(rhs);
    return {value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + p_ - rhs.value_, p_, Reduced{}};
}

FpElement FpElement::operator-() const {
    return {value_ == 0 ? 0 : p_ - value_, p_, Reduced{}};
}

FpElement FpElement::operator*(const FpElement& rhs) const {
    require_same_modulus(rhs);
    return {value_ * rhs.value_ % p_, p_, Reduced{}};
}

FpElement mod_pow(const FpElement& base, std::uint64_t exp) {
    return {pow_mod(base.value_, exp, base.p_), base.p_, FpElement::Reduced{}};
}

FpElement mod_inverse(const FpElement& a) {
    if (a.is_zero()) {
        throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(a.p_.value()));
    }
    // Invariant: old_s * a == old_r (mod p).
    std::int64_t old_r = static_cast<std::int64_t>(a.value_), r = static_cast<std::int64_t>(a.p_.value());
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    return FpElement(old_s, a.p_);
}

int legendre_symbol(std::int64_t a, OddPrime p) {
    const FpElement x(a, p);
    if (x.is_zero()) {
        throw Error(ErrorCode::DividesModulus,
                    std::to_string(a) + " is divisible by " + std::to_string(p.value()));
    }
    return mod_pow(x, (p - 1) / 2).is_one() ? 1 : -1;
}

std::vector<FpElement> quadratic_residues(OddPrime p) {
    std::vector<FpElement> squares;
    squares.reserve(p - 1);
    for (std::uint64_t x = 1; x < p; ++x) {
        const FpElement e(static_cast<std::int64_t>(x), p);
        squares.push_back(e * e);
    }
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
    return squares;
}

bool is_quadratic_nonresidue(std::int64_t n, OddPrime p) {
    return legendre_symbol(n, p) == -1;
}

std::int64_t smallest_nonresidue(OddPrime p) {
    std::int64_t n = 2;
    while (legendre_symbol(n, p) != -1) ++n;
    return n;
}

namespace {

void require_p_minus_1(const FpElement& a, const Factorization& p_minus_1) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "0 is not in F_p^*");
    if (p_minus_1.target() != a.modulus() - 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "expected a factorization of " + std::to_string(a.modulus() - 1) + ", got " +
                        std::to_string(p_minus_1.target()));
    }
}

}  // namespace

bool is_primitive_root(const FpElement& a, const Factorization& p_minus_1) {
    require_p_minus_1(a, p_minus_1);
    const std::uint64_t group_order = p_minus_1.target();
    return std::none_of(p_minus_1.factors().begin(), p_minus_1.factors().end(),
                        [&](const PrimePower& f) { return mod_pow(a, group_order / f.prime).is_one(); });
}

std::uint64_t order_in_fp(const FpElement& a, const Factorization& p_minus_1) {
    require_p_minus_1(a, p_minus_1);
    return multiplicative_order(a, p_minus_1, std::multiplies<>{}, FpElement(1, a.modulus()));
}

}  // namespace fp2gen
