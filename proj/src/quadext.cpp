#include "fp2gen/quadext.hpp"

#include <numeric>
#include <sstream>

namespace fp2gen {

FieldContext::FieldContext(std::uint64_t p, std::int64_t n) {
    const OddPrime prime(p);
    if (!is_quadratic_nonresidue(n, prime)) {
        throw Error(ErrorCode::NotNonresidue, "n = " + std::to_string(n) +
                                                  " is a quadratic residue mod p = " +
                                                  std::to_string(p));
    }
    Factorization lower = factorize(p - 1);
    Factorization upper = factorize(p + 1);
    if (std::gcd(lower.target(), upper.target()) != 2) {
        throw Error(ErrorCode::InvalidModulus, "gcd(p - 1, p + 1) != 2 for p = " + std::to_string(p));
    }
    data_ = std::make_shared<const Data>(
        Data{prime, n, FpElement(n, prime), std::move(lower), std::move(upper)});
}

FieldContext FieldContext::with_smallest_nonresidue(std::uint64_t p) {
    return FieldContext(p, smallest_nonresidue(OddPrime(p)));
}

Fp2Element::Fp2Element(const FieldContext& ctx, std::int64_t a, std::int64_t b)
    : a_(FpElement(a, ctx.p()).value()), b_(FpElement(b, ctx.p()).value()), ctx_(ctx) {}

void Fp2Element::require_same_context(const Fp2Element& rhs) const {
    if (!(ctx_ == rhs.ctx_)) {
        throw Error(ErrorCode::ContextMismatch, "elements belong to different fields: F_" +
                                                   std::to_string(ctx_.p().value()) + "(√" +
                                                   std::to_string(ctx_.n().value()) + ") vs F_" +
                                                   std::to_string(rhs.ctx_.p().value()) + "(√" +
                                                   std::to_string(rhs.ctx_.n().value()) + ")");
    }
}

Fp2Element Fp2Element::operator+(const Fp2Element& rhs) const {
    require_same_context(rhs);
    const std::uint64_t p = ctx_.p();
    return {ctx_, (a_ + rhs.a_) % p, (b_ + rhs.b_) % p, Reduced{}};
}

Fp2Element Fp2Element::operator-(const Fp2Element& rhs) const {
    return *this + (-rhs);
}

Fp2Element Fp2Element::operator-() const {
    const std::uint64_t p = ctx_.p();
    return {ctx_, (p - a_) % p, (p - b_) % p, Reduced{}};
}

Fp2Element Fp2Element::operator*(const Fp2Element& rhs) const {
    require_same_context(rhs);
    const std::uint64_t p = ctx_.p();
    const std::uint64_t n = ctx_.n().value();
    // (a1 + b1 r)(a2 + b2 r) = (a1 a2 + n b1 b2) + (a1 b2 + a2 b1) r, r^2 = n
    const std::uint64_t nb1b2 = n * b_ % p * rhs.b_ % p;
    const std::uint64_t a = (a_ * rhs.a_ % p + nb1b2) % p;
    const std::uint64_t b = (a_ * rhs.b_ % p + rhs.a_ * b_ % p) % p;
    return {ctx_, a, b, Reduced{}};
}

Fp2Element Fp2Element::operator*(const FpElement& scalar) const {
    if (scalar.modulus() != ctx_.p()) {
        throw Error(ErrorCode::ContextMismatch, "scalar is not in the base field");
    }
    const std::uint64_t p = ctx_.p();
    return {ctx_, a_ * scalar.value() % p, b_ * scalar.value() % p, Reduced{}};
}

bool operator==(const Fp2Element& lhs, const Fp2Element& rhs) {
    lhs.require_same_context(rhs);
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::string Fp2Element::to_string() const {
    std::ostringstream os;
    os << a_ << '+' << b_ << "√" << ctx_.n().value();
    return os.str();
}

Fp2Element multiply(const Fp2Element& u, const Fp2Element& v) {
    return u * v;
}

Fp2Element inverse(const Fp2Element& u) {
    if (u.is_zero()) throw Error(ErrorCode::ZeroInverse, "0 has no inverse in F_{p^2}");
    return conjugate(u) * mod_inverse(norm(u));
}

Fp2Element power(const Fp2Element& u, std::uint64_t k) {
    return generic_pow(u, k, std::multiplies<>{}, Fp2Element::one(u.context()));
}

Fp2Element conjugate(const Fp2Element& u) {
    const std::uint64_t p = u.ctx_.p();
    return {u.ctx_, u.a_, (p - u.b_) % p, Fp2Element::Reduced{}};
}

FpElement norm(const Fp2Element& u) {
    const FpElement a = u.a_fp();
    const FpElement b = u.b_fp();
    return a * a - u.context().n() * b * b;
}

namespace {

void require_unit(const Fp2Element& u, const char* op) {
    if (u.is_zero()) throw Error(ErrorCode::ZeroElement, std::string(op) + " is undefined at 0");
}

}  // namespace

Fp2Element f_map(const Fp2Element& u) {
    require_unit(u, "f_map");
    return (u * u) * mod_inverse(norm(u));
}

bool in_kernel_of_norm(const Fp2Element& u) {
    require_unit(u, "in_kernel_of_norm");
    return norm(u).is_one();
}

Fp2Element unit_at(const FieldContext& ctx, std::uint64_t index) {
    if (index >= ctx.unit_count()) {
        throw Error(ErrorCode::InvalidArgument, "unit index " + std::to_string(index) +
                                                    " out of range for p = " +
                                                    std::to_string(ctx.p().value()));
    }
    const std::uint64_t p = ctx.p();
    const std::uint64_t code = index + 1;
    return {ctx, static_cast<std::int64_t>(code / p), static_cast<std::int64_t>(code % p)};
}

std::uint64_t unit_index(const Fp2Element& u) {
    require_unit(u, "unit_index");
    return u.a() * u.context().p() + u.b() - 1;
}

}  // namespace fp2gen
