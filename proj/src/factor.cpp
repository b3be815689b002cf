#include "fp2gen/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace fp2gen {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidModulus: return "InvalidModulus";
        case ErrorCode::DividesModulus: return "DividesModulus";
        case ErrorCode::NotNonresidue: return "NotNonresidue";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::NotInGroup: return "NotInGroup";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime_trial_division(std::uint64_t m) {
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0 || m % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= m / d; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (m % q == 0) return m == q;
    }
    std::uint64_t d = m - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // These seven bases are known to be sufficient for all n < 2^64.
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                            1795265022ull}) {
        a %= m;
        if (a == 0) continue;
        std::uint64_t x = pow_mod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization::Factorization(std::uint64_t target, std::vector<PrimePower> factors)
    : target_(target), factors_(std::move(factors)) {
    if (target_ == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        if (f.exponent == 0 || !is_prime(f.prime) ||
            (i > 0 && factors_[i - 1].prime >= f.prime)) {
            throw Error(ErrorCode::InvalidArgument, "malformed factorization of " +
                                                        std::to_string(target_));
        }
    }
    if (product() != target_) {
        throw Error(ErrorCode::InvalidArgument,
                    "factors do not multiply to " + std::to_string(target_));
    }
}

std::uint64_t Factorization::product() const {
    unsigned __int128 acc = 1;
    for (const auto& [q, e] : factors_) {
        for (unsigned i = 0; i < e; ++i) {
            acc *= q;
            if (acc > UINT64_MAX) return 0;
        }
    }
    return static_cast<std::uint64_t>(acc);
}

std::string Factorization::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) os << " * ";
        os << factors_[i].prime;
        if (factors_[i].exponent > 1) os << '^' << factors_[i].exponent;
    }
    return os.str();
}

namespace {

// Brent's cycle detection on x -> x^2 + c mod m. Returns a nontrivial
// divisor of composite odd m, or m itself when this c fails.
std::uint64_t brent_rho(std::uint64_t m, std::uint64_t c) {
    constexpr std::uint64_t kBatch = 128;
    auto step = [&](std::uint64_t x) { return (mul_mod(x, x, m) + c) % m; };

    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = step(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
                y = step(y);
                q = mul_mod(q, x > y ? x - y : y - x, m);
            }
            g = std::gcd(q, m);
        }
    }
    if (g == m) {
        // The batched product collapsed to 0; replay one step at a time.
        do {
            ys = step(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, m);
        } while (g == 1);
    }
    return g;
}

void split(std::uint64_t m, std::map<std::uint64_t, unsigned>& out) {
    if (m == 1) return;
    if (is_prime(m)) {
        ++out[m];
        return;
    }
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t d = brent_rho(m, c);
        if (d != m) {
            split(d, out);
            split(m / d, out);
            return;
        }
    }
}

}  // namespace

Factorization factorize(std::uint64_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
    const std::uint64_t target = m;
    std::map<std::uint64_t, unsigned> counts;
    for (std::uint64_t d = 2; d < kTrialDivisionCutoff && d <= m / d; d += (d == 2 ? 1 : 2)) {
        while (m % d == 0) {
            ++counts[d];
            m /= d;
        }
    }
    split(m, counts);

    std::vector<PrimePower> factors;
    factors.reserve(counts.size());
    for (const auto& [q, e] : counts) factors.push_back({q, e});
    return Factorization(target, std::move(factors));
}

std::uint64_t euler_totient(const Factorization& f) {
    std::uint64_t phi = 1;
    for (const auto& [q, e] : f.factors()) {
        phi *= q - 1;
        for (unsigned i = 1; i < e; ++i) phi *= q;
    }
    return phi;
}

}  // namespace fp2gen
