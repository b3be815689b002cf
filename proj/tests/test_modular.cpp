#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "fp2gen/modular.hpp"
#include "oracles.hpp"

using namespace fp2gen;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected fp2gen::Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("OddPrime rejects 2, composites and out-of-range moduli") {
    CHECK(OddPrime(3).value() == 3);
    CHECK(OddPrime(4294967291ull).value() == 4294967291ull);
    for (std::uint64_t bad : {0ull, 1ull, 2ull, 4ull, 9ull, 91ull, 4294967311ull}) {
        CHECK(code_of([&] { OddPrime{bad}; }) == ErrorCode::InvalidModulus);
    }
}

TEST_CASE("FpElement stores the canonical representative") {
    const OddPrime p(7);
    CHECK(FpElement(-1, p).value() == 6);
    CHECK(FpElement(-15, p).value() == 6);
    CHECK(FpElement(14, p).value() == 0);
    CHECK(FpElement(-1, p) == FpElement(13, p));
    CHECK(-FpElement(0, p) == FpElement(0, p));
    CHECK(FpElement(3, p) - FpElement(5, p) == FpElement(5, p));
    CHECK(code_of([&] { (void)(FpElement(1, p) * FpElement(1, OddPrime(5))); }) ==
          ErrorCode::ContextMismatch);
}

TEST_CASE("mod_pow") {
    const OddPrime seven(7);
    CHECK(mod_pow(FpElement(2, seven), 0).value() == 1);
    CHECK(mod_pow(FpElement(0, seven), 0).value() == 1);
    CHECK(mod_pow(FpElement(0, seven), 5).value() == 0);
    CHECK(mod_pow(FpElement(2, seven), 3).value() == 1);
    for (std::uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        const OddPrime p(q);
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(q); ++a) {
            CHECK(mod_pow(FpElement(a, p), q - 1).is_one());
        }
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(FpElement(2, OddPrime(3))).value() == 2);
    for (std::uint64_t q : oracle::odd_primes_up_to(101)) {
        const OddPrime p(q);
        CHECK(mod_inverse(FpElement(1, p)).is_one());
        CHECK(mod_inverse(FpElement(-1, p)).value() == q - 1);
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(q); ++a) {
            const FpElement x(a, p);
            REQUIRE((x * mod_inverse(x)).is_one());
        }
    }
    const OddPrime big(4294967291ull);
    const FpElement x(123456789, big);
    CHECK((x * mod_inverse(x)).is_one());
    CHECK(code_of([] { mod_inverse(FpElement(0, OddPrime(5))); }) == ErrorCode::ZeroInverse);
}

TEST_CASE("legendre_symbol: examples") {
    CHECK(legendre_symbol(1, OddPrime(7)) == 1);
    CHECK(legendre_symbol(2, OddPrime(3)) == -1);
    CHECK(legendre_symbol(-1, OddPrime(7)) == -1);
    CHECK(code_of([] { legendre_symbol(14, OddPrime(7)); }) == ErrorCode::DividesModulus);
    CHECK(code_of([] { legendre_symbol(0, OddPrime(3)); }) == ErrorCode::DividesModulus);
}

TEST_CASE("legendre_symbol matches set membership for p <= 101") {
    for (std::uint64_t q : oracle::odd_primes_up_to(101)) {
        const OddPrime p(q);
        for (std::int64_t a = -static_cast<std::int64_t>(q) + 1; a < 2 * static_cast<std::int64_t>(q); ++a) {
            if (oracle::reduce(a, q) == 0) continue;
            REQUIRE(legendre_symbol(a, p) == oracle::legendre(a, q));
        }
    }
}

TEST_CASE("legendre_symbol is multiplicative for p <= 101") {
    for (std::uint64_t q : oracle::odd_primes_up_to(101)) {
        const OddPrime p(q);
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(q); ++a) {
            for (std::int64_t b = 1; b < static_cast<std::int64_t>(q); ++b) {
                REQUIRE(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p));
            }
        }
    }
}

TEST_CASE("quadratic_residues") {
    auto values = [](std::uint64_t q) {
        std::vector<std::uint64_t> out;
        for (const auto& r : quadratic_residues(OddPrime(q))) out.push_back(r.value());
        return out;
    };
    CHECK(values(3) == std::vector<std::uint64_t>{1});
    CHECK(values(7) == std::vector<std::uint64_t>{1, 2, 4});
    for (std::uint64_t q : oracle::odd_primes_up_to(499)) {
        const auto qr = values(q);
        REQUIRE(qr.size() == (q - 1) / 2);
        REQUIRE(std::set<std::uint64_t>(qr.begin(), qr.end()) == oracle::squares(q));
    }
}

TEST_CASE("is_quadratic_nonresidue") {
    CHECK(is_quadratic_nonresidue(-1, OddPrime(3)));
    CHECK_FALSE(is_quadratic_nonresidue(-1, OddPrime(5)));
    for (std::uint64_t q : oracle::odd_primes_up_to(101)) {
        CHECK_FALSE(is_quadratic_nonresidue(1, OddPrime(q)));
    }
    CHECK(code_of([] { is_quadratic_nonresidue(10, OddPrime(5)); }) == ErrorCode::DividesModulus);
}

TEST_CASE("smallest_nonresidue") {
    CHECK(smallest_nonresidue(OddPrime(3)) == 2);
    CHECK(smallest_nonresidue(OddPrime(5)) == 2);
    CHECK(smallest_nonresidue(OddPrime(7)) == 3);
    for (std::uint64_t q : oracle::odd_primes_up_to(200)) {
        const std::int64_t n = smallest_nonresidue(OddPrime(q));
        REQUIRE(oracle::legendre(n, q) == -1);
        for (std::int64_t m = 2; m < n; ++m) REQUIRE(oracle::legendre(m, q) == 1);
    }
}

TEST_CASE("is_primitive_root: examples and errors") {
    CHECK(is_primitive_root(FpElement(2, OddPrime(3)), factorize(2)));
    CHECK_FALSE(is_primitive_root(FpElement(2, OddPrime(7)), factorize(6)));
    CHECK(is_primitive_root(FpElement(3, OddPrime(7)), factorize(6)));
    for (std::uint64_t q : {3ull, 5ull, 7ull, 101ull}) {
        CHECK_FALSE(is_primitive_root(FpElement(1, OddPrime(q)), factorize(q - 1)));
    }
    CHECK(code_of([] { is_primitive_root(FpElement(0, OddPrime(7)), factorize(6)); }) ==
          ErrorCode::ZeroElement);
    CHECK(code_of([] { is_primitive_root(FpElement(3, OddPrime(7)), factorize(8)); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("primitive roots: census, residues excluded, order agreement for p <= 101") {
    for (std::uint64_t q : oracle::odd_primes_up_to(101)) {
        const OddPrime p(q);
        const Factorization group = factorize(q - 1);
        const auto residues = oracle::squares(q);
        std::uint64_t count = 0;
        for (std::uint64_t x = 1; x < q; ++x) {
            const FpElement e(static_cast<std::int64_t>(x), p);
            const bool primitive = is_primitive_root(e, group);
            REQUIRE(primitive == (oracle::order_mod_p(x, q) == q - 1));
            REQUIRE(order_in_fp(e, group) == oracle::order_mod_p(x, q));
            if (residues.count(x)) REQUIRE_FALSE(primitive);
            count += primitive;
        }
        REQUIRE(count == oracle::totient(q - 1));
    }
}
