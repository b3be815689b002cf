// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   acceptance <path-to-fp2gen-binary>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fp2gen/theorem.hpp"
#include "oracles.hpp"

using namespace fp2gen;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::vector<FieldContext> contexts(std::uint64_t limit, bool with_minus_one) {
    std::vector<FieldContext> out;
    for (std::uint64_t q : oracle::odd_primes_up_to(limit)) {
        out.push_back(FieldContext::with_smallest_nonresidue(q));
        if (with_minus_one && q % 4 == 3) out.emplace_back(q, -1);
    }
    return out;
}

std::string where(const FieldContext& ctx) {
    return "p=" + std::to_string(ctx.p().value()) + " n=" + std::to_string(ctx.n_input());
}

std::string where(const Fp2Element& u) {
    return where(u.context()) + " u=" + u.to_string();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome exhaustive_equivalence() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checked = 0;
    for (const auto& ctx : contexts(31, true)) {
        for (const auto& u : enumerate_units(ctx)) {
            ++checked;
            if (classify(u).is_generator != (brute_force_order(u) == ctx.unit_count())) {
                o.fail("mismatch at " + where(u));
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s (limit 10 s)");
    if (o.ok) o.detail = std::to_string(checked) + " units, 0 mismatches, " + std::to_string(secs) + " s";
    return o;
}

Outcome generator_census() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t fields = 0;
    for (const auto& ctx : contexts(199, false)) {
        ++fields;
        const std::uint64_t phi = oracle::totient(ctx.unit_count());
        const std::size_t count = enumerate_generators(ctx).size();
        if (count != phi) {
            o.fail(where(ctx) + ": " + std::to_string(count) + " generators, phi = " + std::to_string(phi));
        }
        if (ctx.p() > 31) {
            // Cross-check with orders from a factorization of p^2 - 1.
            const VerificationReport r = census_theorem(ctx);
            if (!r.passed() || r.generator_count_oracle != phi) o.fail(where(ctx) + ": census mismatch");
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s (limit 60 s)");
    if (o.ok) o.detail = std::to_string(fields) + " fields, " + std::to_string(secs) + " s";
    return o;
}

Outcome residue_count() {
    Outcome o;
    std::size_t primes = 0;
    for (std::uint64_t q : oracle::odd_primes_up_to(499)) {
        ++primes;
        const std::size_t count = quadratic_residues(OddPrime(q)).size();
        if (count != (q - 1) / 2) o.fail("p=" + std::to_string(q) + ": |Q(p)| = " + std::to_string(count));
    }
    if (o.ok) o.detail = std::to_string(primes) + " primes";
    return o;
}

Outcome legendre_multiplicativity() {
    Outcome o;
    std::uint64_t pairs = 0;
    for (std::uint64_t q : oracle::odd_primes_up_to(101)) {
        const OddPrime p(q);
        const auto m = static_cast<std::int64_t>(q);
        for (std::int64_t a = 1; a < m; ++a) {
            for (std::int64_t b = 1; b < m; ++b) {
                ++pairs;
                if (legendre_symbol(a * b, p) != legendre_symbol(a, p) * legendre_symbol(b, p)) {
                    o.fail("p=" + std::to_string(q) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
                }
            }
        }
    }
    if (o.ok) o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome norm_onto_and_kernel() {
    Outcome o;
    for (const auto& ctx : contexts(101, true)) {
        std::set<std::uint64_t> image;
        std::uint64_t kernel = 0;
        for (const auto& u : enumerate_units(ctx)) {
            image.insert(norm(u).value());
            kernel += in_kernel_of_norm(u);
        }
        std::set<std::uint64_t> units_of_fp;
        for (std::uint64_t x = 1; x < ctx.p(); ++x) units_of_fp.insert(x);
        if (image != units_of_fp) o.fail(where(ctx) + ": norm image != F_p^*");
        if (kernel != ctx.p() + 1) o.fail(where(ctx) + ": |Ker N| = " + std::to_string(kernel));
    }
    return o;
}

Outcome f_onto_kernel() {
    Outcome o;
    for (const auto& ctx : contexts(101, true)) {
        std::set<std::uint64_t> image, kernel;
        for (const auto& u : enumerate_units(ctx)) {
            const Fp2Element f = f_map(u);
            image.insert(unit_index(f));
            if (norm(u).is_one()) kernel.insert(unit_index(u));
            if (f.is_one() != u.is_base()) o.fail("Ker f != F_p^* at " + where(u));
        }
        if (image != kernel) o.fail(where(ctx) + ": im f != Ker N");
    }
    return o;
}

Outcome f_lands_in_kernel() {
    Outcome o;
    std::uint64_t checked = 0;
    for (const auto& ctx : contexts(101, true)) {
        for (const auto& u : enumerate_units(ctx)) {
            ++checked;
            if (!norm(f_map(u)).is_one()) o.fail("N(f(u)) != 1 at " + where(u));
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " units";
    return o;
}

Outcome half_order_dichotomy() {
    Outcome o;
    std::set<std::uint64_t> classes;
    std::uint64_t hypotheses = 0;
    for (const auto& ctx : contexts(31, true)) {
        const std::uint64_t p = ctx.p();
        classes.insert(p % 4);
        for (const auto& u : enumerate_units(ctx)) {
            const auto r = classify(u);
            if (r.norm_order == p - 1 && r.f_order == p + 1) {
                ++hypotheses;
                if (brute_force_order(u) == ctx.unit_count() / 2) o.fail("order (p^2-1)/2 at " + where(u));
            }
        }
    }
    if (classes != std::set<std::uint64_t>{1, 3}) o.fail("both p = 1 and p = 3 (mod 4) must be covered");
    if (o.ok) o.detail = std::to_string(hypotheses) + " units satisfy both hypotheses";
    return o;
}

Outcome oracle_independence() {
    Outcome o;
    std::uint64_t checked = 0;
    for (const auto& ctx : contexts(31, true)) {
        const Factorization group = factorize(ctx.unit_count());
        for (const auto& u : enumerate_units(ctx)) {
            ++checked;
            const std::uint64_t via_factors =
                multiplicative_order(u, group, std::multiplies<>{}, Fp2Element::one(ctx));
            if (brute_force_order(u) != via_factors) o.fail("order disagreement at " + where(u));
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " units";
    return o;
}

std::string capture(const std::string& command, int& status) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) {
        status = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
    status = pclose(pipe.release());
    return out;
}

void strip_elapsed(nlohmann::ordered_json& j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items()) strip_elapsed(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_elapsed(v);
    }
}

Outcome cli_determinism(const std::string& binary) {
    Outcome o;
    if (binary.empty()) {
        o.fail("no CLI binary given");
        return o;
    }
    const std::string cmd = "'" + binary + "' verify --max-p 31 --threads 4 --format json";
    std::array<std::string, 2> runs;
    for (auto& out : runs) {
        int status = 0;
        const std::string raw = capture(cmd, status);
        if (status != 0) o.fail("exit status " + std::to_string(status));
        try {
            auto j = nlohmann::ordered_json::parse(raw);
            strip_elapsed(j);
            out = j.dump();
        } catch (const std::exception& e) {
            o.fail(std::string("unparseable output: ") + e.what());
        }
    }
    if (runs[0] != runs[1]) o.fail("outputs differ beyond elapsed_ms");
    if (o.ok) o.detail = std::to_string(runs[0].size()) + " bytes identical";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1  exhaustive criterion == brute force, p <= 31 (+ n = -1)", exhaustive_equivalence},
        {"AC2  generator census == phi(p^2 - 1), p <= 199", generator_census},
        {"AC3  |Q(p)| == (p - 1)/2, p <= 499", residue_count},
        {"AC4  Legendre symbol multiplicative, p <= 101", legendre_multiplicativity},
        {"AC5  norm onto F_p^*, |Ker N| == p + 1, p <= 101", norm_onto_and_kernel},
        {"AC6  im f == Ker N, Ker f == F_p^*, p <= 101", f_onto_kernel},
        {"AC7  N(f(u)) == 1 for every unit, p <= 101", f_lands_in_kernel},
        {"AC8  no order (p^2 - 1)/2 under both hypotheses, p <= 31", half_order_dichotomy},
        {"AC9  brute-force order == factorization order, p <= 31", oracle_independence},
        {"AC10 verify --max-p 31 --threads 4 deterministic", [&] { return cli_determinism(binary); }},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.ok;
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name;
        if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
