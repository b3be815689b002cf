#include "fp2gen/theorem.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

namespace fp2gen {

std::string_view to_string(Mismatch::Kind kind) noexcept {
    switch (kind) {
        case Mismatch::Kind::Criterion: return "criterion";
        case Mismatch::Kind::HalfOrder: return "half_order";
        case Mismatch::Kind::Forward: return "forward";
        case Mismatch::Kind::Lcm: return "lcm";
    }
    return "unknown";
}

ClassificationResult classify(const Fp2Element& u) {
    if (u.is_zero()) throw Error(ErrorCode::ZeroElement, "classify is undefined at 0");
    const FieldContext& ctx = u.context();

    const FpElement norm_value = norm(u);
    const bool norm_is_primitive = is_primitive_root(norm_value, ctx.p_minus_1());
    const std::uint64_t norm_order = order_in_fp(norm_value, ctx.p_minus_1());

    Fp2Element f_value = f_map(u);
    const std::uint64_t f_order = multiplicative_order(f_value, ctx.p_plus_1(), std::multiplies<>{},
                                                       Fp2Element::one(ctx));
    const bool f_generates_kernel = f_order == ctx.p() + 1;

    return ClassificationResult{u,
                                norm_value,
                                norm_is_primitive,
                                norm_order,
                                std::move(f_value),
                                f_order,
                                f_generates_kernel,
                                norm_is_primitive && f_generates_kernel};
}

std::uint64_t brute_force_order(const Fp2Element& u) {
    if (u.is_zero()) throw Error(ErrorCode::ZeroElement, "brute_force_order is undefined at 0");
    std::uint64_t k = 1;
    for (Fp2Element x = u; !x.is_one(); x = x * u) ++k;
    return k;
}

std::uint64_t order_via_group_factorization(const Fp2Element& u, const Factorization& p2_minus_1) {
    if (u.is_zero()) throw Error(ErrorCode::ZeroElement, "order is undefined at 0");
    if (p2_minus_1.target() != u.context().unit_count()) {
        throw Error(ErrorCode::InvalidArgument, "expected a factorization of p^2 - 1");
    }
    return multiplicative_order(u, p2_minus_1, std::multiplies<>{}, Fp2Element::one(u.context()));
}

namespace {

struct Partial {
    std::uint64_t theorem_count = 0;
    std::uint64_t oracle_count = 0;
    std::uint64_t kernel_size = 0;
    std::vector<Mismatch> mismatches;
    std::vector<char> norm_seen;  // indexed by norm value
    std::vector<char> f_seen;     // indexed by a * p + b
};

using OrderOracle = std::function<std::uint64_t(const Fp2Element&)>;

void scan_block(const FieldContext& ctx, std::uint64_t begin, std::uint64_t end,
                const OrderOracle& oracle, Partial& out) {
    const std::uint64_t p = ctx.p();
    const std::uint64_t full = ctx.unit_count();
    out.norm_seen.assign(p, 0);
    out.f_seen.assign(p * p, 0);

    for (std::uint64_t i = begin; i < end; ++i) {
        const Fp2Element u = unit_at(ctx, i);
        const ClassificationResult cls = classify(u);
        const std::uint64_t order = oracle(u);
        const bool oracle_says = order == full;

        out.theorem_count += cls.is_generator;
        out.oracle_count += oracle_says;
        out.kernel_size += cls.norm_value.is_one();
        out.norm_seen[cls.norm_value.value()] = 1;
        out.f_seen[cls.f_value.a() * p + cls.f_value.b()] = 1;

        auto record = [&](Mismatch::Kind kind) {
            out.mismatches.push_back({kind, u.a(), u.b(), cls.is_generator, order});
        };
        if (cls.is_generator != oracle_says) record(Mismatch::Kind::Criterion);
        if (cls.is_generator && order == full / 2) record(Mismatch::Kind::HalfOrder);
        if (oracle_says && !(cls.norm_is_primitive && cls.f_generates_kernel)) {
            record(Mismatch::Kind::Forward);
        }
        if (order % std::lcm(cls.norm_order, cls.f_order) != 0) record(Mismatch::Kind::Lcm);
    }
}

VerificationReport sweep(const FieldContext& ctx, unsigned threads, const OrderOracle& oracle) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = ctx.unit_count();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t workers = std::min<std::uint64_t>(threads, total);

    std::vector<Partial> partials(workers);
    if (workers == 1) {
        scan_block(ctx, 0, total, oracle, partials[0]);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::uint64_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        scan_block(ctx, total * w / workers, total * (w + 1) / workers, oracle,
                                   partials[w]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    VerificationReport report;
    report.p = ctx.p();
    report.n = ctx.n_input();
    report.n_reduced = ctx.n().value();
    report.total_units = total;
    report.phi_p2_minus_1 = euler_totient(factorize(total));

    std::vector<char> norm_seen(ctx.p(), 0);
    std::vector<char> f_seen(ctx.p() * ctx.p(), 0);
    for (const Partial& part : partials) {
        report.generator_count_theorem += part.theorem_count;
        report.generator_count_oracle += part.oracle_count;
        report.kernel_size += part.kernel_size;
        report.mismatches.insert(report.mismatches.end(), part.mismatches.begin(),
                                 part.mismatches.end());
        for (std::size_t i = 0; i < norm_seen.size(); ++i) norm_seen[i] |= part.norm_seen[i];
        for (std::size_t i = 0; i < f_seen.size(); ++i) f_seen[i] |= part.f_seen[i];
    }
    report.norm_image_size = static_cast<std::uint64_t>(std::count(norm_seen.begin(), norm_seen.end(), 1));
    report.f_image_size = static_cast<std::uint64_t>(std::count(f_seen.begin(), f_seen.end(), 1));

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

VerificationReport verify_theorem(const FieldContext& ctx, unsigned threads) {
    return sweep(ctx, threads, [](const Fp2Element& u) { return brute_force_order(u); });
}

VerificationReport census_theorem(const FieldContext& ctx, unsigned threads) {
    const Factorization group = factorize(ctx.unit_count());
    return sweep(ctx, threads,
                 [&group](const Fp2Element& u) { return order_via_group_factorization(u, group); });
}

std::vector<Fp2Element> enumerate_generators(const FieldContext& ctx) {
    std::vector<Fp2Element> generators;
    for (const Fp2Element& u : enumerate_units(ctx)) {
        if (classify(u).is_generator) generators.push_back(u);
    }
    return generators;
}

Fp2Element find_generator(const FieldContext& ctx) {
    for (const Fp2Element& u : enumerate_units(ctx)) {
        if (classify(u).is_generator) return u;
    }
    // Unreachable: F_{p^2}^* is cyclic.
    throw Error(ErrorCode::InvalidArgument, "no generator found");
}

namespace {

MethodTiming summarize(std::string method, std::vector<double> samples_ns) {
    const double mean =
        std::accumulate(samples_ns.begin(), samples_ns.end(), 0.0) / static_cast<double>(samples_ns.size());
    const auto mid = samples_ns.begin() + static_cast<std::ptrdiff_t>(samples_ns.size() / 2);
    std::nth_element(samples_ns.begin(), mid, samples_ns.end());
    double median = *mid;
    if (samples_ns.size() % 2 == 0) {
        median = (median + *std::max_element(samples_ns.begin(), mid)) / 2.0;
    }
    return {std::move(method), mean, median};
}

template <class F>
double time_ns(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BenchmarkSummary benchmark_classification(const FieldContext& ctx, std::uint64_t sample_size) {
    if (sample_size == 0) throw Error(ErrorCode::InvalidArgument, "sample size must be at least 1");

    const std::uint64_t full = ctx.unit_count();
    const Factorization group = factorize(full);

    // minstd_rand has a 31-bit range; two draws cover any p^2 - 1 < 2^64.
    std::minstd_rand lcg(20220215u);
    auto next_index = [&] {
        const std::uint64_t hi = lcg();
        const std::uint64_t lo = lcg();
        return ((hi << 31) | lo) % full;
    };

    BenchmarkSummary summary;
    summary.p = ctx.p();
    summary.n = ctx.n_input();
    summary.sample_size = sample_size;

    std::vector<double> theorem_ns, group_ns, brute_ns;
    theorem_ns.reserve(sample_size);
    group_ns.reserve(sample_size);
    brute_ns.reserve(sample_size);

    for (std::uint64_t s = 0; s < sample_size; ++s) {
        const Fp2Element u = unit_at(ctx, next_index());
        bool by_theorem = false, by_group = false;
        std::uint64_t steps = 0;
        theorem_ns.push_back(time_ns([&] { by_theorem = classify(u).is_generator; }));
        group_ns.push_back(time_ns([&] { by_group = order_via_group_factorization(u, group) == full; }));
        brute_ns.push_back(time_ns([&] { steps = brute_force_order(u); }));
        const bool by_brute = steps == full;

        summary.generators_in_sample += by_theorem;
        summary.max_brute_force_steps = std::max(summary.max_brute_force_steps, steps);
        if (by_theorem != by_group || by_theorem != by_brute) summary.agreement = false;
    }

    summary.timings.push_back(summarize("theorem", std::move(theorem_ns)));
    summary.timings.push_back(summarize("group_factorization", std::move(group_ns)));
    summary.timings.push_back(summarize("brute_force", std::move(brute_ns)));
    return summary;
}

}  // namespace fp2gen
