#include "edgeest/is_estimator.hpp"

#include <cmath>

#include "edgeest/errors.hpp"
#include "edgeest/size_estimate.hpp"

namespace edgeest {

namespace {

double real_log2(std::size_t n) { return std::max(1.0, std::log2(double(n))); }

// Colex unranking of a pair index in [0, C(s,2)): idx = b(b-1)/2 + a, a < b.
std::pair<std::size_t, std::size_t> unrank_pair(std::uint64_t idx) {
    auto b = std::uint64_t(std::floor((1.0 + std::sqrt(1.0 + 8.0 * double(idx))) / 2.0));
    while (b * (b - 1) / 2 > idx) --b;
    while ((b + 1) * b / 2 <= idx) ++b;
    return {std::size_t(idx - b * (b - 1) / 2), std::size_t(b)};
}

} // namespace

IsParams IsParams::make(double eps, std::size_t n, Preset preset) {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidParams("IsParams: eps must be in (0,1)");
    const double lg = real_log2(n);
    IsParams p;
    p.eps = eps;
    p.preset = preset;
    p.c_a = 1.0;
    if (preset == Preset::practical) {
        // Desk-scale thresholds: small enough that the doubling search is
        // actually exercised, with enough colors for real sparsification.
        p.varsigma = 0.125;
        p.l_base = std::max<std::uint64_t>(16, std::uint64_t(std::ceil(p.c_a / (eps * eps) * lg)));
    } else {
        p.varsigma = 1.0;
        p.l_base = std::uint64_t(
            std::min(1e15, std::ceil(p.c_a / std::pow(eps, 4) * std::pow(lg, 4))));
    }
    p.validate();
    return p;
}

void IsParams::validate() const {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidParams("IsParams: eps must be in (0,1)");
    if (c_a < 1.0) throw InvalidParams("IsParams: c_a must be >= 1");
    if (!(varsigma > 0.0)) throw InvalidParams("IsParams: varsigma must be > 0");
    if (l_base < 1) throw InvalidParams("IsParams: l_base must be >= 1");
}

SmallCountResult is_small_count(OracleSession& session, const VertexSet& s,
                                const IsParams& params) {
    const ExactCount counted = is_exact_within(session, s, params.l_base);
    return {counted.exact, counted.count()};
}

GrowResult is_growing_step(OracleSession& session, const VertexSet& s, double t,
                           const IsParams& params, Rng& rng) {
    const double lg = real_log2(session.n());
    const auto k = std::max<std::size_t>(
        1, std::size_t(std::ceil(t * params.eps / (params.varsigma * lg))));

    GrowResult result;
    result.colors = k;
    result.value = 2.0 * t * t;

    const Partition classes = random_partition(s, k, rng);
    const double abort_bound = 8.0 * t * t / double(k);
    std::uint64_t running = 0;
    for (const VertexSet& cls : classes.parts) {
        const double headroom = abort_bound - double(running);
        if (headroom < 0.0) return result;
        const auto cap = std::uint64_t(std::floor(headroom)) + 1;
        const ExactCount counted = is_exact_within(session, cls, cap);
        if (!counted.exact) return result; // running sum would exceed M
        running += counted.count();
        if (double(running) > abort_bound) return result;
    }
    result.kind = GrowKind::estimate;
    result.value = double(k) * double(running);
    return result;
}

ShrinkResult is_shrinking_step(OracleSession& session, const VertexSet& s, double t, double eps_a,
                               const IsParams& params, Rng& rng) {
    if (t <= 0.0) throw InvalidParams("is_shrinking_step: t must be > 0");
    if (!(eps_a > 0.0 && eps_a < 1.0)) throw InvalidParams("is_shrinking_step: eps_a in (0,1)");

    ShrinkResult result;
    const double s_count = double(s.size());
    if (s.size() < 2) {
        result.kind = ShrinkKind::estimate; // m(S) = 0 exactly
        return result;
    }

    const std::uint64_t pair_universe = std::uint64_t(s.size()) * (s.size() - 1) / 2;
    const MembershipOracle oracle = [&](std::uint64_t idx) {
        const auto [a, b] = unrank_pair(idx);
        return session.edge_exists_via_is(s.nth_member(a), s.nth_member(b));
    };

    const double nn = double(std::max<std::size_t>(session.n(), 2));
    const double delta = 1.0 / (nn * nn);
    const double c_e = params.preset == Preset::theory ? 4.0 : 2.0;
    const double guess = s_count * s_count / (16.0 * t);
    const MembershipTestResult gate =
        membership_size_test(oracle, pair_universe, guess, 0.5, delta, rng, c_e);
    if (gate.below) {
        result.value = s_count * s_count / (2.0 * t);
        return result;
    }
    const MembershipTestResult fine =
        membership_size_test(oracle, pair_universe, guess, eps_a, delta, rng, c_e);
    result.kind = ShrinkKind::estimate;
    result.value = fine.estimate;
    return result;
}

EstimateReport is_estimate_edges(OracleSession& session, const IsParams& params, Rng& rng) {
    params.validate();
    const std::size_t n = session.n();
    const QueryLedger start = session.ledger();

    EstimateReport report;
    report.preset = preset_name(params.preset);

    const VertexSet everything = VertexSet::full(n);
    const SmallCountResult small = is_small_count(session, everything, params);
    if (small.exact) {
        report.estimate = double(small.count);
        report.exact = true;
        report.queries.is_count = session.ledger().is_count - start.is_count;
        return report;
    }

    double t = std::sqrt(double(params.l_base));
    std::uint64_t iteration = 0;
    for (;;) {
        ++iteration;
        if (t > double(n)) {
            // Iteration cap: finish exactly rather than give up.
            const ExactCount counted = is_exact_within(session, everything);
            report.estimate = double(counted.count());
            report.fallback = true;
            break;
        }

        const GrowResult grow = is_growing_step(session, everything, t, params, rng);
        if (grow.kind == GrowKind::estimate) {
            report.estimate = grow.value;
            // History implies m > max(l_base, 2 t_{i-1}^2) = t_i^2/2, which
            // is weaker than the growing step's m >= t_i^2 precondition from
            // the second iteration on.
            report.promise_unverified = iteration > 1;
            break;
        }

        const ShrinkResult shrink =
            is_shrinking_step(session, everything, t, params.eps, params, rng);
        if (shrink.kind == ShrinkKind::estimate) {
            report.estimate = shrink.value;
            break;
        }

        t *= 2.0;
    }

    report.rounds = iteration;
    report.queries.is_count = session.ledger().is_count - start.is_count;
    report.queries.bis_count = session.ledger().bis_count - start.bis_count;
    return report;
}

} // namespace edgeest
