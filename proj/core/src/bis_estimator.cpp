#include "edgeest/bis_estimator.hpp"

#include <cmath>

#include "edgeest/errors.hpp"
#include "edgeest/importance.hpp"
#include "edgeest/sparsify.hpp"

namespace edgeest {

namespace {

double real_log2(std::size_t n) { return std::max(1.0, std::log2(double(n))); }

} // namespace

BisParams BisParams::make(double eps, std::size_t n, Preset preset) {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidParams("BisParams: eps must be in (0,1)");
    const double lg = real_log2(n);
    const double inv_eps2 = 1.0 / (eps * eps);
    BisParams p;
    p.eps = eps;
    p.preset = preset;
    p.k_refine = 4;
    p.max_rounds = 4 * std::uint64_t(std::ceil(lg));
    if (preset == Preset::practical) {
        p.l_small = std::max<std::uint64_t>(8, std::uint64_t(std::ceil(inv_eps2 * lg * lg)));
        p.l_len = std::max<std::uint64_t>(16, std::uint64_t(std::ceil(inv_eps2 * lg * lg * lg)));
        p.coarse_trials = std::max<std::uint64_t>(16, std::uint64_t(std::ceil(8.0 * lg)));
        p.step_a_threshold = 2 * p.l_small;
    } else {
        p.l_small = std::uint64_t(std::ceil(inv_eps2 * std::pow(lg, 4)));
        p.l_len = std::uint64_t(std::min(1e15, std::ceil(inv_eps2 * std::pow(lg, 8))));
        p.coarse_trials = std::uint64_t(std::ceil(128.0 * lg));
        p.step_a_threshold =
            std::uint64_t(std::min(1e15, std::ceil(std::pow(inv_eps2, 2) * std::pow(lg, 12))));
    }
    p.validate();
    return p;
}

void BisParams::validate() const {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidParams("BisParams: eps must be in (0,1)");
    if (l_small < 1 || l_len < 1 || max_rounds < 1 || coarse_trials < 1)
        throw InvalidParams("BisParams: thresholds must be >= 1");
    if (k_refine < 2) throw InvalidParams("BisParams: k_refine must be >= 2");
    // Cleanup passes only pairs with m > 2*l_small to refine; this keeps the
    // pair form of the sparsifier applicable (max side > k_refine).
    if (2 * l_small < std::uint64_t(k_refine) * k_refine)
        throw InvalidParams("BisParams: need 2*l_small >= k_refine^2");
}

CheckVerdict check_estimate(OracleSession& session, const VertexSet& s, const VertexSet& v,
                            double guess, Rng& rng) {
    if (guess < 1.0) throw InvalidParams("check_estimate: guess must be >= 1");
    if (s.intersects(v)) throw SetsNotDisjoint("check_estimate: sets overlap");
    const std::uint32_t top = log2_floor(session.n());
    for (std::uint32_t i = 0; i <= top; ++i) {
        const double p_s = std::min(std::exp2(double(i)) / guess, 1.0);
        const double p_v = std::exp2(-double(i));
        const VertexSet sampled_s = s.bernoulli_subset(p_s, rng);
        const VertexSet sampled_v = v.bernoulli_subset(p_v, rng);
        if (!session.bis_query(sampled_s, sampled_v)) return CheckVerdict::accept;
    }
    return CheckVerdict::reject;
}

CoarseResult coarse_estimate(OracleSession& session, const VertexSet& s, const VertexSet& v,
                             const BisParams& params, Rng& rng) {
    CoarseResult result;
    if (session.bis_query(s, v)) return result; // m(S,V) = 0, exactly

    const std::uint64_t n = session.n();
    const std::uint32_t j_start = log2_floor(n * n); // largest power of two <= n^2
    const std::uint64_t trials = params.coarse_trials;
    for (std::uint32_t j = j_start + 1; j-- > 0;) {
        std::uint64_t accepts = 0;
        for (std::uint64_t t = 0; t < trials; ++t)
            if (check_estimate(session, s, v, std::exp2(double(j)), rng) == CheckVerdict::accept)
                ++accepts;
        if (8 * accepts >= 3 * trials) {
            result.estimate = std::exp2(double(j));
            return result;
        }
    }
    result.estimate = 1.0;
    result.fell_through = true;
    return result;
}

EstimateReport bis_estimate_edges(OracleSession& session, const BisParams& params, Rng& rng) {
    params.validate();
    const std::size_t n = session.n();
    const QueryLedger start = session.ledger();

    EstimateReport report;
    report.preset = preset_name(params.preset);

    // Step A: cheap exact count for graphs below the threshold.
    const ExactCount small = bis_exact_all(session, params.step_a_threshold);
    if (small.exact) {
        report.estimate = double(small.count());
        report.exact = true;
        report.queries.bis_count = session.ledger().bis_count - start.bis_count;
        return report;
    }

    // Step B: one random 2-coloring turns the whole graph into a single
    // weighted bipartite pair.
    EstimatorState state;
    {
        Partition halves = random_partition(VertexSet::full(n), 2, rng);
        state.triples.push_back({std::move(halves.parts[0]), std::move(halves.parts[1]), 2.0});
    }

    const double lg = real_log2(n);
    const double eps_a = params.eps / (8.0 * lg);
    const double coarseness = 8.0 * lg;
    const double m_bound = double(n) * double(n);
    const double reduce_delta = std::pow(double(std::max<std::size_t>(n, 2)), -4.0);
    const std::uint64_t reduce_trigger = 2 * params.l_len;

    std::uint64_t round = 0;
    while (!state.triples.empty() && round < params.max_rounds) {
        ++round;
        const std::uint64_t round_start_bis = session.ledger().bis_count;

        // Cleanup: exactly count and retire every pair that is sparse enough.
        std::vector<WeightedPair> survivors;
        for (WeightedPair& pair : state.triples) {
            const ExactCount counted =
                bis_exact_between(session, pair.s, pair.v, 2 * params.l_small);
            if (counted.exact)
                state.acc += pair.w * double(counted.count());
            else
                survivors.push_back(std::move(pair));
        }
        state.triples = std::move(survivors);
        if (state.triples.empty()) {
            if (params.collect_round_stats)
                report.round_bis_queries.push_back(session.ledger().bis_count - round_start_bis);
            break;
        }

        // Refine: sparsify every surviving pair into k matched sub-pairs,
        // scaling weights by k to keep the estimate conserved.
        std::vector<WeightedPair> refined;
        refined.reserve(state.triples.size() * params.k_refine);
        for (const WeightedPair& pair : state.triples) {
            SparsifyResult spars = sparsify_matched_pairs(pair.s, pair.v, params.k_refine, rng);
            for (auto& [cs, cv] : spars.pairs)
                refined.push_back({std::move(cs), std::move(cv), pair.w * double(params.k_refine)});
        }
        state.triples = std::move(refined);

        // Reduce: once the list is long, bucket by coarse estimate and
        // subsample each heavy bucket.
        if (state.triples.size() > reduce_trigger) {
            std::vector<WeightedPair> kept;
            std::vector<WeightedItem> items;
            kept.reserve(state.triples.size());
            for (WeightedPair& pair : state.triples) {
                const CoarseResult coarse = coarse_estimate(session, pair.s, pair.v, params, rng);
                if (coarse.estimate == 0.0) continue; // m = 0, contributes nothing
                items.push_back({kept.size(), pair.w, coarse.estimate});
                kept.push_back(std::move(pair));
            }
            std::optional<std::uint64_t> bucket_cap;
            if (params.preset == Preset::practical) {
                const std::uint32_t h = std::max<std::uint32_t>(1, log2_ceil(n * std::uint64_t(n)));
                bucket_cap = std::max<std::uint64_t>(1, (params.l_len + h - 1) / h);
            }
            const std::vector<WeightedItem> reduced = importance_reduce(
                items, eps_a, reduce_delta, coarseness, m_bound, rng, bucket_cap);
            std::vector<WeightedPair> next;
            next.reserve(reduced.size());
            for (const WeightedItem& item : reduced)
                next.push_back({kept[item.handle].s, kept[item.handle].v, item.w});
            state.triples = std::move(next);
        }

        if (params.collect_round_stats)
            report.round_bis_queries.push_back(session.ledger().bis_count - round_start_bis);
    }

    // Round cap: exact-count whatever is left so the algorithm is total.
    if (!state.triples.empty()) {
        report.fallback = true;
        for (const WeightedPair& pair : state.triples) {
            const ExactCount counted = bis_exact_between(session, pair.s, pair.v);
            state.acc += pair.w * double(counted.count());
        }
    }

    report.estimate = state.acc;
    report.rounds = round;
    report.queries.bis_count = session.ledger().bis_count - start.bis_count;
    report.queries.is_count = session.ledger().is_count - start.is_count;
    return report;
}

SizeEstimate bis_estimate_degree(OracleSession& session, Vertex v, double eps, Rng& rng) {
    const std::size_t n = session.n();
    if (v >= n) throw InvalidVertex("bis_estimate_degree: vertex out of range");
    if (n <= 1) return {};

    const EmptinessOracle oracle = [&](const std::vector<std::uint64_t>& sample) {
        VertexSet q(n);
        for (const std::uint64_t idx : sample)
            q.insert(Vertex(idx < v ? idx : idx + 1)); // universe skips v itself
        return session.neighborhood_empty_via_bis(v, q);
    };
    return emptiness_size_estimate(oracle, n - 1, eps, rng);
}

} // namespace edgeest
