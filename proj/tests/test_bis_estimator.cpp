#include <doctest.h>

#include <cmath>

#include "edgeest/bis_estimator.hpp"
#include "edgeest/errors.hpp"
#include "edgeest/sparsify.hpp"
#include "support/test_util.hpp"

using namespace edgeest;

namespace {

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = Vertex(a); v < a + b; ++v) edges.emplace_back(u, v);
    return build_graph(a + b, edges);
}

VertexSet range_set(std::size_t n, std::size_t lo, std::size_t hi) {
    VertexSet s(n);
    for (std::size_t v = lo; v < hi; ++v) s.insert(Vertex(v));
    return s;
}

} // namespace

TEST_SUITE_BEGIN("bis-estimator");

TEST_CASE("check_estimate never accepts an empty pair") {
    for (std::size_t n = 2; n <= 5; ++n) {
        testutil::for_each_graph(n, [&](const Graph& g) {
            OracleSession session(g);
            testutil::for_each_disjoint_pair(n, [&](const VertexSet& s, const VertexSet& v) {
                if (g.edges_between(s, v) != 0) return;
                Rng rng(std::uint64_t(n) * 1000 + g.edge_count(), RngStream::bis_estimator);
                CHECK(check_estimate(session, s, v, 4.0, rng) == CheckVerdict::reject);
            });
        });
    }
}

TEST_CASE("check_estimate uses at most 1 + floor(log2 n) queries") {
    const Graph g = complete_bipartite(8, 8);
    OracleSession session(g);
    Rng rng(3, RngStream::bis_estimator);
    const std::uint64_t before = session.ledger().bis_count;
    (void)check_estimate(session, range_set(16, 0, 8), range_set(16, 8, 16), 10.0, rng);
    CHECK(session.ledger().bis_count - before <= 1 + log2_floor(16));
    CHECK_THROWS_AS(check_estimate(session, range_set(16, 0, 8), range_set(16, 8, 16), 0.5, rng),
                    InvalidParams);
}

TEST_CASE("check_estimate accept-rate brackets on a fixed instance") {
    // K(8,8): m = 64, n = 16. Overestimates accept rarely, underestimates
    // accept often (smoke-scale version of the acceptance criterion).
    const Graph g = complete_bipartite(8, 8);
    OracleSession session(g);
    const VertexSet s = range_set(16, 0, 8), v = range_set(16, 8, 16);
    const double m = 64.0;
    const double high = 4.0 * m * (std::log2(16.0) + 1.0);
    const double low = std::floor(m / (4.0 * std::log2(16.0)));

    std::size_t accept_high = 0, accept_low = 0;
    const std::size_t trials = 2000;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed, RngStream::bis_estimator);
        accept_high += check_estimate(session, s, v, high, rng) == CheckVerdict::accept;
        accept_low += check_estimate(session, s, v, low, rng) == CheckVerdict::accept;
    }
    CHECK(double(accept_high) <= 0.30 * double(trials));
    CHECK(double(accept_low) >= 0.45 * double(trials));
}

TEST_CASE("coarse_estimate answers zero exactly and in one query") {
    const Graph g = build_graph(8, {{0, 1}});
    OracleSession session(g);
    Rng rng(1, RngStream::bis_estimator);
    const BisParams params = BisParams::make(0.2, 8);
    const CoarseResult r =
        coarse_estimate(session, range_set(8, 2, 4), range_set(8, 4, 8), params, rng);
    CHECK(r.estimate == 0.0);
    CHECK_FALSE(r.fell_through);
    CHECK(session.ledger().bis_count == 1);
}

TEST_CASE("coarse_estimate output is a power of two (or zero) bounded by n^2") {
    Rng graph_rng(5, RngStream::graph_gen);
    const Graph g = make_erdos_renyi(64, 0.2, graph_rng);
    OracleSession session(g);
    const BisParams params = BisParams::make(0.2, 64);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed, RngStream::bis_estimator);
        const CoarseResult r =
            coarse_estimate(session, range_set(64, 0, 32), range_set(64, 32, 64), params, rng);
        CHECK(r.estimate <= 64.0 * 64.0);
        if (r.estimate != 0.0) {
            const double lg = std::log2(r.estimate);
            CHECK(lg == std::floor(lg));
        }
    }
}

TEST_CASE("coarse_estimate lands in the coarse bracket (smoke)") {
    const Graph g = complete_bipartite(16, 16);
    const VertexSet s = range_set(32, 0, 16), v = range_set(32, 16, 32);
    const double m = 256.0, lg = std::log2(32.0);
    const BisParams params = BisParams::make(0.2, 32);
    OracleSession session(g);
    std::size_t good = 0;
    const std::size_t trials = 60;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed, RngStream::bis_estimator);
        const CoarseResult r = coarse_estimate(session, s, v, params, rng);
        if (r.estimate >= m / (8.0 * lg) && r.estimate <= m * 8.0 * lg) ++good;
    }
    CHECK(good >= 57);
}

TEST_CASE("refine step conserves the estimate in expectation (exhaustive)") {
    // Enumerating all colorings of one weighted pair: the k-scaled sum of
    // matched sub-pair counts averages back to m(S,V).
    const Graph g = build_graph(8, {{0, 5}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {0, 7}});
    const VertexSet s = range_set(8, 0, 4), v = range_set(8, 4, 8);
    const std::size_t k = 4;
    std::uint64_t total = 0, colorings = 0;
    std::vector<std::uint8_t> cs(4), cv(4);
    for (std::uint32_t a = 0; a < 256; ++a) {
        for (std::uint32_t b = 0; b < 256; ++b) {
            for (std::size_t i = 0; i < 4; ++i) {
                cs[i] = std::uint8_t((a >> (2 * i)) & 3);
                cv[i] = std::uint8_t((b >> (2 * i)) & 3);
            }
            const SparsifyResult spars = sparsify_from_colors(s, v, k, cs, cv);
            for (const auto& [ps, pv] : spars.pairs) total += g.edges_between(ps, pv);
            ++colorings;
        }
    }
    CHECK(total * k == g.edges_between(s, v) * colorings);
}

TEST_CASE("refine step conserves the estimate statistically at n=256") {
    Rng graph_rng(9, RngStream::graph_gen);
    const Graph g = make_erdos_renyi(256, 0.25, graph_rng);
    const VertexSet s = range_set(256, 0, 128), v = range_set(256, 128, 256);
    const double m = double(g.edges_between(s, v));

    const std::size_t trials = 400;
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed, RngStream::sparsify);
        const SparsifyResult spars = sparsify_matched_pairs(s, v, 4, rng);
        double scaled = 0.0;
        for (const auto& [ps, pv] : spars.pairs)
            scaled += 4.0 * double(g.edges_between(ps, pv));
        sum += scaled;
        sum_sq += scaled * scaled;
    }
    const double mean = sum / double(trials);
    const double variance = sum_sq / double(trials) - mean * mean;
    const double stderr_mean = std::sqrt(variance / double(trials));
    CHECK(std::abs(mean - m) <= 3.0 * stderr_mean + 1e-9);
}

TEST_CASE("bis_estimate_edges: exact path") {
    const Graph empty = make_empty(64);
    OracleSession s1(empty);
    Rng r1(1, RngStream::bis_estimator);
    const EstimateReport rep1 = bis_estimate_edges(s1, BisParams::make(0.2, 64), r1);
    CHECK(rep1.estimate == 0.0);
    CHECK(rep1.exact);
    CHECK(rep1.rounds == 0);

    Rng graph_rng(3, RngStream::graph_gen);
    const Graph sparse = make_erdos_renyi(64, 0.05, graph_rng);
    OracleSession s2(sparse);
    Rng r2(2, RngStream::bis_estimator);
    const EstimateReport rep2 = bis_estimate_edges(s2, BisParams::make(0.2, 64), r2);
    CHECK(rep2.exact);
    CHECK(rep2.estimate == double(sparse.edge_count()));
    CHECK(rep2.flags() == "exact");
}

TEST_CASE("bis_estimate_edges: pipeline accuracy smoke") {
    Rng graph_rng(11, RngStream::graph_gen);
    const Graph g = make_erdos_renyi(128, 0.4, graph_rng);
    const double m = double(g.edge_count());
    const BisParams params = BisParams::make(0.25, 128);
    REQUIRE(m > double(params.step_a_threshold)); // pipeline actually engages

    std::size_t good = 0, exact = 0;
    const std::size_t trials = 30;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        OracleSession session(g);
        std::uint64_t observed = 0;
        session.set_observer([&](QueryKind) { ++observed; });
        Rng rng(seed, RngStream::bis_estimator);
        const EstimateReport rep = bis_estimate_edges(session, params, rng);
        exact += rep.exact;
        if (std::abs(rep.estimate - m) <= 0.25 * m) ++good;
        // Reported counts equal the independently observed invocations.
        CHECK(session.ledger().bis_count == rep.queries.bis_count);
        CHECK(observed == rep.queries.bis_count + rep.queries.is_count);
    }
    CHECK(exact == 0);
    CHECK(good >= 27);
}

TEST_CASE("bis_estimate_edges is reproducible per seed") {
    Rng graph_rng(13, RngStream::graph_gen);
    const Graph g = make_erdos_renyi(96, 0.5, graph_rng);
    const BisParams params = BisParams::make(0.2, 96);
    OracleSession a(g), b(g);
    Rng ra(42, RngStream::bis_estimator), rb(42, RngStream::bis_estimator);
    const EstimateReport rep_a = bis_estimate_edges(a, params, ra);
    const EstimateReport rep_b = bis_estimate_edges(b, params, rb);
    CHECK(rep_a.estimate == rep_b.estimate);
    CHECK(rep_a.rounds == rep_b.rounds);
    CHECK(rep_a.queries.bis_count == rep_b.queries.bis_count);
    CHECK(a.ledger().bis_count == b.ledger().bis_count);
}

TEST_CASE("bis_estimate_edges: round cap falls back to exact residue counting") {
    // Dense enough that the first cleanup cannot retire the initial pair.
    const Graph g = make_complete(128);
    BisParams params = BisParams::make(0.2, 128);
    params.max_rounds = 1;
    OracleSession session(g);
    Rng rng(7, RngStream::bis_estimator);
    const EstimateReport rep = bis_estimate_edges(session, params, rng);
    CHECK(rep.fallback);
    CHECK(rep.flags().find("fallback") != std::string::npos);
    const double m = double(g.edge_count());
    CHECK(std::abs(rep.estimate - m) <= 0.5 * m); // weight bookkeeping stays sane
}

TEST_CASE("per-round query counts stay inside the budget envelope") {
    Rng graph_rng(19, RngStream::graph_gen);
    const Graph g = make_erdos_renyi(128, 0.4, graph_rng);
    BisParams params = BisParams::make(0.25, 128);
    params.collect_round_stats = true;
    OracleSession session(g);
    Rng rng(23, RngStream::bis_estimator);
    const EstimateReport rep = bis_estimate_edges(session, params, rng);
    REQUIRE(!rep.round_bis_queries.empty());
    const double lg = std::log2(128.0);
    const double bound = 2.0 * (double(params.l_small) * double(params.l_len) * lg +
                                double(params.l_len) * lg * lg * lg);
    for (const std::uint64_t q : rep.round_bis_queries) CHECK(double(q) <= bound);
    CHECK(rep.rounds == rep.round_bis_queries.size());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(BisParams::make(0.0, 64), InvalidParams);
    BisParams bad = BisParams::make(0.2, 64);
    bad.l_small = 2; // breaks 2*l_small >= k_refine^2
    CHECK_THROWS_AS(bad.validate(), InvalidParams);
}

TEST_CASE("estimate report serializes the contract fields") {
    Rng graph_rng(3, RngStream::graph_gen);
    const Graph g = make_erdos_renyi(64, 0.05, graph_rng);
    OracleSession session(g);
    Rng rng(9, RngStream::bis_estimator);
    EstimateReport rep = bis_estimate_edges(session, BisParams::make(0.2, 64), rng);
    rep.seed = 9;
    const std::string json = rep.to_json();
    for (const char* key : {"\"estimate\"", "\"exact_flag\"", "\"fallback_flag\"", "\"rounds\"",
                            "\"queries\"", "\"bis\"", "\"is\"", "\"seed\"", "\"preset\""})
        CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("bis_estimate_degree brackets true degrees") {
    const Graph lonely = build_graph(64, {{1, 2}});
    OracleSession s0(lonely);
    Rng r0(1, RngStream::degree_estimator);
    CHECK(bis_estimate_degree(s0, 0, 0.2, r0).estimate == 0.0);

    const Graph star = make_star(256);
    std::size_t good = 0;
    const std::size_t trials = 50;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        OracleSession session(star);
        Rng rng(seed, RngStream::degree_estimator);
        const double est = bis_estimate_degree(session, 0, 0.2, rng).estimate;
        if (std::abs(est - 255.0) <= 0.2 * 255.0) ++good;
    }
    CHECK(good >= 46);

    const Graph clique = make_complete(64);
    good = 0;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        OracleSession session(clique);
        Rng rng(seed, RngStream::degree_estimator);
        const double est = bis_estimate_degree(session, 5, 0.25, rng).estimate;
        if (std::abs(est - 63.0) <= 0.25 * 63.0) ++good;
    }
    CHECK(good >= 46);
}

TEST_SUITE_END();
