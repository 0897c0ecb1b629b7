#include <doctest.h>

#include <cmath>

#include "edgeest/errors.hpp"
#include "edgeest/sparsify.hpp"
#include "support/test_util.hpp"

using namespace edgeest;

namespace {

// Sum of matched-pair crossing counts for one explicit coloring.
std::uint64_t pair_sum(const Graph& g, const SparsifyResult& spars) {
    std::uint64_t total = 0;
    for (const auto& [s, v] : spars.pairs) total += g.edges_between(s, v);
    return total;
}

// Enumerates every coloring of the full vertex set with 2k colors and
// accumulates the matched-pair sums; exhaustive oracle for the identity
// sum_over_colorings(pair_sum) * 2k == m * (2k)^n.
void check_unbiased_exhaustive(const Graph& g, std::size_t k) {
    const VertexSet universe = VertexSet::full(g.vertex_count());
    const std::size_t colors = 2 * k;
    const std::size_t count = universe.size();
    std::vector<std::uint8_t> assignment(count, 0);
    std::uint64_t total = 0;
    std::uint64_t colorings = 1;
    for (std::size_t i = 0; i < count; ++i) colorings *= colors;
    for (std::uint64_t code = 0; code < colorings; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < count; ++i) {
            assignment[i] = std::uint8_t(rest % colors);
            rest /= colors;
        }
        total += pair_sum(g, sparsify_from_colors(universe, k, assignment));
    }
    CHECK(total * 2 * k == g.edge_count() * colorings);
}

} // namespace

TEST_SUITE_BEGIN("sparsify");

TEST_CASE("matched pairs partition the input") {
    Rng rng(4, RngStream::sparsify);
    const VertexSet universe = VertexSet::full(20);
    const SparsifyResult spars = sparsify_matched_pairs(universe, 3, rng);
    CHECK(spars.scale == 6);
    REQUIRE(spars.pairs.size() == 3);
    VertexSet covered(20);
    for (const auto& [s, v] : spars.pairs) {
        CHECK(covered.disjoint_with(s));
        covered.unite_with(s);
        CHECK(covered.disjoint_with(v));
        covered.unite_with(v);
    }
    CHECK(covered == universe);
}

TEST_CASE("pair form splits each side independently") {
    Rng rng(9, RngStream::sparsify);
    const VertexSet s = VertexSet::of(12, {0, 1, 2, 3, 4});
    const VertexSet v = VertexSet::of(12, {7, 8, 9, 10, 11});
    const SparsifyResult spars = sparsify_matched_pairs(s, v, 4, rng);
    CHECK(spars.scale == 4);
    REQUIRE(spars.pairs.size() == 4);
    VertexSet s_cover(12), v_cover(12);
    for (const auto& [cs, cv] : spars.pairs) {
        s_cover.unite_with(cs);
        v_cover.unite_with(cv);
    }
    CHECK(s_cover == s);
    CHECK(v_cover == v);
}

TEST_CASE("preconditions") {
    Rng rng(1, RngStream::sparsify);
    CHECK_THROWS_AS(sparsify_matched_pairs(VertexSet::full(10), 0, rng), InvalidPartCount);
    CHECK_THROWS_AS(sparsify_matched_pairs(VertexSet::full(10), 6, rng), InvalidPartCount);
    // |S| = |V| = 1 rejects the pair form (k >= 2 is unreachable).
    CHECK_THROWS_AS(sparsify_matched_pairs(VertexSet::of(4, {0}), VertexSet::of(4, {1}), 2, rng),
                    InvalidPartCount);
}

TEST_CASE("single edge with k=1 is counted in half the colorings") {
    const Graph g = build_graph(2, {{0, 1}});
    std::uint64_t counted = 0;
    for (std::uint8_t a = 0; a < 2; ++a)
        for (std::uint8_t b = 0; b < 2; ++b)
            counted += pair_sum(g, sparsify_from_colors(VertexSet::full(2), 1, {a, b}));
    CHECK(counted == 2); // 2 of 4 colorings, so E[2k * sum] = m
}

TEST_CASE("exhaustive unbiasedness on small graphs") {
    Rng rng(12, RngStream::test);
    check_unbiased_exhaustive(make_complete(5), 1);
    check_unbiased_exhaustive(make_complete(5), 2);
    check_unbiased_exhaustive(make_star(6), 2);
    check_unbiased_exhaustive(make_erdos_renyi(8, 0.4, rng), 1);
    check_unbiased_exhaustive(make_erdos_renyi(8, 0.4, rng), 2);
}

TEST_CASE("pair-form refinement is unbiased: E[k * sum] = m(S,V)") {
    // Enumerate all k^|S| * k^|V| colorings of a fixed bipartite pair.
    const Graph g = build_graph(7, {{0, 4}, {0, 5}, {1, 5}, {2, 6}, {1, 4}});
    const VertexSet s = VertexSet::of(7, {0, 1, 2});
    const VertexSet v = VertexSet::of(7, {4, 5, 6});
    const std::size_t k = 4;
    std::uint64_t total = 0, colorings = 0;
    std::vector<std::uint8_t> cs(3), cv(3);
    for (std::uint32_t a = 0; a < 64; ++a) { // 4^3 color codes per side
        for (std::uint32_t b = 0; b < 64; ++b) {
            for (std::size_t i = 0; i < 3; ++i) {
                cs[i] = std::uint8_t((a >> (2 * i)) & 3);
                cv[i] = std::uint8_t((b >> (2 * i)) & 3);
            }
            total += pair_sum(g, sparsify_from_colors(s, v, k, cs, cv));
            ++colorings;
        }
    }
    CHECK(total * k == g.edges_between(s, v) * colorings);
}

TEST_CASE("sparsification is reproducible given the seed") {
    const VertexSet universe = VertexSet::full(64);
    Rng a(77, RngStream::sparsify), b(77, RngStream::sparsify);
    const SparsifyResult ra = sparsify_matched_pairs(universe, 4, a);
    const SparsifyResult rb = sparsify_matched_pairs(universe, 4, b);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(ra.pairs[i].first == rb.pairs[i].first);
        CHECK(ra.pairs[i].second == rb.pairs[i].second);
    }
}

TEST_CASE("concentration smoke: scaled sum stays in the deviation band") {
    Rng graph_rng(2024, RngStream::graph_gen);
    const Graph g = make_erdos_renyi(256, 0.3, graph_rng);
    const double m = double(g.edge_count());
    const double band = 1.5 * 8.0 * std::sqrt(m) * 8.0; // varsigma * 2k * sqrt(m) * log2 n
    std::size_t ok = 0;
    const std::size_t trials = 300;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed, RngStream::sparsify);
        const SparsifyResult spars = sparsify_matched_pairs(VertexSet::full(256), 4, rng);
        const double scaled = double(spars.scale) * double(pair_sum(g, spars));
        if (std::abs(scaled - m) <= band) ++ok;
    }
    CHECK(ok == trials);
}

TEST_SUITE_END();
