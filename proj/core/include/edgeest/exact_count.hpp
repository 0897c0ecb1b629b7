#ifndef EDGEEST_EXACT_COUNT_HPP
#define EDGEEST_EXACT_COUNT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "edgeest/oracle.hpp"

namespace edgeest {

#ifdef NDEBUG
inline constexpr bool kDebugChecks = false;
#else
inline constexpr bool kDebugChecks = true;
#endif

// Result of a (possibly budgeted) exact enumeration. When `exact` is false
// the run stopped at the edge cap t and certifies m > t; `edges` then holds
// the distinct edges found so far.
struct ExactCount {
    std::vector<Edge> edges;
    bool exact = true;

    std::uint64_t count() const { return edges.size(); }
};

// Exact edge set E(S,V) by quadtree divide and conquer over (S,V), using
// O(1 + m(S,V) log n) BIS queries; m(S,V)=0 costs exactly one query. With an
// edge cap t the run stops once more than t distinct edges are found (or
// once the query backstop for "m <= t" is exhausted), using O(t log n)
// queries total.
ExactCount bis_exact_between(OracleSession& session, const VertexSet& s, const VertexSet& v,
                             std::optional<std::uint64_t> edge_cap = std::nullopt);

// All edges incident to v via a binary tree of ({v}, A) queries;
// O(1 + deg(v) log n) BIS queries, exactly one when v is isolated.
std::vector<Edge> bis_adjacent_edges(OracleSession& session, Vertex v);

// All edges of v's connected component by BFS, discovering each newly
// reached vertex's incident edges; O(1 + m(C) log n) BIS queries.
std::vector<Edge> bis_component_edges(OracleSession& session, Vertex v);

// The full edge set: for each bit position of the 0-based vertex ids,
// enumerates the crossing edges of the bit classes among still-unvisited
// vertices and expands them to whole components. O(log n + m log n) BIS
// queries; the budgeted variant stops early as above.
ExactCount bis_exact_all(OracleSession& session,
                         std::optional<std::uint64_t> edge_cap = std::nullopt);

// Exact E(S,V) where S and V are each independent sets, running the
// quadtree with IS(S' u V') in place of BIS(S',V'); O(1 + m(S,V) log n) IS
// queries. With verify_preconditions (defaults to debug builds) the
// independence contract is checked up front with one IS query per side and
// NotIndependent is raised on violation. m(S,V)=0 is handled (one query),
// extending the usual m > 0 assumption.
ExactCount is_exact_bipartite(OracleSession& session, const VertexSet& s, const VertexSet& v,
                              std::optional<std::uint64_t> edge_cap = std::nullopt,
                              bool verify_preconditions = kDebugChecks);

// Decomposes S into independent sets such that every pair of returned parts
// has at least one crossing edge: greedy prefix peeling with binary search,
// then greedy merging of peeled pieces. O(1 + m(S) log n) IS queries.
// Deterministic; parts are ordered by creation.
Partition is_decompose_independent(OracleSession& session, const VertexSet& s);

// Exact E(S) via the decomposition followed by pairwise bipartite counts;
// O(1 + m(S) log n) IS queries, budgeted variant stops early as above.
ExactCount is_exact_within(OracleSession& session, const VertexSet& s,
                           std::optional<std::uint64_t> edge_cap = std::nullopt);

// Certified worst-case query counts for runs with m <= edge_cap; these are
// the budget backstops behind the edge-cap variants.
std::uint64_t bis_between_query_cap(std::uint64_t edge_cap, std::size_t n);
std::uint64_t bis_all_query_cap(std::uint64_t edge_cap, std::size_t n);
std::uint64_t is_within_query_cap(std::uint64_t edge_cap, std::size_t n);

// Integer helpers used throughout the query-count formulas (log base 2,
// with log2_ceil(0) = log2_ceil(1) = 0).
std::uint32_t log2_floor(std::uint64_t x);
std::uint32_t log2_ceil(std::uint64_t x);

} // namespace edgeest

#endif
