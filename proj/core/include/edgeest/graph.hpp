#ifndef EDGEEST_GRAPH_HPP
#define EDGEEST_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edgeest/rng.hpp"
#include "edgeest/vertex_set.hpp"

namespace edgeest {

// Unordered edge, normalized u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u < o.u || (u == o.u && v < o.v); }
};

// Immutable simple undirected graph on {0..n-1}. Holds the sorted edge list
// plus per-vertex adjacency bit rows; both are the ground truth the oracles
// answer from.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    bool has_edge(Vertex u, Vertex v) const {
        return u < n_ && v < n_ && u != v && adjacency_[u].contains(v);
    }

    // Number of edges with one endpoint in each set. Requires disjoint S, V;
    // performs no oracle accounting (ground truth only).
    std::size_t edges_between(const VertexSet& s, const VertexSet& v) const;

    // Number of edges with both endpoints in S.
    std::size_t edges_within(const VertexSet& s) const;

    // True iff no edge crosses between the (disjoint) sets.
    bool no_edge_between(const VertexSet& s, const VertexSet& v) const;

    // True iff S is an independent set.
    bool independent(const VertexSet& s) const;

    friend Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adjacency_;
    VertexSet non_isolated_; // vertices with degree >= 1; isolated ones cannot witness edges
};

// Builds a graph from an edge list. Endpoints out of range raise
// InvalidVertex, self-loops raise SelfLoop; duplicate pairs (in either
// orientation) are dropped silently.
Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

// Uniform random partition of S into k parts: every element draws an
// independent color in [k]. Deterministic given the rng state.
Partition random_partition(const VertexSet& s, std::size_t k, Rng& rng);

// Same partition rule with the colors supplied explicitly, one per member of
// S in ascending id order. Lets tests enumerate all colorings exactly.
Partition partition_from_colors(const VertexSet& s, std::size_t k,
                                const std::vector<std::uint8_t>& colors);

enum class GraphFamily {
    star,
    clique_plus_isolated,
    erdos_renyi,
    random_bipartite,
    path,
    empty,
    complete,
};

GraphFamily parse_family(const std::string& name);
std::string family_name(GraphFamily family);

// Named generator parameters; which keys are read depends on the family
// (star/path/empty/complete: n; clique_plus_isolated: clique, isolated;
// erdos_renyi: n and p or em (expected edge count); random_bipartite:
// left, right, p).
using GenParams = std::map<std::string, double>;

Graph generate(GraphFamily family, const GenParams& params, Rng& rng);

Graph make_star(std::size_t n);
Graph make_clique_plus_isolated(std::size_t clique, std::size_t isolated);
Graph make_erdos_renyi(std::size_t n, double p, Rng& rng);
Graph make_random_bipartite(std::size_t left, std::size_t right, double p, Rng& rng);
Graph make_path(std::size_t n);
Graph make_empty(std::size_t n);
Graph make_complete(std::size_t n);

} // namespace edgeest

#endif
