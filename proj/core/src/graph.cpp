#include "edgeest/graph.hpp"

#include <algorithm>
#include <cmath>

#include "edgeest/errors.hpp"

namespace edgeest {

namespace {

// Visits the members of (a AND filter) without materializing the set.
template <typename Fn>
bool for_each_filtered(const VertexSet& a, const VertexSet& filter, Fn&& fn) {
    const auto& wa = a.words();
    const auto& wf = filter.words();
    for (std::size_t wi = 0; wi < wa.size(); ++wi) {
        std::uint64_t w = wa[wi] & wf[wi];
        while (w) {
            const auto v = Vertex((wi << 6) + std::size_t(__builtin_ctzll(w)));
            if (!fn(v)) return false;
            w &= w - 1;
        }
    }
    return true;
}

} // namespace

std::size_t Graph::edges_between(const VertexSet& s, const VertexSet& v) const {
    if (s.intersects(v)) throw SetsNotDisjoint("edges_between: sets overlap");
    // Iterate the smaller side, skipping isolated vertices.
    const VertexSet& a = s.size() <= v.size() ? s : v;
    const VertexSet& b = s.size() <= v.size() ? v : s;
    std::size_t count = 0;
    for_each_filtered(a, non_isolated_, [&](Vertex u) {
        count += adjacency_[u].intersection_count(b);
        return true;
    });
    return count;
}

std::size_t Graph::edges_within(const VertexSet& s) const {
    std::size_t twice = 0;
    for_each_filtered(s, non_isolated_, [&](Vertex u) {
        twice += adjacency_[u].intersection_count(s);
        return true;
    });
    return twice / 2;
}

bool Graph::no_edge_between(const VertexSet& s, const VertexSet& v) const {
    if (s.intersects(v)) throw SetsNotDisjoint("no_edge_between: sets overlap");
    const VertexSet& a = s.size() <= v.size() ? s : v;
    const VertexSet& b = s.size() <= v.size() ? v : s;
    return for_each_filtered(a, non_isolated_,
                             [&](Vertex u) { return !adjacency_[u].intersects(b); });
}

bool Graph::independent(const VertexSet& s) const {
    return for_each_filtered(s, non_isolated_,
                             [&](Vertex u) { return !adjacency_[u].intersects(s); });
}

Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
    Graph g;
    g.n_ = n;
    g.adjacency_.assign(n, VertexSet(n));
    g.non_isolated_ = VertexSet(n);
    for (const auto& [a, b] : edge_list) {
        if (a >= n || b >= n)
            throw InvalidVertex("edge endpoint out of range: (" + std::to_string(a) + "," +
                                std::to_string(b) + ") with n=" + std::to_string(n));
        if (a == b) throw SelfLoop("self-loop at vertex " + std::to_string(a));
        if (!g.adjacency_[a].contains(b)) {
            g.adjacency_[a].insert(b);
            g.adjacency_[b].insert(a);
            g.non_isolated_.insert(a);
            g.non_isolated_.insert(b);
            g.edges_.emplace_back(a, b);
        }
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

Partition random_partition(const VertexSet& s, std::size_t k, Rng& rng) {
    if (k == 0) throw InvalidPartCount("random_partition: k must be >= 1");
    Partition p;
    p.parts.assign(k, VertexSet(s.universe_size()));
    for (Vertex v = s.first(); v < s.universe_size(); v = s.next(v + 1))
        p.parts[std::size_t(rng.below(k))].insert(v);
    return p;
}

Partition partition_from_colors(const VertexSet& s, std::size_t k,
                                const std::vector<std::uint8_t>& colors) {
    if (k == 0) throw InvalidPartCount("partition_from_colors: k must be >= 1");
    if (colors.size() != s.size())
        throw InvalidParams("partition_from_colors: one color per member required");
    Partition p;
    p.parts.assign(k, VertexSet(s.universe_size()));
    std::size_t i = 0;
    for (Vertex v = s.first(); v < s.universe_size(); v = s.next(v + 1), ++i) {
        if (colors[i] >= k) throw InvalidParams("partition_from_colors: color out of range");
        p.parts[colors[i]].insert(v);
    }
    return p;
}

GraphFamily parse_family(const std::string& name) {
    if (name == "star") return GraphFamily::star;
    if (name == "clique_plus_isolated") return GraphFamily::clique_plus_isolated;
    if (name == "erdos_renyi") return GraphFamily::erdos_renyi;
    if (name == "random_bipartite") return GraphFamily::random_bipartite;
    if (name == "path") return GraphFamily::path;
    if (name == "empty") return GraphFamily::empty;
    if (name == "complete") return GraphFamily::complete;
    throw InvalidGeneratorParams("unknown graph family: " + name);
}

std::string family_name(GraphFamily family) {
    switch (family) {
        case GraphFamily::star: return "star";
        case GraphFamily::clique_plus_isolated: return "clique_plus_isolated";
        case GraphFamily::erdos_renyi: return "erdos_renyi";
        case GraphFamily::random_bipartite: return "random_bipartite";
        case GraphFamily::path: return "path";
        case GraphFamily::empty: return "empty";
        case GraphFamily::complete: return "complete";
    }
    return "?";
}

namespace {

double require_param(const GenParams& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw InvalidGeneratorParams("missing generator parameter: " + key);
    return it->second;
}

std::size_t require_count(const GenParams& params, const std::string& key) {
    const double x = require_param(params, key);
    if (x < 0 || x != std::floor(x) || x > 1e12)
        throw InvalidGeneratorParams("parameter " + key + " must be a non-negative integer");
    return std::size_t(x);
}

} // namespace

Graph generate(GraphFamily family, const GenParams& params, Rng& rng) {
    switch (family) {
        case GraphFamily::star:
            return make_star(require_count(params, "n"));
        case GraphFamily::clique_plus_isolated: {
            const std::size_t clique = require_count(params, "clique");
            std::size_t isolated;
            if (params.count("isolated")) {
                isolated = require_count(params, "isolated");
            } else {
                // Size ladders pass n; the clique is fixed and the rest pads.
                const std::size_t n = require_count(params, "n");
                if (n < clique)
                    throw InvalidGeneratorParams("clique_plus_isolated: n smaller than clique");
                isolated = n - clique;
            }
            return make_clique_plus_isolated(clique, isolated);
        }
        case GraphFamily::erdos_renyi: {
            const std::size_t n = require_count(params, "n");
            double p;
            if (params.count("p")) {
                p = require_param(params, "p");
            } else if (params.count("avg_deg")) {
                // Constant-average-degree ladders: p = avg_deg/(n-1).
                p = n > 1 ? std::min(1.0, require_param(params, "avg_deg") / double(n - 1)) : 0.0;
            } else {
                // em = expected edge count; handy for fixed-m size ladders.
                const double em = require_param(params, "em");
                const double pairs = double(n) * double(n - 1) / 2.0;
                p = pairs > 0 ? std::min(1.0, em / pairs) : 0.0;
            }
            return make_erdos_renyi(n, p, rng);
        }
        case GraphFamily::random_bipartite:
            return make_random_bipartite(require_count(params, "left"),
                                         require_count(params, "right"),
                                         require_param(params, "p"), rng);
        case GraphFamily::path:
            return make_path(require_count(params, "n"));
        case GraphFamily::empty:
            return make_empty(require_count(params, "n"));
        case GraphFamily::complete:
            return make_complete(require_count(params, "n"));
    }
    throw InvalidGeneratorParams("unhandled family");
}

Graph make_star(std::size_t n) {
    if (n == 0) throw InvalidGeneratorParams("star: n must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(n - 1);
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, Vertex(v));
    return build_graph(n, edges);
}

Graph make_clique_plus_isolated(std::size_t clique, std::size_t isolated) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t u = 0; u < clique; ++u)
        for (std::size_t v = u + 1; v < clique; ++v) edges.emplace_back(Vertex(u), Vertex(v));
    return build_graph(clique + isolated, edges);
}

Graph make_erdos_renyi(std::size_t n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw InvalidGeneratorParams("erdos_renyi: p must be in [0,1]");
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (n >= 2 && p > 0.0) {
        // Geometric skips over the C(n,2) pair sequence in colex order.
        const std::uint64_t total = std::uint64_t(n) * (n - 1) / 2;
        std::uint64_t idx = rng.geometric_skip(p);
        while (idx < total) {
            // Unrank colex: idx = v(v-1)/2 + u with u < v.
            auto v = std::uint64_t(std::floor((1.0 + std::sqrt(1.0 + 8.0 * double(idx))) / 2.0));
            while (v * (v - 1) / 2 > idx) --v;
            while ((v + 1) * v / 2 <= idx) ++v;
            const std::uint64_t u = idx - v * (v - 1) / 2;
            edges.emplace_back(Vertex(u), Vertex(v));
            idx += 1 + rng.geometric_skip(p);
        }
    }
    return build_graph(n, edges);
}

Graph make_random_bipartite(std::size_t left, std::size_t right, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw InvalidGeneratorParams("random_bipartite: p must be in [0,1]");
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (left > 0 && right > 0 && p > 0.0) {
        const std::uint64_t total = std::uint64_t(left) * right;
        std::uint64_t idx = rng.geometric_skip(p);
        while (idx < total) {
            const auto u = Vertex(idx / right);
            const auto v = Vertex(left + idx % right);
            edges.emplace_back(u, v);
            idx += 1 + rng.geometric_skip(p);
        }
    }
    return build_graph(left + right, edges);
}

Graph make_path(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(Vertex(v - 1), Vertex(v));
    return build_graph(n, edges);
}

Graph make_empty(std::size_t n) { return build_graph(n, {}); }

Graph make_complete(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(Vertex(u), Vertex(v));
    return build_graph(n, edges);
}

} // namespace edgeest
