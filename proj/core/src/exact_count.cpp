#include "edgeest/exact_count.hpp"

#include <algorithm>
#include <set>

#include "edgeest/errors.hpp"

namespace edgeest {

std::uint32_t log2_floor(std::uint64_t x) {
    return x <= 1 ? 0 : 63 - std::uint32_t(__builtin_clzll(x));
}

std::uint32_t log2_ceil(std::uint64_t x) {
    if (x <= 1) return 0;
    return log2_floor(x - 1) + 1;
}

std::uint64_t bis_between_query_cap(std::uint64_t edge_cap, std::size_t n) {
    return 1 + 6 * (edge_cap + 1) * (log2_ceil(n) + 2);
}

std::uint64_t bis_all_query_cap(std::uint64_t edge_cap, std::size_t n) {
    return log2_ceil(n) + 2 + 20 * (edge_cap + 1) * (log2_ceil(n) + 2);
}

std::uint64_t is_within_query_cap(std::uint64_t edge_cap, std::size_t n) {
    return 1 + 12 * (edge_cap + 1) * (log2_ceil(n) + 2);
}

namespace {

constexpr std::uint64_t kUnbounded = ~std::uint64_t(0);

// Shared stop state for budgeted enumeration. `found_base` counts distinct
// edges already secured elsewhere (bis_exact_all rounds); the invariant is
// that the run only claims m > edge_cap when that many distinct edges
// certainly exist, or when the query backstop (a certified worst case for
// m <= edge_cap) is exhausted.
struct StopCtx {
    std::uint64_t edge_cap = kUnbounded;
    std::uint64_t query_cap = kUnbounded;
    std::uint64_t queries = 0;
    std::uint64_t found_base = 0;
    bool exceeded = false;

    bool pre_query() {
        if (queries >= query_cap) {
            exceeded = true;
            return false;
        }
        ++queries;
        return true;
    }

    bool over_cap(std::uint64_t found_local) {
        if (found_base + found_local > edge_cap) exceeded = true;
        return exceeded;
    }
};

// Quadtree recursion over (S,V). `is_mode` answers via IS(S' u V') instead
// of BIS(S',V'); both sides being independent makes the answers equivalent.
void quad_enumerate(OracleSession& session, bool is_mode, const VertexSet& s, const VertexSet& v,
                    StopCtx& ctx, std::vector<Edge>& out) {
    if (ctx.exceeded || s.empty() || v.empty()) return;
    if (!ctx.pre_query()) return;

    bool no_edges;
    if (is_mode)
        no_edges = session.is_query(set_union(s, v));
    else
        no_edges = session.bis_query(s, v);
    if (no_edges) return;

    if (s.size() == 1 && v.size() == 1) {
        out.emplace_back(s.first(), v.first());
        ctx.over_cap(out.size());
        return;
    }

    // Non-singleton sides split into ceil/floor halves by ascending id;
    // children visited in fixed order for reproducible traces.
    VertexSet s2, v2;
    const VertexSet s1 = s.size() > 1 ? s.split_first_half(s2) : s;
    const VertexSet v1 = v.size() > 1 ? v.split_first_half(v2) : v;

    quad_enumerate(session, is_mode, s1, v1, ctx, out);
    if (!v2.empty()) quad_enumerate(session, is_mode, s1, v2, ctx, out);
    if (!s2.empty()) {
        quad_enumerate(session, is_mode, s2, v1, ctx, out);
        if (!v2.empty()) quad_enumerate(session, is_mode, s2, v2, ctx, out);
    }
}

void adjacent_rec(OracleSession& session, Vertex v, const VertexSet& single,
                  const VertexSet& range, StopCtx& ctx, std::vector<Edge>& out) {
    if (ctx.exceeded || range.empty()) return;
    if (!ctx.pre_query()) return;
    if (session.bis_query(single, range)) return;
    if (range.size() == 1) {
        out.emplace_back(v, range.first());
        return;
    }
    VertexSet rest;
    const VertexSet head = range.split_first_half(rest);
    adjacent_rec(session, v, single, head, ctx, out);
    adjacent_rec(session, v, single, rest, ctx, out);
}

std::vector<Edge> adjacent_edges_impl(OracleSession& session, Vertex v, StopCtx& ctx) {
    VertexSet single(session.n());
    single.insert(v);
    VertexSet rest = VertexSet::full(session.n());
    rest.erase(v);
    std::vector<Edge> out;
    adjacent_rec(session, v, single, rest, ctx, out);
    return out;
}

// BFS component expansion; adds edges into `sink` (deduplicating) and
// returns the component's vertices.
VertexSet component_impl(OracleSession& session, Vertex v, StopCtx& ctx, std::set<Edge>& sink) {
    VertexSet visited(session.n());
    visited.insert(v);
    std::vector<Vertex> queue{v};
    for (std::size_t head = 0; head < queue.size() && !ctx.exceeded; ++head) {
        const Vertex u = queue[head];
        for (const Edge& e : adjacent_edges_impl(session, u, ctx)) {
            sink.insert(e);
            const Vertex w = e.u == u ? e.v : e.u;
            if (!visited.contains(w)) {
                visited.insert(w);
                queue.push_back(w);
            }
        }
        ctx.over_cap(sink.size() - ctx.found_base);
    }
    return visited;
}

} // namespace

ExactCount bis_exact_between(OracleSession& session, const VertexSet& s, const VertexSet& v,
                             std::optional<std::uint64_t> edge_cap) {
    if (s.intersects(v)) throw SetsNotDisjoint("bis_exact_between: sets overlap");
    StopCtx ctx;
    if (edge_cap) {
        ctx.edge_cap = *edge_cap;
        ctx.query_cap = bis_between_query_cap(*edge_cap, session.n());
    }
    ExactCount result;
    quad_enumerate(session, false, s, v, ctx, result.edges);
    result.exact = !ctx.exceeded;
    return result;
}

std::vector<Edge> bis_adjacent_edges(OracleSession& session, Vertex v) {
    StopCtx ctx;
    return adjacent_edges_impl(session, v, ctx);
}

std::vector<Edge> bis_component_edges(OracleSession& session, Vertex v) {
    StopCtx ctx;
    std::set<Edge> sink;
    component_impl(session, v, ctx, sink);
    return {sink.begin(), sink.end()};
}

ExactCount bis_exact_all(OracleSession& session, std::optional<std::uint64_t> edge_cap) {
    const std::size_t n = session.n();
    StopCtx ctx;
    if (edge_cap) {
        ctx.edge_cap = *edge_cap;
        ctx.query_cap = bis_all_query_cap(*edge_cap, n);
    }

    std::set<Edge> found;
    VertexSet unvisited = VertexSet::full(n);
    const std::uint32_t bits = log2_ceil(n);
    for (std::uint32_t b = 0; b < bits && !ctx.exceeded; ++b) {
        VertexSet side_a(n), side_b(n);
        for (Vertex u = unvisited.first(); u < n; u = unvisited.next(u + 1))
            ((u >> b) & 1u ? side_a : side_b).insert(u);
        if (side_a.empty() || side_b.empty()) continue;

        ctx.found_base = found.size();
        std::vector<Edge> cross;
        quad_enumerate(session, false, side_a, side_b, ctx, cross);
        if (ctx.exceeded) {
            for (const Edge& e : cross) found.insert(e);
            break;
        }

        // The BFS dedups into the global set, so cap checks compare the set
        // size itself from here on.
        ctx.found_base = 0;
        for (const Edge& e : cross) {
            if (ctx.exceeded) break;
            for (const Vertex u : {e.u, e.v}) {
                if (!unvisited.contains(u)) continue;
                const VertexSet comp = component_impl(session, u, ctx, found);
                unvisited.subtract(comp);
                if (ctx.exceeded) break;
            }
        }
        ctx.over_cap(found.size());
    }

    ExactCount result;
    result.edges.assign(found.begin(), found.end());
    result.exact = !ctx.exceeded;
    return result;
}

ExactCount is_exact_bipartite(OracleSession& session, const VertexSet& s, const VertexSet& v,
                              std::optional<std::uint64_t> edge_cap, bool verify_preconditions) {
    if (s.intersects(v)) throw SetsNotDisjoint("is_exact_bipartite: sets overlap");
    if (verify_preconditions) {
        if (!session.is_query(s)) throw NotIndependent("is_exact_bipartite: S has an edge");
        if (!session.is_query(v)) throw NotIndependent("is_exact_bipartite: V has an edge");
    }
    StopCtx ctx;
    if (edge_cap) {
        ctx.edge_cap = *edge_cap;
        ctx.query_cap = bis_between_query_cap(*edge_cap, session.n());
    }
    ExactCount result;
    quad_enumerate(session, true, s, v, ctx, result.edges);
    result.exact = !ctx.exceeded;
    return result;
}

namespace {

// Peeling + merging; `ctx` lets the budgeted caller abort once the number
// of edges implied by completed peels alone exceeds the cap (each peel that
// stops before exhausting the remainder witnesses a distinct edge).
Partition decompose_impl(OracleSession& session, const VertexSet& s, StopCtx& ctx) {
    const std::size_t n = session.n();
    Partition out;
    if (s.empty()) return out;

    const std::vector<Vertex> members = s.members();
    std::uint64_t implied_edges = 0;
    std::size_t pos = 0;
    while (pos < members.size() && !ctx.exceeded) {
        const std::size_t remaining = members.size() - pos;
        std::size_t take = 1;
        if (remaining > 1) {
            VertexSet rem(n);
            for (std::size_t i = pos; i < members.size(); ++i) rem.insert(members[i]);
            if (!ctx.pre_query()) break;
            if (session.is_query(rem)) {
                take = remaining;
            } else {
                // Largest independent prefix; length 1 is always independent.
                std::size_t lo = 1, hi = remaining - 1;
                while (lo < hi && !ctx.exceeded) {
                    const std::size_t mid = (lo + hi + 1) / 2;
                    VertexSet prefix(n);
                    for (std::size_t i = pos; i < pos + mid; ++i) prefix.insert(members[i]);
                    if (!ctx.pre_query()) break;
                    if (session.is_query(prefix))
                        lo = mid;
                    else
                        hi = mid - 1;
                }
                take = lo;
                if (ctx.over_cap(++implied_edges)) break;
            }
        }

        VertexSet piece(n);
        for (std::size_t i = pos; i < pos + take; ++i) piece.insert(members[i]);
        pos += take;

        bool merged = false;
        for (VertexSet& cls : out.parts) {
            if (ctx.exceeded || !ctx.pre_query()) break;
            if (session.is_query(set_union(cls, piece))) {
                cls.unite_with(piece);
                merged = true;
                break;
            }
        }
        if (!merged && !ctx.exceeded) out.parts.push_back(std::move(piece));
    }
    return out;
}

} // namespace

Partition is_decompose_independent(OracleSession& session, const VertexSet& s) {
    StopCtx ctx;
    return decompose_impl(session, s, ctx);
}

ExactCount is_exact_within(OracleSession& session, const VertexSet& s,
                           std::optional<std::uint64_t> edge_cap) {
    ExactCount result;
    if (s.size() <= 1) return result;

    StopCtx ctx;
    if (edge_cap) {
        ctx.edge_cap = *edge_cap;
        ctx.query_cap = is_within_query_cap(*edge_cap, session.n());
    }

    const Partition parts = decompose_impl(session, s, ctx);
    if (ctx.exceeded) {
        result.exact = false;
        return result;
    }

    for (std::size_t i = 0; i < parts.parts.size() && !ctx.exceeded; ++i) {
        for (std::size_t j = i + 1; j < parts.parts.size() && !ctx.exceeded; ++j) {
            // Parts are independent by construction; no re-verification.
            quad_enumerate(session, true, parts.parts[i], parts.parts[j], ctx, result.edges);
            ctx.over_cap(result.edges.size());
        }
    }
    result.exact = !ctx.exceeded;
    return result;
}

} // namespace edgeest
