#ifndef EDGEEST_ORACLE_HPP
#define EDGEEST_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgeest/graph.hpp"

namespace edgeest {

enum class QueryKind { bis, is };

// Exact per-type count of oracle invocations; the artifact's cost model.
struct QueryLedger {
    std::uint64_t bis_count = 0;
    std::uint64_t is_count = 0;

    std::uint64_t total() const { return bis_count + is_count; }
    std::string to_json() const; // {"bis": int, "is": int}
};

// Optional per-type or total caps on answered queries.
struct Budget {
    std::optional<std::uint64_t> bis;
    std::optional<std::uint64_t> is;
    std::optional<std::uint64_t> total;
};

struct QueryTraceEntry {
    QueryKind kind;
    std::uint32_t s_size;
    std::uint32_t v_size; // 0 for IS queries
    bool answer;
};

// Query-accounted oracle facade over a Graph. Every answer increments
// exactly one ledger counter; budget checks run before answering, so with a
// cap of B exactly B queries are answered before BudgetExceeded. Single
// owner; use one session per trial.
class OracleSession {
public:
    explicit OracleSession(const Graph& graph) : graph_(&graph) {}

    const Graph& graph() const { return *graph_; }
    std::size_t n() const { return graph_->vertex_count(); }
    const QueryLedger& ledger() const { return ledger_; }

    void set_budget(Budget budget) { budget_ = budget; }
    void reset_ledger() { ledger_ = QueryLedger{}; }

    // Bounded trace of queries for debugging; disabled by default.
    void enable_trace(std::size_t cap) {
        trace_cap_ = cap;
        trace_.clear();
        trace_.reserve(cap < 4096 ? cap : 4096);
    }
    const std::vector<QueryTraceEntry>& trace() const { return trace_; }

    // Test hook: observes every answered query.
    void set_observer(std::function<void(QueryKind)> fn) { observer_ = std::move(fn); }

    // True iff m(S,V) = 0. S and V must be disjoint; empty sets are legal
    // and are charged like any other query.
    bool bis_query(const VertexSet& s, const VertexSet& v);

    // True iff S is an independent set.
    bool is_query(const VertexSet& s);

    // True iff {u,v} is an edge; costs exactly one IS query on {u,v}.
    bool edge_exists_via_is(Vertex u, Vertex v);

    // True iff Q contains no neighbor of v; costs exactly one BIS query
    // ({v}, Q). Requires v not in Q.
    bool neighborhood_empty_via_bis(Vertex v, const VertexSet& q);

private:
    void charge(QueryKind kind, std::size_t s_size, std::size_t v_size, bool answer);
    void check_budget(QueryKind kind) const;

    const Graph* graph_;
    QueryLedger ledger_;
    Budget budget_;
    std::size_t trace_cap_ = 0;
    std::vector<QueryTraceEntry> trace_;
    std::function<void(QueryKind)> observer_;
};

} // namespace edgeest

#endif
