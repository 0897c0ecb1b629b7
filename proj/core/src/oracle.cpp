#include "edgeest/oracle.hpp"

#include "edgeest/errors.hpp"

namespace edgeest {

std::string QueryLedger::to_json() const {
    return "{\"bis\": " + std::to_string(bis_count) + ", \"is\": " + std::to_string(is_count) + "}";
}

void OracleSession::check_budget(QueryKind kind) const {
    if (kind == QueryKind::bis && budget_.bis && ledger_.bis_count >= *budget_.bis)
        throw BudgetExceeded("BIS query budget exhausted");
    if (kind == QueryKind::is && budget_.is && ledger_.is_count >= *budget_.is)
        throw BudgetExceeded("IS query budget exhausted");
    if (budget_.total && ledger_.total() >= *budget_.total)
        throw BudgetExceeded("total query budget exhausted");
}

void OracleSession::charge(QueryKind kind, std::size_t s_size, std::size_t v_size, bool answer) {
    if (kind == QueryKind::bis)
        ++ledger_.bis_count;
    else
        ++ledger_.is_count;
    if (trace_.size() < trace_cap_)
        trace_.push_back({kind, std::uint32_t(s_size), std::uint32_t(v_size), answer});
    if (observer_) observer_(kind);
}

bool OracleSession::bis_query(const VertexSet& s, const VertexSet& v) {
    if (s.intersects(v)) throw SetsNotDisjoint("bis_query: sets overlap");
    check_budget(QueryKind::bis);
    const bool answer = graph_->no_edge_between(s, v);
    charge(QueryKind::bis, s.size(), v.size(), answer);
    return answer;
}

bool OracleSession::is_query(const VertexSet& s) {
    check_budget(QueryKind::is);
    const bool answer = graph_->independent(s);
    charge(QueryKind::is, s.size(), 0, answer);
    return answer;
}

bool OracleSession::edge_exists_via_is(Vertex u, Vertex v) {
    if (u == v) throw SelfLoop("edge_exists_via_is: u == v");
    VertexSet pair(n());
    pair.insert(u);
    pair.insert(v);
    return !is_query(pair);
}

bool OracleSession::neighborhood_empty_via_bis(Vertex v, const VertexSet& q) {
    if (q.contains(v)) throw VertexInQuerySet("neighborhood_empty_via_bis: v in Q");
    VertexSet single(n());
    single.insert(v);
    return bis_query(single, q);
}

} // namespace edgeest
