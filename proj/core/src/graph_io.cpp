#include "edgeest/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "edgeest/errors.hpp"

namespace edgeest {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

Graph load_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_data_line(in, line, lineno)) throw IngestError("edge list: missing header line");

    std::size_t n = 0, m = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m))
            throw IngestError("edge list: bad header at line " + std::to_string(lineno));
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw IngestError("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        std::istringstream es(line);
        std::uint64_t u = 0, v = 0;
        if (!(es >> u >> v))
            throw IngestError("edge list: bad edge at line " + std::to_string(lineno));
        if (u >= n || v >= n)
            throw IngestError("edge list: endpoint out of range at line " + std::to_string(lineno));
        edges.emplace_back(Vertex(u), Vertex(v));
    }

    try {
        return build_graph(n, edges);
    } catch (const Error& e) {
        throw IngestError(std::string("edge list: ") + e.what());
    }
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open graph file: " + path);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IngestError("cannot open output file: " + path);
    save_edge_list(g, out);
}

} // namespace edgeest
