#ifndef EDGEEST_GRAPH_IO_HPP
#define EDGEEST_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "edgeest/graph.hpp"

namespace edgeest {

// Edge-list text format: first non-comment line `n m`, then m lines `u v`
// (0-based, space-separated). Lines starting with `#` are ignored.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

} // namespace edgeest

#endif
