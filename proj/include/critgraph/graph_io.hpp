#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "critgraph/graph.hpp"

namespace critgraph {

enum class GraphFormat { edge_list, graph6, builtin };

/// A graph as supplied on the command line or in a file, before parsing.
struct GraphDocument {
    std::string name;
    GraphFormat format = GraphFormat::edge_list;
    std::string payload;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "n m" on the first line, then m lines "u v" with 0-based endpoints.
/// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::istream &in);
Graph parse_edge_list(std::string_view text);

/// One graph in graph6 format (optional ">>graph6<<" header allowed).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph &g);

/// `kind:n` for kind in cycle, complete, antihole, path, mycielski-cycle.
Graph builtin_graph(std::string_view spec);

Graph load(const GraphDocument &doc);

} // namespace critgraph
