#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6: N(n) length prefix followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits
// per byte, each byte offset by 63. An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Reads every non-empty line of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Edge-list text: "n m" on the first line, then m lines "u v".
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

// Loads a file holding either graph6 lines or a single edge list ("-" = stdin).
std::vector<Graph> load_graphs(const std::string& path);

}  // namespace kempe
