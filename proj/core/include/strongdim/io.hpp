#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "strongdim/graph.hpp"

namespace strongdim {

/// Raised on unreadable or malformed input files; the message names the
/// offending line or token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list text format: first line "n m", then m lines "u v" with
/// 0 <= u,v < n.  Duplicate and reversed edges are tolerated on read;
/// loops are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// One graph from a graph6 line (standard bit packing; a leading
/// ">>graph6<<" header is tolerated).
Graph parse_graph6(const std::string& line);

/// Every non-blank line of the stream as a graph6 graph.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace strongdim
