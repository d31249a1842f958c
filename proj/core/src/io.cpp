#include "strongdim/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace strongdim {

namespace {

long parse_int(const std::string& tok, int line_no, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected " + what +
                     ", got \"" + tok + "\"");
  return v;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  // Header line: "n m".
  long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected header \"n m\"");
    n = parse_int(a, line_no, "vertex count");
    m = parse_int(b, line_no, "edge count");
    break;
  }
  if (n < 0 || m < 0)
    throw ParseError("missing or malformed header line \"n m\"");
  GraphBuilder builder(int(n));
  long seen = 0;
  while (seen < m && std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected edge \"u v\"");
    long u = parse_int(a, line_no, "vertex id");
    long v = parse_int(b, line_no, "vertex id");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                       std::to_string(u >= 0 && u < n ? v : u) +
                       " out of range [0, " + std::to_string(n) + ")");
    if (u == v)
      throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " +
                       std::to_string(u));
    builder.add_edge(int(u), int(v));
    ++seen;
  }
  if (seen < m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(seen));
  return builder.build();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file: " + path);
  try {
    return read_edge_list(f);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open file for writing: " + path);
  write_edge_list(f, g);
}

namespace {

// graph6: printable bytes 63..126, each carrying 6 bits.  The upper
// triangle is read column by column: (0,1), (0,2), (1,2), (0,3), ...
constexpr const char* kGraph6Header = ">>graph6<<";

int g6_byte(char c, const std::string& line) {
  if (c < 63 || c > 126)
    throw ParseError("invalid graph6 byte '" + std::string(1, c) + "' in \"" +
                     line + "\"");
  return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string line = raw;
  if (line.rfind(kGraph6Header, 0) == 0) line = line.substr(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.pop_back();
  if (line.empty()) throw ParseError("empty graph6 line");

  std::size_t pos = 0;
  long n = 0;
  int b0 = g6_byte(line[pos++], line);
  if (b0 < 63) {
    n = b0;
  } else {
    // 126 escape: three bytes of 6 bits each (n <= 258047); the longer
    // eight-byte form is out of scope for this library's size guard.
    if (line.size() < 4) throw ParseError("truncated graph6 size field");
    if (line[pos] == '~')
      throw ParseError("graph6 graphs with n > 258047 are not supported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | g6_byte(line[pos++], line);
  }

  GraphBuilder builder(int(n));
  const long nbits = n * (n - 1) / 2;
  const long nbytes = (nbits + 5) / 6;
  if (long(line.size() - pos) < nbytes)
    throw ParseError("graph6 line too short for n=" + std::to_string(n));

  long bit = 0;
  int j = 1, i = 0;
  for (long k = 0; k < nbytes; ++k) {
    int val = g6_byte(line[pos + k], line);
    for (int s = 5; s >= 0 && bit < nbits; --s, ++bit) {
      if ((val >> s) & 1) builder.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return builder.build();
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
      trimmed.pop_back();
    if (trimmed.empty()) continue;
    out.push_back(parse_graph6(trimmed));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file: " + path);
  return read_graph6(f);
}

}  // namespace strongdim
