#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowtri/graph.hpp"

namespace rainbowtri {

// graph6: 6-bit printable encoding of the upper adjacency triangle in
// column-major order (for j = 1..n-1, i = 0..j-1). One graph per line, no
// header, LF newlines. Noncanonical input (bad length, nonzero padding,
// long-form order below 63) is rejected, not normalized.

namespace g6detail {

constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'

// graphs are stored with a dense edge-id matrix, so huge orders would
// allocate quadratically; everything this toolkit handles is far smaller
constexpr long long kMaxParseOrder = 4096;

inline int data_byte(std::string_view s, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < kLo || c > kHi) throw parse_error("graph6 byte out of printable range", i);
  return c - kLo;
}

}  // namespace g6detail

inline Graph parse_graph6(std::string_view line) {
  using namespace g6detail;
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (line.empty()) throw parse_error("empty graph6 line", 0);

  std::size_t pos = 0;
  long long n = 0;
  int first = data_byte(line, 0);
  if (first < kHi - kLo) {
    n = first;
    pos = 1;
  } else {
    if (line.size() < 4) throw parse_error("truncated graph6 order field", line.size());
    if (static_cast<unsigned char>(line[1]) == kHi)
      throw parse_error("graph6 orders above 258047 are not supported", 1);
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | data_byte(line, i);
    if (n < 63) throw parse_error("noncanonical long-form graph6 order", 1);
    if (n > kMaxParseOrder)
      throw parse_error("graph6 order exceeds the supported maximum of " +
                            std::to_string(kMaxParseOrder),
                        1);
    pos = 4;
  }

  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() < pos + nbytes)
    throw parse_error("truncated graph6 adjacency data", line.size());
  if (line.size() > pos + nbytes)
    throw parse_error("trailing bytes after graph6 data", pos + nbytes);

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      std::size_t byte_index = pos + static_cast<std::size_t>(bit / 6);
      int value = data_byte(line, byte_index);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // padding bits past the triangle must be zero
  if (nbits % 6 != 0) {
    std::size_t last = pos + nbytes - 1;
    int value = data_byte(line, last);
    int used = static_cast<int>(nbits % 6);
    if ((value & ((1 << (6 - used)) - 1)) != 0)
      throw parse_error("nonzero graph6 padding bits", last);
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  using namespace g6detail;
  long long n = g.order();
  if (n > 258047) throw domain_error("graph6 orders above 258047 are not supported");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(kLo + n));
  } else {
    out.push_back(static_cast<char>(kHi));
    out.push_back(static_cast<char>(kLo + ((n >> 12) & 0x3f)));
    out.push_back(static_cast<char>(kLo + ((n >> 6) & 0x3f)));
    out.push_back(static_cast<char>(kLo + (n & 0x3f)));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kLo + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kLo + (acc << (6 - filled))));
  return out;
}

/// Reads one graph per line; blank lines are rejected as malformed.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what(), e.byte_offset());
    }
  }
  return graphs;
}

inline void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << emit_graph6(g) << '\n';
}

}  // namespace rainbowtri
