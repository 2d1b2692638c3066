#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rainbowtri/graph.hpp"

namespace rainbowtri {

/// Surjective edge coloring: color_of is total on edge ids 0..m-1 and uses
/// every color id in 0..num_colors-1 at least once.
struct EdgeColoring {
  int num_colors = 0;
  std::vector<int> color_of;

  static EdgeColoring from_colors(const Graph& g, std::vector<int> colors) {
    EdgeColoring c;
    c.color_of = std::move(colors);
    int k = 0;
    for (int x : c.color_of) k = std::max(k, x + 1);
    c.num_colors = k;
    c.validate(g);
    return c;
  }

  void validate(const Graph& g) const {
    if (static_cast<int>(color_of.size()) != g.size())
      throw domain_error("coloring must be total on all edges");
    std::vector<char> used(num_colors, 0);
    for (int c : color_of) {
      if (c < 0 || c >= num_colors) throw domain_error("color id out of range");
      used[c] = 1;
    }
    for (int c = 0; c < num_colors; ++c)
      if (!used[c]) throw domain_error("coloring is not surjective onto 0..k-1");
  }
};

// Coloring file format: a header line "colors k", then one line "u v c" per
// edge with 0-based vertex ids matching the companion graph6 labeling.

inline void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c) {
  c.validate(g);
  out << "colors " << c.num_colors << '\n';
  for (int e = 0; e < g.size(); ++e)
    out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << c.color_of[e] << '\n';
}

inline EdgeColoring read_coloring(std::istream& in, const Graph& g) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("missing coloring header", 0);
  std::istringstream hdr(line);
  std::string word;
  int k = -1;
  if (!(hdr >> word >> k) || word != "colors" || k < 0)
    throw parse_error("coloring header must be 'colors k'", 0);
  EdgeColoring c;
  c.num_colors = k;
  c.color_of.assign(g.size(), -1);
  int seen = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int u, v, col;
    if (!(ls >> u >> v >> col)) throw domain_error("malformed coloring line: " + line);
    auto e = g.edge_id(u, v);
    if (!e) throw domain_error("coloring references nonexistent edge " + line);
    if (c.color_of[*e] != -1) throw domain_error("duplicate coloring line for edge " + line);
    c.color_of[*e] = col;
    ++seen;
  }
  if (seen != g.size()) throw domain_error("coloring does not cover every edge");
  c.validate(g);
  return c;
}

}  // namespace rainbowtri
