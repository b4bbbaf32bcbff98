#include "polarity/graph.hpp"

#include <algorithm>

namespace polarity {

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph out(static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a) {
    for (size_t b = a + 1; b < keep.size(); ++b)
      if (adjacent(keep[a], keep[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
    if (!labels_.empty()) out.set_label(static_cast<int>(a), labels_[static_cast<size_t>(keep[a])]);
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) deg[static_cast<size_t>(v)] = degree(v);
  std::sort(deg.begin(), deg.end());
  return deg;
}

GraphFormat parse_format(const std::string& name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "edges") return GraphFormat::edges;
  throw Error("UnknownFormat", "unknown graph format: " + name);
}

std::string format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: return "graph6";
    case GraphFormat::dimacs: return "dimacs";
    case GraphFormat::edges: return "edges";
  }
  return "?";
}

namespace {

std::string to_graph6(const Graph& g) {
  const int n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // long form: '~' then n in three 6-bit groups (n <= 258047)
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int bit = 0;
  int acc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bit == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bit = 0;
        acc = 0;
      }
    }
  }
  if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
  return out;
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.size()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v))
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string to_edges(const Graph& g) {
  std::string out;
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) continue;
      if (g.has_labels())
        out += g.label(u) + " " + g.label(v) + "\n";
      else
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  }
  return out;
}

}  // namespace

std::string export_graph(const Graph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: return to_graph6(g);
    case GraphFormat::dimacs: return to_dimacs(g);
    case GraphFormat::edges: return to_edges(g);
  }
  throw Error("UnknownFormat", "unhandled format");
}

}  // namespace polarity
