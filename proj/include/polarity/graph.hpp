#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "polarity/error.hpp"

namespace polarity {

// Dense undirected simple graph. Adjacency is stored as packed 64-bit rows;
// common-neighbor counting is row AND + popcount. Vertices may carry an
// external string label used by the exporters.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n)
      : n_(n), words_((n + 63) / 64), rows_(static_cast<size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v) {
    if (u == v) throw Error("LoopEdge", "self loops are not representable");
    rows_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    rows_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
  }

  bool adjacent(int u, int v) const {
    return rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
  }

  const uint64_t* row(int u) const { return rows_.data() + static_cast<size_t>(u) * words_; }

  int degree(int u) const {
    const uint64_t* r = row(u);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  int64_t edge_count() const {
    int64_t bits = 0;
    for (uint64_t w : rows_) bits += std::popcount(w);
    return bits / 2;
  }

  int common_neighbors(int u, int v) const {
    const uint64_t* a = row(u);
    const uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    const uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
      uint64_t bits = r[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool has_labels() const { return !labels_.empty(); }
  void set_label(int v, std::string label) {
    if (labels_.empty()) labels_.resize(static_cast<size_t>(n_));
    labels_[static_cast<size_t>(v)] = std::move(label);
  }
  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }

  // Subgraph induced on `keep`; vertex k of the result is keep[k].
  Graph induced(const std::vector<int>& keep) const;

  // Degree multiset, ascending.
  std::vector<int> degree_sequence() const;

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> rows_;
  std::vector<std::string> labels_;
};

enum class GraphFormat { graph6, dimacs, edges };

GraphFormat parse_format(const std::string& name);
std::string format_name(GraphFormat f);

// Deterministic byte encodings for a fixed vertex order. graph6 uses the
// long form automatically when n > 62.
std::string export_graph(const Graph& g, GraphFormat f);

}  // namespace polarity
