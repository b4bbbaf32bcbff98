#pragma once

#include <cstdint>
#include <vector>

#include "polarity/builders.hpp"
#include "polarity/certificate.hpp"
#include "polarity/field.hpp"
#include "polarity/graph.hpp"
#include "polarity/sidon.hpp"

namespace polarity {

// Staged augmentation of the Cayley sum graph: G1 wires a new vertex z_i to
// each coset H+i, G2 wires y to all z_i, G3 pairs z_j with z_{q+1-j}. Each
// stage is checked C4-free; a violation throws StageC4Violation.
//
// Vertex ids: 0..n-1 are the Cayley elements (n = q^2-1), n+i is z_i for
// 0 <= i <= q, and n+q+1 is y.
struct G3Assembly {
  int q = 0;
  bool even = false;
  SidonSet sidon;
  Graph g1, g2, g3;
  int64_t cayley_edges = 0;
  int64_t stage_edges[3] = {0, 0, 0};  // e(G1), e(G2), e(G3)
  int delta = 0;  // 2^{-1}(alpha - 1), odd q only

  int n_cayley = 0;
  int z_vertex(int i) const { return n_cayley + i; }
  int y_vertex() const { return n_cayley + q + 1; }
  int total_vertices() const { return n_cayley + q + 2; }

  // label helpers for reports
  std::string vertex_name(int v) const;
};

G3Assembly build_g3(const CayleyGraph& cg, const ExtFieldCtx& ctx);

// The vertex map into PG(2,q); output is already normalized. Dispatches on
// the parity of q.
ProjectivePoint phi(const G3Assembly& a, const ExtFieldCtx& ctx, int v);

// Exhaustive adjacency certificate: phi is a bijection, preserves adjacency
// and non-adjacency in both directions, and restricts to an induced-subgraph
// embedding of the Cayley graph. er must be built with the alt form.
Certificate verify_isomorphism(const G3Assembly& a, const ExtFieldCtx& ctx, const ErGraph& er);

// Pure GF(q) adjacency test between a_i + t1(q+1) and a_j + t2(q+1):
// b_i + b_j == mu^{t1+t2} - alpha. For equal vertices this is the loop
// (absolute point) condition; the graph itself never has loops.
bool adjacency_criterion(const SidonSet& s, const ExtFieldCtx& ctx, int i, int t1, int j, int t2);

}  // namespace polarity
