#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polarity/builders.hpp"
#include "polarity/certificate.hpp"
#include "polarity/graph.hpp"
#include "polarity/iso.hpp"
#include "polarity/mis.hpp"
#include "polarity/sidon.hpp"

namespace polarity {

// Pass iff every vertex pair has at most one common neighbor; a fail carries
// the 4-cycle (u, w1, v, w2).
Certificate certify_c4_free(const Graph& g, const std::string& claim = "c4free",
                            Json params = Json::object());

// 4-cycles that would contain the edge uv after adding it: length-3 paths
// plus pairs of existing common neighbors. Throws AdjacentPair.
int64_t count_c4_through_pair(const Graph& g, int u, int v);

// C4-free (checked first) and every non-edge closes a C4.
Certificate certify_c4_saturated(const Graph& g, const std::string& claim = "saturated",
                                 Json params = Json::object());

// Ordered triples (a,b,c) in A^3 with a-b+c = x, a != b, b != c.
int64_t triple_count(const SidonSet& s, int64_t x);

// Brute-force bucket counts over all q^3 ordered triples, indexed by x.
std::vector<int64_t> triple_count_oracle(const SidonSet& s);

// Lemma 4.1 checks: every x outside A admits >= q-1 triples, per-x counts
// match the brute-force oracle, and the totals identity q(q-1)^2 holds.
Certificate certify_triples(const SidonSet& s);

// Distance structure of a Cayley sum graph; claims lemma5.1 (trichotomy and
// diameter), lemma5.2 (subgroup pairs at distance 3), lemma5.3 (coset pairs
// share no common neighbor).
std::vector<Certificate> distance_certificates(const Graph& g, const SidonSet& s);
Certificate distance_certify(const Graph& g, const SidonSet& s);  // lemma5.1 entry

struct PetersenWitness {
  int i = 0, j = 0, k = 0, s = 0, t = 0;
  std::vector<int> vertices;                  // u1,v1,w1,u2,v2,w2,z0,zi,zj,y (G3 ids)
  std::vector<std::array<int, 2>> edges;      // the 15 pairs, as G3 ids
  bool verified = false;                      // pairs are edges + iso to reference
};

// Constructive search over triples i+j = k and admissible (s,t). Returns the
// first witness that verifies, or nullopt when the space is exhausted.
std::optional<PetersenWitness> petersen_embed(const G3Assembly& a);

// Backtracking subgraph-isomorphism fallback: an injective map carrying
// Petersen edges to edges of g. Throws SearchSpaceExceeded past node_cap.
std::optional<std::vector<int>> petersen_brute_search(const Graph& g,
                                                      uint64_t node_cap = 500000000);

// Sum-set reformulation of independence in a Cayley sum graph:
// ((I+I) \ 2I) must avoid A.
bool cayley_independence_check(const SidonSet& s, const std::vector<int>& witness);

// Greedy-with-restarts triangle-free induced subgraph; the result always
// verifies triangle-free, no optimality claim.
std::vector<int> triangle_free_induced_search(const Graph& g, uint64_t seed = 0,
                                              int restarts = 20);
int64_t count_induced_triangles(const Graph& g, const std::vector<int>& subset);

// Exact comparisons against (n^{3/2} + n) / 2 without floating point.
struct KstBound {
  int64_t n = 0;
  // e <= (n sqrt(n) + n)/2, exact integer arithmetic
  bool admits(int64_t e) const;
  // floor of the bound value
  int64_t floor_value() const;
  bool is_integral() const;  // true when n is a perfect square
};

int64_t isqrt64(int64_t v);

// Degree-partition-refined backtracking; returns an edge-preserving bijection
// g -> h or nullopt after exhausting the space. Throws TooLarge above cap.
std::optional<std::vector<int>> small_graph_isomorphic(const Graph& g, const Graph& h,
                                                       int cap = 24);

}  // namespace polarity
