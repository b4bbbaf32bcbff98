#include <doctest.h>

#include <algorithm>
#include <random>

#include "polarity/analysis.hpp"
#include "polarity/kernels.hpp"
#include "polarity/report.hpp"

using namespace polarity;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph random_graph(int n, double density, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// full subset enumeration oracle for alpha, n <= 20
int alpha_oracle(const Graph& g) {
  const int n = g.size();
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<int>(std::popcount(mask)) <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> v & 1) && g.adjacent(u, v)) ok = false;
    }
    if (ok) best = std::popcount(mask);
  }
  return best;
}

QContext qctx(int q) { return make_q_context(q, std::nullopt, std::nullopt); }

}  // namespace

TEST_CASE("c4 certificate: fail carries the cycle, pass on the paper graphs") {
  const Certificate bad = certify_c4_free(cycle(4));
  CHECK(!bad.pass);
  REQUIRE(bad.witness.contains("cycle"));
  const Certificate ok = certify_c4_free(cayley_sum_graph(qctx(5).sidon).graph);
  CHECK(ok.pass);
  CHECK(certify_c4_free(er_graph(qctx(3).base, ErForm::dot).graph).pass);
  CHECK(certify_c4_free(er_graph(qctx(3).base, ErForm::alt).graph).pass);
}

TEST_CASE("count_c4_through_pair rejects adjacent input") {
  const Graph g = cycle(4);
  CHECK_THROWS_WITH_AS(count_c4_through_pair(g, 0, 1), doctest::Contains("AdjacentPair"), Error);
  CHECK(count_c4_through_pair(g, 0, 2) >= 1);
}

TEST_CASE("saturation: empty graph fails, G_{5} passes") {
  const Certificate empty = certify_c4_saturated(Graph(3));
  CHECK(!empty.pass);
  const Certificate g5 = certify_c4_saturated(cayley_sum_graph(qctx(5).sidon).graph);
  CHECK(g5.pass);
}

TEST_CASE("saturation: H_{8} passes") {
  const QContext qc = qctx(8);
  CayleyGraph cg = cayley_sum_graph(qc.sidon);
  attach_special_vertex(cg.meta, lindstrom_shift(qc.ext, qc.sidon));
  CHECK(certify_c4_saturated(h_graph(cg).graph).pass);
}

TEST_CASE("triple counts match the q^3 oracle and the LB") {
  for (int q : {3, 4, 5, 7}) {
    const SidonSet s = qctx(q).sidon;
    const auto oracle = triple_count_oracle(s);
    int64_t total = 0;
    for (int64_t x = 0; x < s.n; ++x) {
      const int64_t direct = triple_count(s, x);
      CHECK(direct == oracle[static_cast<size_t>(x)]);
      total += direct;
      if (!s.contains(x)) CHECK(direct >= q - 1);
    }
    CHECK(total == static_cast<int64_t>(q) * (q - 1) * (q - 1));
    CHECK(certify_triples(s).pass);
  }
}

TEST_CASE("distance trichotomy for q in {3,4,5}") {
  for (int q : {3, 4, 5}) {
    const QContext qc = qctx(q);
    const CayleyGraph cg = cayley_sum_graph(qc.sidon);
    const auto certs = distance_certificates(cg.graph, qc.sidon);
    for (const auto& c : certs) CHECK(c.pass);
    CHECK(certs[0].stats["diameter"] == 3);
  }
}

TEST_CASE("q=2 diameter is 2: the subgroup has no second element") {
  const QContext qc = qctx(2);
  const CayleyGraph cg = cayley_sum_graph(qc.sidon);
  const auto certs = distance_certificates(cg.graph, qc.sidon);
  CHECK(certs[0].pass);
  CHECK(certs[0].stats["diameter"] == 2);
}

TEST_CASE("subgroup pairs sit at distance 3 (q=5: vertices 0 and 6)") {
  const QContext qc = qctx(5);
  const CayleyGraph cg = cayley_sum_graph(qc.sidon);
  const auto dist = kernels::bfs_distances(cg.graph);
  CHECK(dist[0 * cg.graph.size() + 6] == 3);
}

TEST_CASE("alpha: C5 = 2, Petersen = 4") {
  CHECK(max_independent_set(cycle(5)).alpha == 2);
  const auto pet = max_independent_set(petersen_reference());
  CHECK(pet.exact);
  CHECK(pet.alpha == 4);
  CHECK(is_independent_set(petersen_reference(), pet.witness));
}

TEST_CASE("branch and bound agrees with subset enumeration, n <= 20") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = random_graph(14 + static_cast<int>(seed % 5), 0.2 + 0.06 * (seed % 4), seed);
    const auto bb = max_independent_set(g);
    REQUIRE(bb.exact);
    CHECK(bb.alpha == alpha_oracle(g));
    CHECK(is_independent_set(g, bb.witness));
  }
}

TEST_CASE("alpha of G_{3}: branch and bound, enumeration, and sum-set form agree") {
  const QContext qc = qctx(3);
  const CayleyGraph cg = cayley_sum_graph(qc.sidon);
  const auto bb = max_independent_set(cg.graph);
  REQUIRE(bb.exact);
  CHECK(bb.alpha == alpha_oracle(cg.graph));
  CHECK(is_independent_set(cg.graph, bb.witness));
  CHECK(cayley_independence_check(qc.sidon, bb.witness));
}

TEST_CASE("budget exhaustion returns a lower bound") {
  const Graph g = random_graph(40, 0.2, 7);
  MisBudget tiny;
  tiny.node_cap = 10;
  const auto r = max_independent_set(g, tiny);
  CHECK(!r.exact);
  CHECK(r.alpha >= 1);
  CHECK(is_independent_set(g, r.witness));
}

TEST_CASE("sum-set independence check catches edges") {
  const QContext qc = qctx(3);
  // {0,1} is an edge (0+1 = 1 in A): the sum-set form must reject it
  CHECK(!cayley_independence_check(qc.sidon, {0, 1}));
}

TEST_CASE("triangle-free search: K3 keeps 2, bipartite keeps everything") {
  const auto j3 = triangle_free_induced_search(cycle(3), 0);
  CHECK(j3.size() == 2);
  Graph bip(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) bip.add_edge(u, v);
  CHECK(triangle_free_induced_search(bip, 0).size() == 6);
  // seeded determinism
  const QContext qc = qctx(8);
  const Graph g8 = cayley_sum_graph(qc.sidon).graph;
  const auto a = triangle_free_induced_search(g8, 17);
  const auto b = triangle_free_induced_search(g8, 17);
  CHECK(a == b);
  CHECK(count_induced_triangles(g8, a) == 0);
}

TEST_CASE("kst bound: exact comparisons") {
  CHECK(KstBound{4}.floor_value() == 6);
  CHECK(KstBound{4}.is_integral());
  CHECK(KstBound{1}.floor_value() == 1);
  CHECK(KstBound{4}.admits(6));
  CHECK(!KstBound{4}.admits(7));
  // n = 13 (q = 3): bound floor = (isqrt(2197)+13)/2 = (46+13)/2 = 29 >= 24
  CHECK(KstBound{13}.admits(24));
  CHECK(!KstBound{13}.is_integral());
}

TEST_CASE("small graph isomorphism: relabeled C5 yes, C6 vs 2K3 no") {
  const Graph c5 = cycle(5);
  Graph shuffled(5);
  // relabel via permutation (2 4 1 3 0)
  const int perm[5] = {2, 4, 1, 3, 0};
  for (int i = 0; i < 5; ++i) shuffled.add_edge(perm[i], perm[(i + 1) % 5]);
  CHECK(small_graph_isomorphic(c5, shuffled).has_value());

  const Graph c6 = cycle(6);
  Graph two_k3(6);
  for (int base : {0, 3})
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) two_k3.add_edge(base + a, base + b);
  CHECK(!small_graph_isomorphic(c6, two_k3).has_value());
  CHECK_THROWS_WITH_AS(small_graph_isomorphic(Graph(30), Graph(30)),
                       doctest::Contains("TooLarge"), Error);
}

TEST_CASE("er dot and alt are isomorphic for q <= 4") {
  for (int q : {2, 3, 4}) {
    const QContext qc = qctx(q);
    const auto pi = small_graph_isomorphic(er_graph(qc.base, ErForm::dot).graph,
                                           er_graph(qc.base, ErForm::alt).graph);
    CHECK(pi.has_value());
  }
}

TEST_CASE("petersen brute search: finds itself, rejects K4") {
  const auto self = petersen_brute_search(petersen_reference());
  REQUIRE(self.has_value());
  // identity-like embedding must preserve all 15 edges
  const Graph ref = petersen_reference();
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (ref.adjacent(u, v)) CHECK(ref.adjacent((*self)[u], (*self)[v]));
  Graph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  CHECK(!petersen_brute_search(k4).has_value());
}

TEST_CASE("petersen brute search respects its node budget") {
  const QContext qc = qctx(5);
  const Graph er = er_graph(qc.base, ErForm::dot).graph;
  CHECK_THROWS_WITH_AS(petersen_brute_search(er, 5), doctest::Contains("SearchSpaceExceeded"),
                       Error);
  Graph too_big(65);
  CHECK_THROWS_AS(petersen_brute_search(too_big), Error);
}

TEST_CASE("petersen constructive witness for q in {4,5,7}") {
  for (int q : {4, 5, 7}) {
    const QContext qc = qctx(q);
    const CayleyGraph cg = cayley_sum_graph(qc.sidon);
    const G3Assembly a = build_g3(cg, qc.ext);
    const auto w = petersen_embed(a);
    REQUIRE(w.has_value());
    CHECK(w->verified);
    CHECK(w->i + w->j == w->k);
    CHECK(w->s != w->t);
    for (const auto& e : w->edges) CHECK(a.g3.adjacent(e[0], e[1]));
    // the six cycle vertices live in the cayley part
    for (int idx = 0; idx < 6; ++idx) CHECK(w->vertices[static_cast<size_t>(idx)] < a.n_cayley);
  }
}

TEST_CASE("q=4 witness uses (i,j,k) = (1,2,3)") {
  const QContext qc = qctx(4);
  const G3Assembly a = build_g3(cayley_sum_graph(qc.sidon), qc.ext);
  const auto w = petersen_embed(a);
  REQUIRE(w.has_value());
  CHECK(w->i == 1);
  CHECK(w->j == 2);
  CHECK(w->k == 3);
}
