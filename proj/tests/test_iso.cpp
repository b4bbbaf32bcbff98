#include <doctest.h>

#include "polarity/analysis.hpp"
#include "polarity/iso.hpp"
#include "polarity/report.hpp"

using namespace polarity;

namespace {

struct Built {
  QContext qc;
  CayleyGraph cg;
  G3Assembly a;
};

Built build(int q) {
  Built b{make_q_context(q, std::nullopt, std::nullopt), {}, {}};
  b.cg = cayley_sum_graph(b.qc.sidon);
  b.a = build_g3(b.cg, b.qc.ext);
  return b;
}

}  // namespace

TEST_CASE("stage edge accounting matches the closed forms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Built b = build(q);
    const int64_t e = b.a.cayley_edges;
    const int64_t q64 = q;
    CHECK(b.a.g1.size() == q * q + q);
    CHECK(b.a.g2.size() == q * q + q + 1);
    CHECK(b.a.g3.size() == q * q + q + 1);
    CHECK(b.a.stage_edges[0] == e + q64 * q64 - 1);
    CHECK(b.a.stage_edges[1] == e + q64 * q64 + q64);
    CHECK(b.a.stage_edges[2] == e + q64 * q64 + q64 + q64 / 2);
    CHECK(b.a.stage_edges[2] == q64 * (q64 + 1) * (q64 + 1) / 2);
  }
}

TEST_CASE("g3 for q=3: 13 vertices, 24 edges; q=4: 21 and 50") {
  CHECK(build(3).a.g3.size() == 13);
  CHECK(build(3).a.g3.edge_count() == 24);
  CHECK(build(4).a.g3.size() == 21);
  CHECK(build(4).a.g3.edge_count() == 50);
  // step 3 adds q/2 = 2 edges at q=4 and (q-1)/2 = 2 at q=5
  const Built b4 = build(4);
  CHECK(b4.a.stage_edges[2] - b4.a.stage_edges[1] == 2);
  const Built b5 = build(5);
  CHECK(b5.a.stage_edges[2] - b5.a.stage_edges[1] == 2);
}

TEST_CASE("each stage is c4-free") {
  for (int q : {3, 4, 5, 8}) {
    const Built b = build(q);
    CHECK(certify_c4_free(b.a.g1).pass);
    CHECK(certify_c4_free(b.a.g2).pass);
    CHECK(certify_c4_free(b.a.g3).pass);
  }
}

TEST_CASE("phi fixed values, odd case") {
  const Built b = build(5);
  const auto& f = b.qc.base;
  CHECK(phi(b.a, b.qc.ext, b.a.z_vertex(0)) == ProjectivePoint{0, 0, 1});
  CHECK(phi(b.a, b.qc.ext, b.a.y_vertex()) == ProjectivePoint{0, 1, f.neg(1)});
  // t = 0 on the subgroup clause: vertex (q-1)(q+1) = 0 -> (0,1,0)
  CHECK(phi(b.a, b.qc.ext, 0) == ProjectivePoint{0, 1, 0});
}

TEST_CASE("phi fixed values, even case") {
  const Built b = build(4);
  CHECK(phi(b.a, b.qc.ext, b.a.z_vertex(0)) == ProjectivePoint{0, 0, 1});
  CHECK(phi(b.a, b.qc.ext, b.a.y_vertex()) == ProjectivePoint{0, 1, 1});
  CHECK(phi(b.a, b.qc.ext, 0) == ProjectivePoint{0, 1, 0});  // mu^0 + 1 = 0 in char 2
}

TEST_CASE("build_g3 refuses corrupt input with a stage violation") {
  const QContext qc = make_q_context(3, std::nullopt, std::nullopt);
  CayleyGraph cg = cayley_sum_graph(qc.sidon);
  // plant edges 0-3 and 3-2 (sums 3 and 5 are outside A): the pair (0,2)
  // then has common neighbors 3 and 7, a 4-cycle
  cg.graph.add_edge(0, 3);
  cg.graph.add_edge(3, 2);
  CHECK_THROWS_WITH_AS(build_g3(cg, qc.ext), doctest::Contains("StageC4Violation"), Error);
}

TEST_CASE("phi rejects out-of-range vertices") {
  const Built b = build(3);
  CHECK_THROWS_WITH_AS(phi(b.a, b.qc.ext, b.a.total_vertices()),
                       doctest::Contains("UnlabeledVertex"), Error);
}

TEST_CASE("verify_isomorphism passes for desk q, both parities") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Built b = build(q);
    const ErGraph er = er_graph(b.qc.base, ErForm::alt);
    const Certificate c = verify_isomorphism(b.a, b.qc.ext, er);
    CHECK(c.pass);
    CHECK(c.stats["pairs_checked"] ==
          static_cast<int64_t>(b.a.total_vertices()) * (b.a.total_vertices() - 1) / 2);
  }
}

TEST_CASE("verify_isomorphism requires the alt form") {
  const Built b = build(3);
  const ErGraph dot = er_graph(b.qc.base, ErForm::dot);
  CHECK_THROWS_WITH_AS(verify_isomorphism(b.a, b.qc.ext, dot), doctest::Contains("WrongForm"),
                       Error);
}

TEST_CASE("adjacency criterion agrees with sum membership, q=3 exhaustive") {
  const Built b = build(3);
  const int q = 3;
  const SidonSet& s = b.qc.sidon;
  for (int i = 1; i <= q; ++i)
    for (int t1 = 0; t1 <= q - 2; ++t1)
      for (int j = 1; j <= q; ++j)
        for (int t2 = 0; t2 <= q - 2; ++t2) {
          const int64_t x = s.reduce(s.a_of(i) + static_cast<int64_t>(t1) * (q + 1));
          const int64_t y = s.reduce(s.a_of(j) + static_cast<int64_t>(t2) * (q + 1));
          const bool direct = s.contains(s.reduce(x + y));
          CHECK(adjacency_criterion(s, b.qc.ext, i, t1, j, t2) == direct);
        }
  CHECK_THROWS_WITH_AS(adjacency_criterion(s, b.qc.ext, 0, 0, 1, 0),
                       doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("z pairing criterion: alpha + b_i + b_{q+1-i} = 0 (odd), = 1 shift (even)") {
  // odd q: z_i ~ z_{q+1-i} encodes b_i + b_{q+1-i} + alpha = 0
  for (int q : {5, 7, 9}) {
    const Built b = build(q);
    const auto& f = b.qc.base;
    const SidonSet& s = b.qc.sidon;
    for (int i = 1; i <= q; ++i) {
      const int partner = ((q + 1 - i - 1) % q) + 1;
      if (partner == i) continue;
      CHECK(f.add(f.add(s.b_of(i), s.b_of(partner)), b.qc.ext.alpha) == 0);
    }
  }
  // even q: 1 + b_i + b_{q+1-i} = 0
  for (int q : {4, 8}) {
    const Built b = build(q);
    const auto& f = b.qc.base;
    const SidonSet& s = b.qc.sidon;
    for (int i = 1; i <= q; ++i) {
      const int partner = ((q + 1 - i - 1) % q) + 1;
      if (partner == i) continue;
      CHECK(f.add(f.add(s.b_of(i), s.b_of(partner)), 1) == 0);
    }
  }
}

TEST_CASE("induced restriction: cayley adjacency equals er adjacency of images") {
  for (int q : {3, 4}) {
    const Built b = build(q);
    const ErGraph er = er_graph(b.qc.base, ErForm::alt);
    for (int u = 0; u < b.a.n_cayley; ++u) {
      const int iu = point_index(b.qc.base, phi(b.a, b.qc.ext, u));
      for (int v = u + 1; v < b.a.n_cayley; ++v) {
        const int iv = point_index(b.qc.base, phi(b.a, b.qc.ext, v));
        CHECK(b.cg.graph.adjacent(u, v) == er.graph.adjacent(iu, iv));
      }
    }
  }
}
