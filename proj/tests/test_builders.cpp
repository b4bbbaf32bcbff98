#include <doctest.h>

#include <algorithm>

#include "polarity/builders.hpp"
#include "polarity/kernels.hpp"
#include "polarity/mis.hpp"

using namespace polarity;

namespace {

struct Ctx {
  FieldCtx base;
  ExtFieldCtx ext;
  SidonSet sidon;
};

Ctx make(int p, int m) {
  Ctx c;
  c.base = build_base_field(p, m);
  c.ext = find_primitive_quadratic(c.base);
  c.sidon = bose_chowla(c.ext);
  return c;
}

}  // namespace

TEST_CASE("cayley q=2: 3 vertices, edges 0-1 and 0-2") {
  const Ctx c = make(2, 1);
  const CayleyGraph cg = cayley_sum_graph(c.sidon);
  CHECK(cg.graph.size() == 3);
  CHECK(cg.graph.edge_count() == 2);
  CHECK(cg.graph.adjacent(0, 1));
  CHECK(cg.graph.adjacent(0, 2));
  CHECK(!cg.graph.adjacent(1, 2));
  CHECK(export_graph(cg.graph, GraphFormat::edges) == "0 1\n0 2\n");
  CHECK(cg.meta.absolute_points == std::vector<int64_t>{1, 2});
}

TEST_CASE("cayley edge counts match the closed forms") {
  // odd q: (q^3 - 2q + 1)/2, even q: q^3/2 - q
  const std::vector<std::tuple<int, int, int64_t>> cases = {
      {2, 1, 2},   {3, 1, 11},  {5, 1, 58},   {7, 1, 165},
      {2, 2, 28},  {3, 2, 356}, {2, 3, 248},  {11, 1, 655},
      {13, 1, 1086}, {2, 4, 2032}};
  for (const auto& [p, m, expect] : cases) {
    const Ctx c = make(p, m);
    const CayleyGraph cg = cayley_sum_graph(c.sidon);
    CHECK(cg.graph.size() == c.base.q * c.base.q - 1);
    CHECK(cg.graph.edge_count() == expect);
  }
}

TEST_CASE("degree law: q-1 exactly on absolute points") {
  for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const Ctx c = make(p, m);
    const CayleyGraph cg = cayley_sum_graph(c.sidon);
    const int q = c.base.q;
    CHECK(static_cast<int>(cg.meta.absolute_points.size()) == (q % 2 == 0 ? q : q - 1));
    std::vector<uint8_t> is_abs(static_cast<size_t>(c.sidon.n), 0);
    for (int64_t a : cg.meta.absolute_points) is_abs[static_cast<size_t>(a)] = 1;
    for (int v = 0; v < cg.graph.size(); ++v)
      CHECK(cg.graph.degree(v) == (is_abs[static_cast<size_t>(v)] ? q - 1 : q));
  }
}

TEST_CASE("q=3 absolute points: exactly two") {
  const Ctx c = make(3, 1);
  CHECK(absolute_points(c.sidon).size() == 2);
}

TEST_CASE("q=8 absolute points: exactly eight, equal to halved A") {
  const Ctx c = make(2, 3);
  const auto abs = absolute_points(c.sidon);
  CHECK(abs.size() == 8);
  const LindstromData lind = lindstrom_shift(c.ext, c.sidon);
  std::vector<int64_t> halved;
  for (int64_t a : c.sidon.elements)
    halved.push_back(a * lind.halving_multiplier % c.sidon.n);
  std::sort(halved.begin(), halved.end());
  CHECK(halved == abs);
}

TEST_CASE("projective points: count, normalization, indexing") {
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const FieldCtx f = build_base_field(p, m);
    const auto pts = projective_points(f);
    CHECK(static_cast<int>(pts.size()) == f.q * f.q + f.q + 1);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (size_t i = 0; i < pts.size(); ++i) {
      CHECK(point_index(f, pts[i]) == static_cast<int>(i));
      // scaling by any nonzero factor normalizes back to the same point
      for (int s = 1; s < f.q; ++s) {
        const auto scaled =
            normalize_point(f, f.mul(s, pts[i].x0), f.mul(s, pts[i].x1), f.mul(s, pts[i].x2));
        CHECK(scaled == pts[i]);
      }
    }
  }
  CHECK_THROWS_AS(normalize_point(build_base_field(2, 1), 0, 0, 0), Error);
}

TEST_CASE("er graph counts: n = q^2+q+1, e = q(q+1)^2/2, both forms") {
  const std::vector<std::tuple<int, int, int, int64_t>> cases = {
      {2, 1, 7, 9}, {3, 1, 13, 24}, {2, 2, 21, 50}, {5, 1, 31, 90}, {7, 1, 57, 224},
      {3, 2, 91, 450}, {11, 1, 133, 792}, {13, 1, 183, 1274}};
  for (const auto& [p, m, n, e] : cases) {
    const FieldCtx f = build_base_field(p, m);
    for (ErForm form : {ErForm::dot, ErForm::alt}) {
      const ErGraph er = er_graph(f, form);
      CHECK(er.graph.size() == n);
      CHECK(er.graph.edge_count() == e);
      CHECK(kernels::c4_scan_serial(er.graph).c4_free);
    }
  }
}

TEST_CASE("er dot and alt share the degree sequence") {
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const FieldCtx f = build_base_field(p, m);
    CHECK(er_graph(f, ErForm::dot).graph.degree_sequence() ==
          er_graph(f, ErForm::alt).graph.degree_sequence());
  }
}

TEST_CASE("h graph needs the special vertex and matches the closed forms") {
  const std::vector<std::tuple<int, int, int, int64_t>> cases = {
      {2, 2, 10, 16}, {2, 3, 54, 192}, {2, 4, 238, 1792}};
  for (const auto& [p, m, n, e] : cases) {
    const Ctx c = make(p, m);
    CayleyGraph cg = cayley_sum_graph(c.sidon);
    CHECK_THROWS_WITH_AS(h_graph(cg), doctest::Contains("OddQ"), Error);
    attach_special_vertex(cg.meta, lindstrom_shift(c.ext, c.sidon));
    const HGraph h = h_graph(cg);
    CHECK(h.graph.size() == n);
    CHECK(h.graph.edge_count() == e);
    CHECK(static_cast<int>(h.kept.size()) == n);
  }
}

TEST_CASE("attach_special_vertex rejects odd q") {
  const Ctx c = make(3, 1);
  CayleyGraph cg = cayley_sum_graph(c.sidon);
  CHECK_THROWS_WITH_AS(attach_special_vertex(cg.meta, lindstrom_shift(c.ext, c.sidon)),
                       doctest::Contains("OddQNoSpecialVertex"), Error);
}

TEST_CASE("subfield construction shapes at q = 4, 9, 16") {
  const std::vector<std::tuple<int, int, int, int64_t>> cases = {
      {2, 1, 15, 29}, {3, 1, 80, 360}, {2, 2, 255, 2046}};
  for (const auto& [p, t, n, e] : cases) {
    const SubfieldConstruction sc = subfield_construction(p, t);
    CHECK(sc.graph.size() == n);
    CHECK(sc.edges == e);
    CHECK(static_cast<int64_t>(sc.deleted.size()) == static_cast<int64_t>(sc.q) + 2);
    CHECK(static_cast<int>(sc.copy_vertices.size()) == sc.q + sc.root_q + 1);
    CHECK(sc.copy_edges == static_cast<int64_t>(sc.root_q) * (sc.root_q + 1) * (sc.root_q + 1) / 2);
    CHECK(kernels::c4_scan(sc.graph).c4_free);
    CHECK(is_independent_set(er_graph(build_base_field(p, 2 * t), ErForm::dot).graph,
                             sc.independent_kept));
  }
}

TEST_CASE("subfield construction rejects bad exponents") {
  CHECK_THROWS_WITH_AS(subfield_construction(2, 0), doctest::Contains("NotEvenPowerPrime"),
                       Error);
  CHECK_THROWS_WITH_AS(subfield_construction(5, 2), doctest::Contains("QTooLarge"), Error);
}

TEST_CASE("petersen reference: 3-regular, 15 edges, girth 5") {
  const Graph g = petersen_reference();
  CHECK(g.size() == 10);
  CHECK(g.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
  CHECK(kernels::c4_scan_serial(g).c4_free);  // no C4 => girth > 4
  // and no triangles either
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (g.adjacent(u, v)) CHECK(g.common_neighbors(u, v) == 0);
}
