#include <doctest.h>

#include <omp.h>

#include <random>

#include "polarity/builders.hpp"
#include "polarity/kernels.hpp"

using namespace polarity;
using namespace polarity::kernels;

namespace {

Graph random_graph(int n, double density, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph c4() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return g;
}

SidonSet desk_sidon(int p, int m) {
  return bose_chowla(find_primitive_quadratic(build_base_field(p, m)));
}

}  // namespace

TEST_CASE("c4 scan flags the 4-cycle with a concrete witness") {
  const auto r = c4_scan_serial(c4());
  CHECK(!r.c4_free);
  CHECK(r.u == 0);
  CHECK(r.v == 2);
  CHECK(r.w1 == 1);
  CHECK(r.w2 == 3);
}

TEST_CASE("serial and parallel scans agree on random graphs") {
  for (uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_graph(150, seed % 2 ? 0.08 : 0.02, seed);
    const auto a = c4_scan_serial(g);
    const auto b = c4_scan_parallel(g);
    CHECK(a.c4_free == b.c4_free);
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    CHECK(a.w1 == b.w1);
    CHECK(a.w2 == b.w2);
    CHECK(a.max_common == b.max_common);
    CHECK(a.pairs == b.pairs);

    const auto cs = closure_scan_serial(g);
    const auto cp = closure_scan_parallel(g);
    CHECK(cs.nonedges == cp.nonedges);
    CHECK(cs.min_count == cp.min_count);
    CHECK(cs.argmin_u == cp.argmin_u);
    CHECK(cs.argmin_v == cp.argmin_v);
  }
}

TEST_CASE("parallel results do not depend on the thread count") {
  const Graph g = cayley_sum_graph(desk_sidon(2, 3)).graph;  // q = 8, 63 vertices
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = c4_scan_parallel(g);
  const auto one_c = closure_scan_parallel(g);
  omp_set_num_threads(4);
  const auto four = c4_scan_parallel(g);
  const auto four_c = closure_scan_parallel(g);
  omp_set_num_threads(saved);
  CHECK(one.c4_free == four.c4_free);
  CHECK(one.max_common == four.max_common);
  CHECK(one_c.min_count == four_c.min_count);
  CHECK(one_c.argmin_u == four_c.argmin_u);
  CHECK(one_c.argmin_v == four_c.argmin_v);
}

TEST_CASE("closure counting matches a direct path enumeration") {
  for (uint64_t seed = 10; seed < 13; ++seed) {
    const Graph g = random_graph(40, 0.15, seed);
    for (int u = 0; u < g.size(); ++u)
      for (int v = u + 1; v < g.size(); ++v) {
        if (g.adjacent(u, v)) continue;
        int64_t paths = 0;
        for (int x = 0; x < g.size(); ++x)
          for (int y = 0; y < g.size(); ++y)
            if (x != y && g.adjacent(u, x) && g.adjacent(x, y) && g.adjacent(y, v)) ++paths;
        const int64_t cn = g.common_neighbors(u, v);
        CHECK(c4_closures_through(g, u, v) == paths + cn * (cn - 1) / 2);
      }
  }
}

TEST_CASE("closure scan agrees with the per-pair routine, min and argmin") {
  for (uint64_t seed = 20; seed < 24; ++seed) {
    const Graph g = random_graph(60, 0.1, seed);
    int64_t min_count = -1;
    int au = -1, av = -1;
    uint64_t nonedges = 0;
    for (int u = 0; u < g.size(); ++u)
      for (int v = u + 1; v < g.size(); ++v) {
        if (g.adjacent(u, v)) continue;
        ++nonedges;
        const int64_t c = c4_closures_through(g, u, v);
        if (min_count < 0 || c < min_count) {
          min_count = c;
          au = u;
          av = v;
        }
      }
    const auto scan = closure_scan_serial(g);
    CHECK(scan.nonedges == nonedges);
    CHECK(scan.min_count == min_count);
    CHECK(scan.argmin_u == au);
    CHECK(scan.argmin_v == av);
  }
}

TEST_CASE("path graph closes exactly one 4-cycle") {
  Graph g(4);  // u - a - b - v
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  CHECK(c4_closures_through(g, 0, 3) == 1);
}

TEST_CASE("bfs distances on a path") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const auto d = bfs_distances(g);
  CHECK(d[0 * 4 + 3] == 3);
  CHECK(d[1 * 4 + 3] == 2);
  CHECK(d[0 * 4 + 0] == 0);
}
