#include "polarity/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <queue>

namespace polarity::kernels {

namespace {

// Extract two set bits of (a AND b); caller guarantees at least two exist.
void two_common(const Graph& g, int u, int v, int* w1, int* w2) {
  const uint64_t* a = g.row(u);
  const uint64_t* b = g.row(v);
  int found = 0;
  for (int w = 0; w < g.words() && found < 2; ++w) {
    uint64_t bits = a[w] & b[w];
    while (bits && found < 2) {
      const int idx = w * 64 + std::countr_zero(bits);
      (found == 0 ? *w1 : *w2) = idx;
      bits &= bits - 1;
      ++found;
    }
  }
}

}  // namespace

C4Scan c4_scan_serial(const Graph& g) {
  C4Scan r;
  const int n = g.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      ++r.pairs;
      const int c = g.common_neighbors(u, v);
      r.max_common = std::max(r.max_common, c);
      if (c >= 2 && r.c4_free) {
        // first pair in row-major order is the lexicographic minimum
        r.c4_free = false;
        r.u = u;
        r.v = v;
      }
    }
  }
  if (!r.c4_free) two_common(g, r.u, r.v, &r.w1, &r.w2);
  return r;
}

C4Scan c4_scan_parallel(const Graph& g) {
  const int n = g.size();
  int best_u = n, best_v = n;
  int max_common = 0;
  uint64_t pairs = 0;

#pragma omp parallel
  {
    int local_u = n, local_v = n;
    int local_max = 0;
    uint64_t local_pairs = 0;
#pragma omp for schedule(dynamic, 8) nowait
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        ++local_pairs;
        const int c = g.common_neighbors(u, v);
        local_max = std::max(local_max, c);
        if (c >= 2 && (u < local_u || (u == local_u && v < local_v))) {
          local_u = u;
          local_v = v;
        }
      }
    }
#pragma omp critical
    {
      pairs += local_pairs;
      max_common = std::max(max_common, local_max);
      if (local_u < best_u || (local_u == best_u && local_v < best_v)) {
        best_u = local_u;
        best_v = local_v;
      }
    }
  }

  C4Scan r;
  r.pairs = pairs;
  r.max_common = max_common;
  if (best_u < n) {
    r.c4_free = false;
    r.u = best_u;
    r.v = best_v;
    two_common(g, best_u, best_v, &r.w1, &r.w2);
  }
  return r;
}

C4Scan c4_scan(const Graph& g) {
  if (omp_get_max_threads() > 1 && g.size() >= 256) return c4_scan_parallel(g);
  return c4_scan_serial(g);
}

int64_t c4_closures_through(const Graph& g, int u, int v) {
  // u and v are non-adjacent, so x != v, y != u automatically
  int64_t paths = 0;
  for (int x : g.neighbors(u)) paths += g.common_neighbors(x, v);
  const int64_t cn = g.common_neighbors(u, v);
  return paths + cn * (cn - 1) / 2;
}

namespace {

bool closure_better(int64_t c, int u, int v, const ClosureScan& r) {
  if (r.min_count < 0 || c < r.min_count) return true;
  if (c > r.min_count) return false;
  return u < r.argmin_u || (u == r.argmin_u && v < r.argmin_v);
}

// Work per column v: one common-neighbor table against every vertex, then a
// cheap neighbor-sum per non-adjacent u. Avoids re-ANDing rows per pair.
void closure_column(const Graph& g, const std::vector<std::vector<int>>& nbrs, int v,
                    std::vector<int>& cn, ClosureScan& r) {
  const int n = g.size();
  for (int x = 0; x < n; ++x) cn[static_cast<size_t>(x)] = g.common_neighbors(x, v);
  for (int u = 0; u < v; ++u) {
    if (g.adjacent(u, v)) continue;
    ++r.nonedges;
    int64_t c = 0;
    for (int x : nbrs[static_cast<size_t>(u)]) c += cn[static_cast<size_t>(x)];
    const int64_t both = cn[static_cast<size_t>(u)];
    c += both * (both - 1) / 2;
    if (closure_better(c, u, v, r)) {
      r.min_count = c;
      r.argmin_u = u;
      r.argmin_v = v;
    }
  }
}

std::vector<std::vector<int>> all_neighbors(const Graph& g) {
  std::vector<std::vector<int>> nbrs(static_cast<size_t>(g.size()));
  for (int u = 0; u < g.size(); ++u) nbrs[static_cast<size_t>(u)] = g.neighbors(u);
  return nbrs;
}

}  // namespace

ClosureScan closure_scan_serial(const Graph& g) {
  ClosureScan r;
  const auto nbrs = all_neighbors(g);
  std::vector<int> cn(static_cast<size_t>(g.size()));
  for (int v = 1; v < g.size(); ++v) closure_column(g, nbrs, v, cn, r);
  return r;
}

ClosureScan closure_scan_parallel(const Graph& g) {
  const int n = g.size();
  const auto nbrs = all_neighbors(g);
  ClosureScan r;

#pragma omp parallel
  {
    ClosureScan local;
    std::vector<int> cn(static_cast<size_t>(n));
#pragma omp for schedule(dynamic, 8) nowait
    for (int v = 1; v < n; ++v) closure_column(g, nbrs, v, cn, local);
#pragma omp critical
    {
      r.nonedges += local.nonedges;
      if (local.min_count >= 0 &&
          closure_better(local.min_count, local.argmin_u, local.argmin_v, r)) {
        r.min_count = local.min_count;
        r.argmin_u = local.argmin_u;
        r.argmin_v = local.argmin_v;
      }
    }
  }
  return r;
}

ClosureScan closure_scan(const Graph& g) {
  if (omp_get_max_threads() > 1 && g.size() >= 256) return closure_scan_parallel(g);
  return closure_scan_serial(g);
}

std::vector<int8_t> bfs_distances(const Graph& g) {
  const int n = g.size();
  std::vector<int8_t> dist(static_cast<size_t>(n) * n, 127);
  std::vector<int> frontier;
  for (int s = 0; s < n; ++s) {
    int8_t* row = dist.data() + static_cast<size_t>(s) * n;
    row[s] = 0;
    frontier.assign(1, s);
    int8_t d = 0;
    while (!frontier.empty()) {
      ++d;
      std::vector<int> next;
      for (int u : frontier)
        for (int v : g.neighbors(u))
          if (row[v] == 127) {
            row[v] = d;
            next.push_back(v);
          }
      frontier = std::move(next);
    }
  }
  return dist;
}

}  // namespace polarity::kernels
