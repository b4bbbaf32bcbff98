#pragma once

#include <cstdint>

#include "polarity/graph.hpp"

namespace polarity::kernels {

// Scan over all vertex pairs for a pair with >= 2 common neighbors (a C4).
// The reported pair is the lexicographically smallest violating one, so the
// serial and parallel kernels agree bit for bit.
struct C4Scan {
  bool c4_free = true;
  int u = -1, v = -1;   // violating pair
  int w1 = -1, w2 = -1; // two of their common neighbors
  int max_common = 0;
  uint64_t pairs = 0;
};

C4Scan c4_scan_serial(const Graph& g);
C4Scan c4_scan_parallel(const Graph& g);
C4Scan c4_scan(const Graph& g);  // parallel when OpenMP threads > 1

// Number of 4-cycles through the (non-)edge uv once it is added: length-3
// paths u-x-y-v, plus the pairs of existing common neighbors.
int64_t c4_closures_through(const Graph& g, int u, int v);

// Scan over all non-adjacent pairs, tracking the minimum closure count.
// argmin is again the lexicographically smallest pair attaining it.
struct ClosureScan {
  uint64_t nonedges = 0;
  int64_t min_count = -1;  // -1 when the graph is complete
  int argmin_u = -1, argmin_v = -1;
};

ClosureScan closure_scan_serial(const Graph& g);
ClosureScan closure_scan_parallel(const Graph& g);
ClosureScan closure_scan(const Graph& g);

// All-pairs BFS distances (small n); 127 = unreachable.
std::vector<int8_t> bfs_distances(const Graph& g);

}  // namespace polarity::kernels
