#pragma once

#include <cstdint>
#include <vector>

#include "polarity/graph.hpp"

namespace polarity {

struct MisBudget {
  int exact_cap_n = 64;          // refuse exact mode above this size
  uint64_t node_cap = 50000000;  // branch-and-bound node budget
};

struct IndependenceResult {
  int alpha = 0;                 // exact alpha, or best lower bound
  std::vector<int> witness;      // an independent set of that size, sorted
  bool exact = false;
  uint64_t nodes = 0;            // search nodes expanded
};

// Exact maximum independent set by include/exclude branch and bound with a
// greedy-coloring upper bound. Vertex order is max-degree-first with index
// tie-break, so results are deterministic. When the graph exceeds the caps
// the best set found so far is returned with exact = false.
IndependenceResult max_independent_set(const Graph& g, const MisBudget& budget = {});

bool is_independent_set(const Graph& g, const std::vector<int>& set);

}  // namespace polarity
