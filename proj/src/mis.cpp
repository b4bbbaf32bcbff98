#include "polarity/mis.hpp"

#include <algorithm>

namespace polarity {

namespace {

struct Searcher {
  const Graph& g;
  std::vector<int> order;        // max-degree-first
  std::vector<char> active;
  std::vector<int> current;
  std::vector<int> best;
  uint64_t nodes = 0;
  uint64_t node_cap;
  bool capped = false;

  Searcher(const Graph& graph, uint64_t cap) : g(graph), node_cap(cap) {
    const int n = g.size();
    order.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    active.assign(static_cast<size_t>(n), 1);
  }

  // alpha is at most the size of any clique partition (a greedy coloring of
  // the complement). Build one greedily over the fixed order.
  int clique_cover_bound() const {
    std::vector<std::vector<int>> cliques;
    for (int v : order) {
      if (!active[static_cast<size_t>(v)]) continue;
      bool placed = false;
      for (auto& clique : cliques) {
        bool all = true;
        for (int u : clique)
          if (!g.adjacent(v, u)) {
            all = false;
            break;
          }
        if (all) {
          clique.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({v});
    }
    return static_cast<int>(cliques.size());
  }

  void run() {
    ++nodes;
    if (nodes > node_cap) {
      capped = true;
      return;
    }
    int rem = 0;
    for (int v : order) rem += active[static_cast<size_t>(v)];
    if (current.size() + static_cast<size_t>(rem) <= best.size()) return;
    if (rem == 0) {
      best = current;
      return;
    }
    if (current.size() + static_cast<size_t>(clique_cover_bound()) <= best.size()) return;

    int pick = -1;
    for (int v : order)
      if (active[static_cast<size_t>(v)]) {
        pick = v;
        break;
      }

    // include pick
    std::vector<int> disabled{pick};
    active[static_cast<size_t>(pick)] = 0;
    for (int u : g.neighbors(pick))
      if (active[static_cast<size_t>(u)]) {
        active[static_cast<size_t>(u)] = 0;
        disabled.push_back(u);
      }
    current.push_back(pick);
    run();
    current.pop_back();
    for (int u : disabled) active[static_cast<size_t>(u)] = 1;
    if (capped) return;

    // exclude pick
    active[static_cast<size_t>(pick)] = 0;
    run();
    active[static_cast<size_t>(pick)] = 1;
  }
};

}  // namespace

bool is_independent_set(const Graph& g, const std::vector<int>& set) {
  for (size_t a = 0; a < set.size(); ++a)
    for (size_t b = a + 1; b < set.size(); ++b)
      if (g.adjacent(set[a], set[b])) return false;
  return true;
}

IndependenceResult max_independent_set(const Graph& g, const MisBudget& budget) {
  IndependenceResult r;
  Searcher s(g, budget.node_cap);

  // greedy seed, low-degree vertices first
  for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
    bool ok = true;
    for (int u : s.best)
      if (g.adjacent(u, *it)) {
        ok = false;
        break;
      }
    if (ok) s.best.push_back(*it);
  }

  if (g.size() <= budget.exact_cap_n) {
    s.run();
    r.exact = !s.capped;
  }
  r.alpha = static_cast<int>(s.best.size());
  r.witness = s.best;
  std::sort(r.witness.begin(), r.witness.end());
  r.nodes = s.nodes;
  return r;
}

}  // namespace polarity
