#include "polarity/builders.hpp"

#include <algorithm>

#include "polarity/mis.hpp"

namespace polarity {

ProjectivePoint normalize_point(const FieldCtx& f, int x0, int x1, int x2) {
  if (x0 == 0 && x1 == 0 && x2 == 0)
    throw Error("ZeroVector", "(0,0,0) is not a projective point");
  int lead = x0 != 0 ? x0 : (x1 != 0 ? x1 : x2);
  const int s = f.inv(lead);
  return {f.mul(s, x0), f.mul(s, x1), f.mul(s, x2)};
}

std::vector<ProjectivePoint> projective_points(const FieldCtx& f) {
  std::vector<ProjectivePoint> pts;
  pts.reserve(static_cast<size_t>(f.q) * f.q + f.q + 1);
  pts.push_back({0, 0, 1});
  for (int b = 0; b < f.q; ++b) pts.push_back({0, 1, b});
  for (int a = 0; a < f.q; ++a)
    for (int b = 0; b < f.q; ++b) pts.push_back({1, a, b});
  return pts;
}

int point_index(const FieldCtx& f, const ProjectivePoint& pt) {
  if (pt.x0 == 1) return 1 + f.q + pt.x1 * f.q + pt.x2;
  if (pt.x0 == 0 && pt.x1 == 1) return 1 + pt.x2;
  if (pt.x0 == 0 && pt.x1 == 0 && pt.x2 == 1) return 0;
  throw Error("NotNormalized", "point " + pt.str() + " is not in normalized form");
}

std::vector<int64_t> absolute_points(const SidonSet& s) {
  std::vector<int64_t> out;
  for (int64_t y = 0; y < s.n; ++y)
    if (s.contains(s.reduce(2 * y))) out.push_back(y);
  return out;
}

CayleyGraph cayley_sum_graph(const SidonSet& s) {
  CayleyGraph cg;
  const int n = static_cast<int>(s.n);
  cg.graph = Graph(n);
  for (int x = 0; x < n; ++x) {
    cg.graph.set_label(x, std::to_string(x));
    for (int y = x + 1; y < n; ++y)
      if (s.contains(s.reduce(x + y))) cg.graph.add_edge(x, y);
  }
  cg.meta.sidon = s;
  cg.meta.absolute_points = absolute_points(s);
  return cg;
}

void attach_special_vertex(CayleyMeta& meta, const LindstromData& lind) {
  if (!lind.x_special)
    throw Error("OddQNoSpecialVertex", "the special vertex exists only for even q");
  meta.special_x = *lind.x_special;
}

ErForm parse_er_form(const std::string& name) {
  if (name == "dot") return ErForm::dot;
  if (name == "alt") return ErForm::alt;
  throw Error("UnknownForm", "er form must be dot or alt: " + name);
}

ErGraph er_graph(const FieldCtx& base, ErForm form) {
  ErGraph er;
  er.form = form;
  er.q = base.q;
  er.points = projective_points(base);
  const int n = static_cast<int>(er.points.size());
  er.graph = Graph(n);
  for (int i = 0; i < n; ++i) er.graph.set_label(i, er.points[static_cast<size_t>(i)].str());

  auto related = [&](const ProjectivePoint& a, const ProjectivePoint& b) {
    if (form == ErForm::dot) {
      int acc = base.mul(a.x0, b.x0);
      acc = base.add(acc, base.mul(a.x1, b.x1));
      acc = base.add(acc, base.mul(a.x2, b.x2));
      return acc == 0;
    }
    const int lhs = base.add(base.mul(a.x0, b.x2), base.mul(a.x2, b.x0));
    return lhs == base.mul(a.x1, b.x1);
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (related(er.points[static_cast<size_t>(i)], er.points[static_cast<size_t>(j)]))
        er.graph.add_edge(i, j);
  return er;
}

HGraph h_graph(const CayleyGraph& cg) {
  if (!cg.meta.special_x)
    throw Error("OddQ", "the H graph is defined only for q a power of 2");
  const int64_t x = *cg.meta.special_x;
  std::vector<uint8_t> drop(static_cast<size_t>(cg.meta.sidon.n), 0);
  drop[static_cast<size_t>(x)] = 1;
  for (int v : cg.graph.neighbors(static_cast<int>(x))) drop[static_cast<size_t>(v)] = 1;

  HGraph h;
  std::vector<int> keep;
  for (int64_t v = 0; v < cg.meta.sidon.n; ++v)
    if (!drop[static_cast<size_t>(v)]) {
      keep.push_back(static_cast<int>(v));
      h.kept.push_back(v);
    }
  h.graph = cg.graph.induced(keep);
  return h;
}

SubfieldConstruction subfield_construction(int p, int t, int max_q, int max_m) {
  if (t < 1) throw Error("NotEvenPowerPrime", "t must be >= 1");
  int64_t q64 = 1;
  for (int i = 0; i < 2 * t; ++i) q64 *= p;
  if (q64 > max_q)
    throw Error("QTooLarge", "q=" + std::to_string(q64) + " exceeds cap");

  SubfieldConstruction sc;
  sc.q = static_cast<int>(q64);
  sc.root_q = 1;
  for (int i = 0; i < t; ++i) sc.root_q *= p;

  const FieldCtx f = build_base_field(p, 2 * t, max_m);
  ErGraph er = er_graph(f, ErForm::dot);

  // subfield of index 2 = fixed points of x -> x^{root_q}
  std::vector<uint8_t> in_sub(static_cast<size_t>(f.q), 0);
  int sub_count = 0;
  for (int x = 0; x < f.q; ++x)
    if (f.pow(x, sc.root_q) == x) {
      in_sub[static_cast<size_t>(x)] = 1;
      ++sub_count;
    }
  if (sub_count != sc.root_q)
    throw Error("InternalError", "subfield has " + std::to_string(sub_count) +
                                     " elements, expected " + std::to_string(sc.root_q));

  for (int v = 0; v < er.graph.size(); ++v) {
    const auto& pt = er.points[static_cast<size_t>(v)];
    if (in_sub[static_cast<size_t>(pt.x0)] && in_sub[static_cast<size_t>(pt.x1)] &&
        in_sub[static_cast<size_t>(pt.x2)])
      sc.copy_vertices.push_back(v);
  }

  const Graph copy = er.graph.induced(sc.copy_vertices);
  sc.copy_edges = copy.edge_count();

  // exact at desk scale (the copy has q + root_q + 1 <= 21 vertices there);
  // past that a verified independent set of size root_q - 1 is all we need
  MisBudget copy_budget;
  copy_budget.exact_cap_n = 128;
  IndependenceResult mis = max_independent_set(copy, copy_budget);
  if (static_cast<int>(mis.witness.size()) < sc.root_q - 1)
    throw Error("InternalError", "independent set in the subfield copy is too small");
  std::vector<int> keep_local(mis.witness.begin(), mis.witness.begin() + (sc.root_q - 1));

  std::vector<uint8_t> is_kept(static_cast<size_t>(copy.size()), 0);
  for (int v : keep_local) {
    is_kept[static_cast<size_t>(v)] = 1;
    sc.independent_kept.push_back(sc.copy_vertices[static_cast<size_t>(v)]);
  }
  for (int v = 0; v < copy.size(); ++v)
    if (!is_kept[static_cast<size_t>(v)])
      sc.deleted.push_back(sc.copy_vertices[static_cast<size_t>(v)]);

  const Graph deleted_sub = er.graph.induced(sc.deleted);
  sc.deleted_internal_edges = deleted_sub.edge_count();

  std::vector<uint8_t> dropped(static_cast<size_t>(er.graph.size()), 0);
  for (int v : sc.deleted) dropped[static_cast<size_t>(v)] = 1;
  std::vector<int> survivors;
  for (int v = 0; v < er.graph.size(); ++v)
    if (!dropped[static_cast<size_t>(v)]) survivors.push_back(v);
  sc.graph = er.graph.induced(survivors);

  sc.edges = sc.graph.edge_count();
  const int64_t q = sc.q;
  const int64_t s = sc.root_q;
  sc.bound = (q * q * q + s * s * s - 3 * q + s - 4) / 2;
  sc.meets_bound = sc.edges >= sc.bound;
  return sc;
}

Graph petersen_reference() {
  // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

}  // namespace polarity
