#include "polarity/iso.hpp"

#include <algorithm>

#include "polarity/kernels.hpp"

namespace polarity {

namespace {

Graph extend(const Graph& g, int new_n) {
  Graph out(new_n);
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) out.add_edge(u, v);
  return out;
}

void require_c4_free(const Graph& g, int stage) {
  const auto scan = kernels::c4_scan(g);
  if (!scan.c4_free)
    throw Error("StageC4Violation",
                "stage " + std::to_string(stage) + " created a 4-cycle through vertices " +
                    std::to_string(scan.u) + "," + std::to_string(scan.w1) + "," +
                    std::to_string(scan.v) + "," + std::to_string(scan.w2));
}

}  // namespace

std::string G3Assembly::vertex_name(int v) const {
  if (v < n_cayley) return std::to_string(v);
  if (v == y_vertex()) return "y";
  return "z" + std::to_string(v - n_cayley);
}

G3Assembly build_g3(const CayleyGraph& cg, const ExtFieldCtx& ctx) {
  G3Assembly a;
  a.q = cg.meta.sidon.q;
  a.even = (ctx.base.p == 2);
  a.sidon = cg.meta.sidon;
  a.n_cayley = static_cast<int>(cg.meta.sidon.n);
  a.cayley_edges = cg.graph.edge_count();
  if (!a.even) {
    const auto& f = ctx.base;
    a.delta = f.mul(f.inv(f.add(1, 1)), f.sub(ctx.alpha, 1));
  }

  const int q = a.q;
  Graph g = extend(cg.graph, a.total_vertices());

  // Stage 1: z_i joined to the coset H+i (residue i mod q+1). y is not a
  // vertex yet, so G1 is the graph induced away from its slot.
  for (int x = 0; x < a.n_cayley; ++x) g.add_edge(x, a.z_vertex(x % (q + 1)));
  require_c4_free(g, 1);
  {
    std::vector<int> without_y(static_cast<size_t>(a.total_vertices() - 1));
    for (int v = 0; v + 1 < a.total_vertices(); ++v) without_y[static_cast<size_t>(v)] = v;
    a.g1 = g.induced(without_y);
  }
  a.stage_edges[0] = a.g1.edge_count();

  // Stage 2: y joined to every z_i
  for (int i = 0; i <= q; ++i) g.add_edge(a.y_vertex(), a.z_vertex(i));
  require_c4_free(g, 2);
  a.g2 = g;
  a.stage_edges[1] = g.edge_count();

  // Stage 3: z_j joined to z_{q+1-j}
  for (int j = 1; j <= q / 2; ++j) g.add_edge(a.z_vertex(j), a.z_vertex(q + 1 - j));
  require_c4_free(g, 3);
  a.g3 = g;
  a.stage_edges[2] = g.edge_count();

  for (int v = 0; v < a.total_vertices(); ++v) a.g3.set_label(v, a.vertex_name(v));
  return a;
}

ProjectivePoint phi(const G3Assembly& a, const ExtFieldCtx& ctx, int v) {
  const auto& f = ctx.base;
  const int q = a.q;
  if (v < 0 || v >= a.total_vertices())
    throw Error("UnlabeledVertex", "vertex " + std::to_string(v) + " is out of range");

  if (v >= a.n_cayley) {
    const int i = v - a.n_cayley;  // z_i, or y when i == q+1
    if (v == a.y_vertex()) return a.even ? ProjectivePoint{0, 1, 1} : ProjectivePoint{0, 1, f.neg(1)};
    if (i == 0) return {0, 0, 1};
    const int b = a.sidon.b_of(i);
    if (a.even) return {1, 1, b};
    return {1, f.neg(1), f.neg(f.add(b, a.delta))};
  }

  if (v % (q + 1) == 0) {
    // vertex (q-1-t)(q+1) of the subgroup H
    const int h = v / (q + 1);
    const int t = (q - 1 - h) % (q - 1);
    const int mu_t = ctx.mu_pow(t);
    return a.even ? ProjectivePoint{0, 1, f.add(mu_t, 1)}
                  : ProjectivePoint{0, 1, f.sub(mu_t, 1)};
  }

  const int i = v % (q + 1);
  const int64_t ai = a.sidon.a_of(i);
  int64_t t64 = (static_cast<int64_t>(v) - ai) / (q + 1);
  t64 %= (q - 1);
  if (t64 < 0) t64 += (q - 1);
  const int t = static_cast<int>(t64);
  const int b = a.sidon.b_of(i);
  const int mu_t = ctx.mu_pow(t);
  if (a.even) return {1, f.add(mu_t, 1), f.add(f.add(b, 1), mu_t)};
  // (1, mu^t - 1, -mu^t + alpha + b - delta)
  const int third = f.sub(f.add(ctx.alpha, b), f.add(mu_t, a.delta));
  return {1, f.sub(mu_t, 1), third};
}

Certificate verify_isomorphism(const G3Assembly& a, const ExtFieldCtx& ctx, const ErGraph& er) {
  if (er.form != ErForm::alt)
    throw Error("WrongForm", "verify_isomorphism requires the alt adjacency form");

  Certificate cert;
  cert.claim = "thm1.1";
  cert.params = {{"q", a.q}, {"alpha", ctx.alpha}, {"beta", ctx.beta}};

  const int total = a.total_vertices();
  std::vector<int> image(static_cast<size_t>(total), -1);
  std::vector<int> hits(static_cast<size_t>(er.graph.size()), 0);
  for (int v = 0; v < total; ++v) {
    const auto pt = phi(a, ctx, v);
    const int idx = point_index(ctx.base, pt);
    image[static_cast<size_t>(v)] = idx;
    ++hits[static_cast<size_t>(idx)];
  }

  const bool bijective =
      total == er.graph.size() && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  if (!bijective) {
    cert.pass = false;
    for (int idx = 0; idx < er.graph.size(); ++idx)
      if (hits[static_cast<size_t>(idx)] != 1) {
        cert.witness = {{"kind", "not_bijective"},
                        {"point", er.points[static_cast<size_t>(idx)].str()},
                        {"preimages", hits[static_cast<size_t>(idx)]}};
        break;
      }
    return cert;
  }

  int64_t pairs = 0;
  int64_t induced_pairs = 0;
  for (int u = 0; u < total; ++u) {
    for (int v = u + 1; v < total; ++v) {
      ++pairs;
      const bool in_g3 = a.g3.adjacent(u, v);
      const bool in_er =
          er.graph.adjacent(image[static_cast<size_t>(u)], image[static_cast<size_t>(v)]);
      if (u < a.n_cayley && v < a.n_cayley) ++induced_pairs;
      if (in_g3 != in_er) {
        cert.pass = false;
        cert.witness = {{"kind", "adjacency_mismatch"},
                        {"u", a.vertex_name(u)},
                        {"v", a.vertex_name(v)},
                        {"phi_u", er.points[static_cast<size_t>(image[static_cast<size_t>(u)])].str()},
                        {"phi_v", er.points[static_cast<size_t>(image[static_cast<size_t>(v)])].str()},
                        {"g3_adjacent", in_g3},
                        {"er_adjacent", in_er}};
        return cert;
      }
    }
  }

  // partition counting: cosets map onto first-coordinate-1 columns, H and
  // the added vertices cover the x0 = 0 line plus (1,-1,.) / (1,1,.)
  int zero_first = 0;
  for (int v = 0; v < total; ++v) {
    const auto& pt = er.points[static_cast<size_t>(image[static_cast<size_t>(v)])];
    const bool aug = v >= a.n_cayley;
    const bool in_h = !aug && v % (a.q + 1) == 0;
    if (pt.x0 == 0) ++zero_first;
    const bool expected_zero_first =
        in_h || v == a.y_vertex() || v == a.z_vertex(0);
    if ((pt.x0 == 0) != expected_zero_first) {
      cert.pass = false;
      cert.witness = {{"kind", "partition_mismatch"}, {"v", a.vertex_name(v)}, {"point", pt.str()}};
      return cert;
    }
  }

  const int64_t q = a.q;
  const bool stage_ok = a.stage_edges[0] == a.cayley_edges + q * q - 1 &&
                        a.stage_edges[1] == a.cayley_edges + q * q + q &&
                        a.stage_edges[2] == a.cayley_edges + q * q + q + q / 2 &&
                        a.stage_edges[2] == q * (q + 1) * (q + 1) / 2;

  cert.pass = stage_ok;
  if (!stage_ok)
    cert.witness = {{"kind", "stage_edge_mismatch"},
                    {"e_cayley", a.cayley_edges},
                    {"e_g1", a.stage_edges[0]},
                    {"e_g2", a.stage_edges[1]},
                    {"e_g3", a.stage_edges[2]}};

  cert.stats = {{"vertices", total},
                {"pairs_checked", pairs},
                {"induced_pairs", induced_pairs},
                {"zero_first_coordinate_points", zero_first},
                {"e_cayley", a.cayley_edges},
                {"e_g1", a.stage_edges[0]},
                {"e_g2", a.stage_edges[1]},
                {"e_g3", a.stage_edges[2]},
                {"parity_case", a.even ? "even" : "odd"}};
  return cert;
}

bool adjacency_criterion(const SidonSet& s, const ExtFieldCtx& ctx, int i, int t1, int j, int t2) {
  const int q = s.q;
  if (i < 1 || i > q || j < 1 || j > q || t1 < 0 || t1 > q - 2 || t2 < 0 || t2 > q - 2)
    throw Error("IndexOutOfRange", "require 1 <= i,j <= q and 0 <= t1,t2 <= q-2");
  const auto& f = ctx.base;
  const int lhs = f.add(s.b_of(i), s.b_of(j));
  const int rhs = f.sub(ctx.mu_pow(t1 + t2), ctx.alpha);
  return lhs == rhs;
}

}  // namespace polarity
