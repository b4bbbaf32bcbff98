#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarity/field.hpp"
#include "polarity/graph.hpp"
#include "polarity/sidon.hpp"

namespace polarity {

// Point of PG(2,q), normalized so the first nonzero coordinate is 1.
struct ProjectivePoint {
  int x0 = 0, x1 = 0, x2 = 0;
  auto operator<=>(const ProjectivePoint&) const = default;
  std::string str() const {
    return std::to_string(x0) + ":" + std::to_string(x1) + ":" + std::to_string(x2);
  }
};

ProjectivePoint normalize_point(const FieldCtx& f, int x0, int x1, int x2);

// The q^2+q+1 normalized points in lexicographic order:
// (0,0,1), then (0,1,b), then (1,a,b).
std::vector<ProjectivePoint> projective_points(const FieldCtx& f);

// Index of a normalized point in that order.
int point_index(const FieldCtx& f, const ProjectivePoint& pt);

struct CayleyMeta {
  SidonSet sidon;
  std::vector<int64_t> absolute_points;  // {y : 2y in A}, sorted
  std::optional<int64_t> special_x;      // even q: from LindstromData
};

struct CayleyGraph {
  Graph graph;  // vertex v is the element v of Z_{q^2-1}
  CayleyMeta meta;
};

// {y : 2y mod n in A}; these are exactly the degree q-1 vertices.
std::vector<int64_t> absolute_points(const SidonSet& s);

// x ~ y iff x + y in A. Labels are the Z_{q^2-1} elements.
CayleyGraph cayley_sum_graph(const SidonSet& s);

// Record the special vertex (even q) on the meta block.
void attach_special_vertex(CayleyMeta& meta, const LindstromData& lind);

enum class ErForm { dot, alt };
ErForm parse_er_form(const std::string& name);

struct ErGraph {
  Graph graph;
  std::vector<ProjectivePoint> points;
  ErForm form = ErForm::dot;
  int q = 0;
};

// Orthogonal polarity graph on PG(2,q): adjacency x0y0+x1y1+x2y2 = 0 (dot)
// or x0y2+x2y0 = x1y1 (alt). Self-orthogonal points carry no loop.
ErGraph er_graph(const FieldCtx& base, ErForm form);

struct HGraph {
  Graph graph;
  std::vector<int64_t> kept;  // Cayley elements retained, in vertex order
};

// Even q: delete the special vertex and its neighborhood (the q absolute
// points) from the Cayley graph. q^2-q-2 vertices, q^3/2 - q^2 edges.
HGraph h_graph(const CayleyGraph& cg);

struct SubfieldConstruction {
  Graph graph;                 // ER_q minus S
  int q = 0;
  int root_q = 0;              // q^{1/2}
  std::vector<int> copy_vertices;      // ER_q indices of the ER_{root_q} copy
  std::vector<int> independent_kept;   // I, subset of the copy
  std::vector<int> deleted;            // S = copy \ I
  int64_t edges = 0;
  int64_t bound = 0;           // (q^3 + q^{3/2} - 3q + q^{1/2} - 4) / 2
  bool meets_bound = false;
  int64_t copy_edges = 0;      // e(ER_{root_q})
  int64_t deleted_internal_edges = 0;  // e(S)
};

// q = p^{2t}: delete V(copy) minus a maximum independent set truncated to
// root_q - 1 vertices, leaving a C4-free graph on q^2-1 vertices.
SubfieldConstruction subfield_construction(int p, int t, int max_q = kDefaultMaxQ,
                                           int max_m = kDefaultMaxDegree);

// Reference Petersen graph (3-regular, 10 vertices, girth 5).
Graph petersen_reference();

}  // namespace polarity
