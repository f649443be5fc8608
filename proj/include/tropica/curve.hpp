#pragma once

#include <string>
#include <vector>

#include "tropica/geometry.hpp"
#include "tropica/subdivision.hpp"

namespace tropica {

struct CurveVertex {
  QPoint pos;
  int cell = -1;  // dual cell index, -1 for synthetic graphs

  friend bool operator==(const CurveVertex& a, const CurveVertex& b) {
    return a.pos == b.pos;
  }
};

struct CurveEdge {
  int v1 = -1;
  int v2 = -1;
  Vec2i dir;  // primitive, oriented v1 -> v2
  long long weight = 1;
  int dual_edge = -1;

  friend bool operator==(const CurveEdge& a, const CurveEdge& b) {
    return a.v1 == b.v1 && a.v2 == b.v2 && a.dir == b.dir && a.weight == b.weight;
  }
};

struct CurveRay {
  int base = -1;
  Vec2i dir;  // primitive
  long long weight = 1;
  int dual_edge = -1;

  friend bool operator==(const CurveRay& a, const CurveRay& b) {
    return a.base == b.base && a.dir == b.dir && a.weight == b.weight;
  }
};

// Weighted balanced 1-complex in R^2. Produced curves carry their dual
// subdivision; curves parsed from plain graph JSON (the balancing checker's
// input) may have an empty dual.
struct TropicalCurve {
  std::vector<CurveVertex> vertices;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
  DualSubdivision dual;
  bool degenerate = false;  // support of dimension < 2

  bool empty() const { return vertices.empty() && edges.empty() && rays.empty(); }
  // unified edge index space used by intersection witnesses and
  // patchworking: bounded edges first, rays after
  size_t total_edges() const { return edges.size() + rays.size(); }

  friend bool operator==(const TropicalCurve& a, const TropicalCurve& b) {
    return a.vertices == b.vertices && a.edges == b.edges && a.rays == b.rays &&
           a.degenerate == b.degenerate && a.dual == b.dual;
  }
};

// equality as weighted point sets (vertex positions, unordered edge and ray
// multisets), ignoring dual data and index order
bool same_geometry(const TropicalCurve& a, const TropicalCurve& b);

// The corner locus of "sum a_{i,j} x^i y^j" with Proposition-2 weights:
// one vertex per 2-cell of the dual subdivision, one bounded edge per
// interior dual edge, one ray per boundary dual edge. A single monomial
// yields the empty curve; collinear support yields full lines, modelled as
// a pseudo-vertex with two opposite rays and flagged degenerate.
TropicalCurve tropical_curve(const BiPoly& p);

struct DegreeReport {
  long long degree = 0;  // ray-weight sum in direction (-1,0)
  bool standard_support = true;
  long long sum_left = 0, sum_down = 0, sum_diag = 0;
};

DegreeReport curve_degree(const TropicalCurve& c);

struct BalanceReport {
  bool ok = false;
  bool malformed = false;
  std::vector<std::string> malformed_reasons;
  std::vector<int> violating_vertices;
};

// Exact per-vertex test of "sum of weight * primitive outgoing direction
// = 0" on any candidate weighted graph. Non-primitive or misaligned stored
// directions are reported as malformed input, distinct from unbalanced.
BalanceReport check_balancing(const TropicalCurve& g);

// Rebuilds a curve from its dual subdivision. When the subdivision carries
// lift heights the curve is exact up to the translation pinned by `anchor`
// (the position of the vertex dual to cell 0). Without heights a compatible
// lift is synthesized (exact LP over the cell heights); subdivisions with no
// compatible lift are rejected as non-regular, reporting the interior edges
// whose fold constraints failed.
TropicalCurve curve_from_dual_description(const DualSubdivision& subdiv,
                                          const QPoint& anchor);

}  // namespace tropica
