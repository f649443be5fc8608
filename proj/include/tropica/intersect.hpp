#pragma once

#include <utility>
#include <vector>

#include "tropica/bipoly.hpp"
#include "tropica/curve.hpp"

namespace tropica {

struct IntersectionPoint {
  QPoint p;
  long long mult = 0;
  enum class Kind { Transverse, StableLimit } kind = Kind::Transverse;
  // contributing (edge of C1, edge of C2) pairs, in the unified edge index
  // space (bounded edges first, then rays)
  std::vector<std::pair<int, int>> witnesses;
};

enum class NonTransverseReason { VertexOnCurve, OverlappingParallelEdges };

struct TransverseResult {
  bool ok = false;
  NonTransverseReason reason = NonTransverseReason::VertexOnCurve;
  std::vector<IntersectionPoint> points;  // sorted lexicographically
};

// Edge-edge crossings with multiplicity w1*w2*|det(u1,u2)| (the lattice area
// of the dual parallelogram). Fails with a reason when some intersection is
// not a finite interior crossing; callers then use stable_intersections.
TransverseResult transverse_intersections(const TropicalCurve& c1,
                                          const TropicalCurve& c2);

// Stable intersection: translate c2 by eps*v (eps infinitesimal, exact in
// Q[eps]/(eps^2)), intersect transversally there, and group the crossings by
// their eps->0 limit. Handles every configuration including c1 == c2.
std::vector<IntersectionPoint> stable_intersections(const TropicalCurve& c1,
                                                    const TropicalCurve& c2);

// testing hook: force the translation direction
std::vector<IntersectionPoint> stable_intersections_with_direction(
    const TropicalCurve& c1, const TropicalCurve& c2, const Vec2i& v);

// first of (1,1), (1,2), (1,3), ... parallel to no edge of either curve
Vec2i stable_translation_direction(const TropicalCurve& c1,
                                   const TropicalCurve& c2);

// union curve: the tropical product defines exactly C1 u C2
std::pair<BiPoly, TropicalCurve> union_curve(const BiPoly& p1, const BiPoly& p2);

struct BezoutReport {
  int d1 = 0;
  int d2 = 0;
  long long total = 0;
  bool ok = false;
  std::vector<IntersectionPoint> points;
};

// Requires the corner-monomial hypothesis on both polynomials (Bezout as
// stated needs degrees); declines otherwise.
BezoutReport bezout_check(const BiPoly& p1, const BiPoly& p2);

}  // namespace tropica
