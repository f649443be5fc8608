#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropica/curve.hpp"

namespace tropica {

// Quadrants are indexed 0..3 with bit 0 = eps1 (x sign flipped) and
// bit 1 = eps2 (y sign flipped); quadrant (eps1, eps2) carries the source
// picture reflected by (x, y) -> ((-1)^eps1 x, (-1)^eps2 y).
using Quadrant = int;

inline std::array<int, 2> quadrant_bits(Quadrant q) { return {q & 1, (q >> 1) & 1}; }
inline Quadrant quadrant_of(int eps1, int eps2) { return (eps1 & 1) | ((eps2 & 1) << 1); }

// For an edge of direction (a, b), surviving copies pair across the sign map
// s_{a,b}: quadrant q pairs with q XOR (a mod 2, b mod 2). This is the
// convention consistent with monomial sign patterns (real points on an edge
// exist exactly when the two dual monomials have opposite signs); it
// reproduces a classical line's arrangement in degree 1.
inline Quadrant paired_quadrant(Quadrant q, const Vec2i& dir) {
  return q ^ quadrant_of(static_cast<int>(dir.x & 1), static_cast<int>(dir.y & 1));
}

// survivors[e] = the two quadrants (sorted) keeping a copy of edge e, for
// every edge in the unified index space (bounded edges first, then rays)
struct SurvivorSet {
  std::vector<std::pair<Quadrant, Quadrant>> survivors;

  friend bool operator==(const SurvivorSet&, const SurvivorSet&) = default;
};

struct PatchworkViolation {
  enum class Type { EdgePairing, VertexParity };
  Type type;
  int edge = -1;      // EdgePairing
  int vertex = -1;    // VertexParity
  Quadrant quadrant = 0;
  int survivor_count = 0;
};

struct PatchworkValidation {
  bool ok = false;
  std::vector<PatchworkViolation> violations;
};

// Checks the hypotheses of the erasure game (odd weights everywhere, all
// dual cells triangles); throws ErrorKind::Precondition when violated.
void patchwork_require_preconditions(const TropicalCurve& c);

// Rule check: each edge keeps exactly the two copies of one s_{a,b} orbit,
// and each vertex copy has 0 or 2 surviving incident edge copies (i.e.
// exactly one or three of the three copies are erased).
PatchworkValidation patchwork_validate(const TropicalCurve& c,
                                       const SurvivorSet& survivors);

// Deterministic backtracking over the two admissible pairings per edge
// (edges in index order, the orbit containing quadrant 0 first), pruned by
// the vertex rule. limit < 0 enumerates everything.
std::vector<SurvivorSet> patchwork_enumerate(const TropicalCurve& c, long limit);

struct ComponentInfo {
  bool bounded = false;
  std::vector<Quadrant> quadrants;  // distinct quadrants traversed
  int unbounded_ends = 0;
  int parent = -1;  // nesting (bounded components only)
};

struct ArrangementStats {
  int components = 0;
  int bounded = 0;
  int unbounded = 0;
  std::vector<ComponentInfo> details;

  friend bool operator==(const ArrangementStats&, const ArrangementStats&) = default;
};

// Topology of the glued 1-complex: ray copies whose direction has a negative
// component reach a finite axis point and glue to their paired copy; copies
// with both components nonnegative point to affine infinity and are
// unbounded ends. Nesting of bounded components by exact ray casting on the
// embedded four-quadrant drawing.
ArrangementStats arrangement_stats(const TropicalCurve& c,
                                   const SurvivorSet& survivors);

}  // namespace tropica
