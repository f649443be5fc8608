#pragma once

#include <optional>
#include <vector>

#include "tropica/bipoly.hpp"
#include "tropica/geometry.hpp"

namespace tropica {

// One cell of the regular subdivision. For 2-dimensional subdivisions the
// cell is the projection of an upper facet of the lifted support and carries
// the facet plane z = alpha*i + beta*j + gamma; the dual curve vertex is
// (-alpha, -beta).
struct SubCell {
  std::vector<IJ> vertices;  // hull vertices, counter-clockwise
  bool has_plane = false;
  Rational alpha, beta, gamma;

  friend bool operator==(const SubCell& a, const SubCell& b) {
    return a.vertices == b.vertices;
  }
};

// Lattice segment of the subdivision, between two cell vertices.
struct SubEdge {
  IJ a, b;  // canonical: a < b
  int cells[2] = {-1, -1};
  int ncells = 0;
  // lattice-point count minus one
  long long weight = 0;
  bool boundary = false;

  friend bool operator==(const SubEdge& x, const SubEdge& y) {
    return x.a == y.a && x.b == y.b && x.ncells == y.ncells &&
           x.cells[0] == y.cells[0] && x.cells[1] == y.cells[1];
  }
};

// Regular subdivision of the Newton polygon induced by lifting each support
// point (i,j) to its coefficient and taking the upper convex hull.
// dimension 2 is the generic case; collinear support degenerates to a
// subdivided segment (dimension 1, flagged) and a single monomial to a point
// (dimension 0).
struct DualSubdivision {
  std::vector<IJ> support;       // sorted
  std::vector<Rational> lifts;   // aligned with support; empty unless has_lift
  bool has_lift = false;
  std::vector<IJ> newton_polygon;  // hull vertices ccw (2 points if dim 1)
  int dimension = 2;
  std::vector<SubCell> cells;  // canonical order
  std::vector<SubEdge> edges;  // dimension 2 only

  friend bool operator==(const DualSubdivision& a, const DualSubdivision& b) {
    return a.support == b.support && a.has_lift == b.has_lift &&
           (!a.has_lift || a.lifts == b.lifts) && a.dimension == b.dimension &&
           a.cells == b.cells && a.edges == b.edges &&
           a.newton_polygon == b.newton_polygon;
  }
};

DualSubdivision dual_subdivision(const BiPoly& p);

// 2D convex hull of lattice points, counter-clockwise, collinear points
// dropped; degenerate inputs give the 2 extreme points (or 1).
std::vector<IJ> lattice_hull(std::vector<IJ> points);

// twice the (positive) area of a ccw lattice/rational polygon
Rational polygon_double_area(const std::vector<IJ>& poly);

}  // namespace tropica
