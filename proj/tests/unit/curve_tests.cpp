#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "support/builders.hpp"
#include "tropica/curve.hpp"
#include "tropica/error.hpp"

using namespace tropica;
using tt::bi;
using tt::rat;
using tt::tn;

namespace {

const BiPoly& sample_line() {
  static BiPoly p = bi({{0, 0, "1/2"}, {1, 0, "2"}, {0, 1, "-5"}});
  return p;
}
const BiPoly& smooth_conic() {
  static BiPoly p = bi({{0, 0, "3"}, {1, 0, "2"}, {0, 1, "2"},
                        {1, 1, "3"}, {2, 0, "0"}, {0, 2, "0"}});
  return p;
}
const BiPoly& weighted_conic() {
  static BiPoly p = bi({{0, 0, "0"}, {1, 0, "0"}, {0, 1, "0"},
                        {0, 2, "0"}, {2, 0, "-1"}});
  return p;
}

std::multiset<std::pair<std::pair<long, long>, long long>> ray_multiset(
    const TropicalCurve& c) {
  std::multiset<std::pair<std::pair<long, long>, long long>> out;
  for (const CurveRay& r : c.rays) out.insert({{r.dir.x, r.dir.y}, r.weight});
  return out;
}

bool has_vertex(const TropicalCurve& c, const char* x, const char* y) {
  for (const CurveVertex& v : c.vertices)
    if (v.pos.x == rat(x) && v.pos.y == rat(y)) return true;
  return false;
}

// exact on-curve test, independent of the maximizer characterization
bool on_curve_exact(const TropicalCurve& c, const QPoint& p) {
  for (const CurveEdge& e : c.edges) {
    QPoint a = c.vertices[e.v1].pos, b = c.vertices[e.v2].pos;
    Rational cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cr != 0) continue;
    Rational dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    Rational len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    if (dot >= 0 && dot <= len2) return true;
  }
  for (const CurveRay& r : c.rays) {
    QPoint a = c.vertices[r.base].pos;
    Rational cr = Rational(r.dir.x) * (p.y - a.y) - Rational(r.dir.y) * (p.x - a.x);
    if (cr != 0) continue;
    Rational dot = (p.x - a.x) * Rational(r.dir.x) + (p.y - a.y) * Rational(r.dir.y);
    if (dot >= 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("the half-integer line: vertex, rays, dual triangle") {
  TropicalCurve c = tropical_curve(sample_line());
  REQUIRE(c.vertices.size() == 1);
  CHECK(c.vertices[0].pos.x == rat("-3/2"));
  CHECK(c.vertices[0].pos.y == rat("11/2"));
  CHECK(c.edges.empty());
  REQUIRE(c.rays.size() == 3);
  auto rays = ray_multiset(c);
  CHECK(rays.count({{-1, 0}, 1}) == 1);
  CHECK(rays.count({{0, -1}, 1}) == 1);
  CHECK(rays.count({{1, 1}, 1}) == 1);

  REQUIRE(c.dual.cells.size() == 1);
  std::vector<IJ> tri = c.dual.cells[0].vertices;
  std::sort(tri.begin(), tri.end());
  CHECK(tri == std::vector<IJ>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("the smooth conic: four vertices, four triangles") {
  TropicalCurve c = tropical_curve(smooth_conic());
  REQUIRE(c.vertices.size() == 4);
  CHECK(has_vertex(c, "-1", "1"));
  CHECK(has_vertex(c, "-1", "2"));
  CHECK(has_vertex(c, "1", "-1"));
  CHECK(has_vertex(c, "2", "-1"));
  CHECK(c.dual.cells.size() == 4);
  for (const SubCell& cell : c.dual.cells) CHECK(cell.vertices.size() == 3);
  CHECK(c.edges.size() == 3);
  CHECK(c.rays.size() == 6);
}

TEST_CASE("the weighted conic: two weight-2 edges and the lattice segment") {
  TropicalCurve c = tropical_curve(weighted_conic());
  int weight2 = 0;
  for (const CurveEdge& e : c.edges)
    if (e.weight == 2) ++weight2;
  for (const CurveRay& r : c.rays)
    if (r.weight == 2) ++weight2;
  CHECK(weight2 == 2);

  // the dual subdivision contains the segment through (0,0),(0,1),(0,2)
  bool found = false;
  for (const SubEdge& e : c.dual.edges)
    if (e.a == IJ{0, 0} && e.b == IJ{0, 2}) {
      found = true;
      CHECK(e.weight == 2);
    }
  CHECK(found);
}

TEST_CASE("degenerate supports") {
  // collinear support: the curve is a full line of weight 2, flagged
  TropicalCurve seg = tropical_curve(bi({{0, 0, "0"}, {2, 0, "0"}}));
  CHECK(seg.degenerate);
  REQUIRE(seg.vertices.size() == 1);
  CHECK(seg.rays.size() == 2);
  CHECK(seg.rays[0].weight == 2);
  CHECK(seg.rays[1].weight == 2);
  CHECK(check_balancing(seg).ok);
  CHECK(seg.vertices[0].pos.x == rat("0"));

  // single monomial: empty curve
  TropicalCurve empty = tropical_curve(bi({{2, 1, "5"}}));
  CHECK(empty.empty());
  CHECK(empty.dual.dimension == 0);
}

TEST_CASE("degree from ray weights") {
  CHECK(curve_degree(tropical_curve(sample_line())).degree == 1);
  CHECK(curve_degree(tropical_curve(smooth_conic())).degree == 2);
  CHECK(curve_degree(tropical_curve(weighted_conic())).degree == 2);

  tt::Rng rng(9101);
  BiPoly cubic = rng.bipoly_standard(3);
  auto rep = curve_degree(tropical_curve(cubic));
  CHECK(rep.degree == 3);
  CHECK(rep.standard_support);
  CHECK(rep.sum_left == rep.sum_down);
  CHECK(rep.sum_left == rep.sum_diag);

  // non-standard support is flagged, the ray sum still reported
  auto odd = curve_degree(tropical_curve(bi({{1, 0, "0"}, {0, 1, "0"}, {1, 1, "0"}})));
  CHECK_FALSE(odd.standard_support);
}

TEST_CASE("check_balancing on explicit graphs") {
  TropicalCurve star;
  star.vertices.push_back({{rat("0"), rat("0")}, -1});
  star.rays.push_back({0, {-1, 0}, 1, -1});
  star.rays.push_back({0, {0, -1}, 1, -1});
  star.rays.push_back({0, {1, 1}, 1, -1});
  CHECK(check_balancing(star).ok);

  TropicalCurve bad = star;
  bad.rays.pop_back();
  auto rep = check_balancing(bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violating_vertices.size() == 1);
  CHECK(rep.violating_vertices[0] == 0);

  // non-primitive direction: malformed, not unbalanced
  TropicalCurve malformed = star;
  malformed.rays[2].dir = {2, 2};
  auto rep2 = check_balancing(malformed);
  CHECK(rep2.malformed);
  CHECK_FALSE(rep2.ok);

  // stored direction disagreeing with the endpoints: malformed
  TropicalCurve twisted;
  twisted.vertices.push_back({{rat("0"), rat("0")}, -1});
  twisted.vertices.push_back({{rat("1"), rat("0")}, -1});
  twisted.edges.push_back({0, 1, {0, 1}, 1, -1});
  CHECK(check_balancing(twisted).malformed);

  // non-positive weight: malformed
  TropicalCurve weightless = star;
  weightless.rays[0].weight = 0;
  CHECK(check_balancing(weightless).malformed);
}

TEST_CASE("reconstruction rejects inconsistent input") {
  // cells that do not tile the polygon
  DualSubdivision gap = tt::make_subdivision({{{0, 0}, {2, 0}, {0, 2}}});
  gap.cells[0].vertices = {{0, 0}, {1, 0}, {0, 1}};  // shrink a cell by hand
  gap.support = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}};
  gap.newton_polygon = {{0, 0}, {2, 0}, {0, 2}};
  CHECK_THROWS_AS(curve_from_dual_description(gap, QPoint{rat("0"), rat("0")}), Error);

  // a lift folding the wrong way induces the anti-diagonal split, not the
  // claimed diagonal one
  DualSubdivision folded = tt::make_subdivision({
      {{0, 0}, {1, 0}, {1, 1}},
      {{0, 0}, {1, 1}, {0, 1}},
  });
  folded.has_lift = true;
  // support order is sorted: (0,0),(0,1),(1,0),(1,1)
  folded.lifts = {Rational(0), Rational(0), Rational(0), Rational(-5)};
  CHECK_THROWS_WITH_AS(
      curve_from_dual_description(folded, QPoint{rat("0"), rat("0")}),
      doctest::Contains("fold"), Error);
}

TEST_CASE("every computed curve is balanced (Mikhalkin direction)") {
  tt::Rng rng(9102);
  for (int k = 0; k < 60; ++k) {
    BiPoly p = rng.bipoly_standard(static_cast<int>(rng.integer(1, 5)));
    TropicalCurve c = tropical_curve(p);
    CHECK(check_balancing(c).ok);
  }
  // dense lifts: maximal subdivisions with d^2 vertices
  for (int k = 0; k < 12; ++k) {
    int d = static_cast<int>(rng.integer(2, 5));
    TropicalCurve c = tropical_curve(rng.bipoly_dense(d));
    CHECK(check_balancing(c).ok);
    CHECK(c.vertices.size() <= static_cast<size_t>(d) * d);
  }
}

TEST_CASE("non-generic lifts give non-triangular cells, still balanced") {
  // all four coefficients tie: the dual is the full unit square and the
  // curve is a 4-valent star
  TropicalCurve c = tropical_curve(bi({{0, 0, "0"}, {1, 0, "0"}, {0, 1, "0"}, {1, 1, "0"}}));
  REQUIRE(c.vertices.size() == 1);
  CHECK(c.vertices[0].pos == QPoint{rat("0"), rat("0")});
  REQUIRE(c.dual.cells.size() == 1);
  CHECK(c.dual.cells[0].vertices.size() == 4);
  CHECK(c.rays.size() == 4);
  CHECK(check_balancing(c).ok);
}

TEST_CASE("duality invariants on random curves") {
  tt::Rng rng(9103);
  for (int k = 0; k < 40; ++k) {
    int d = static_cast<int>(rng.integer(1, 5));
    BiPoly p = rng.bipoly_standard(d);
    TropicalCurve c = tropical_curve(p);

    // perpendicularity and boundary characterization
    for (const CurveEdge& e : c.edges) {
      const SubEdge& de = c.dual.edges[e.dual_edge];
      CHECK(e.dir.x * (de.b.i - de.a.i) + e.dir.y * (de.b.j - de.a.j) == 0);
      CHECK_FALSE(de.boundary);
    }
    for (const CurveRay& r : c.rays) {
      const SubEdge& de = c.dual.edges[r.dual_edge];
      CHECK(r.dir.x * (de.b.i - de.a.i) + r.dir.y * (de.b.j - de.a.j) == 0);
      CHECK(de.boundary);
    }

    // weight law: w + 1 = lattice points on the dual segment, counted
    // directly by walking the primitive step
    for (const SubEdge& de : c.dual.edges) {
      Vec2i seg{de.b.i - de.a.i, de.b.j - de.a.j};
      Vec2i step = primitive(seg);
      int count = 0;
      IJ q = de.a;
      while (true) {
        ++count;
        if (q == de.b) break;
        q = IJ{q.i + static_cast<int>(step.x), q.j + static_cast<int>(step.y)};
      }
      CHECK(de.weight + 1 == count);
    }

    // vertex count and area accounting
    CHECK(static_cast<long>(c.vertices.size()) <= static_cast<long>(d) * d);
    Rational area(0);
    for (const SubCell& cell : c.dual.cells)
      area += polygon_double_area(cell.vertices);
    CHECK(area == Rational(static_cast<long>(d) * d));  // double area of Delta_d
  }
}

TEST_CASE("cells are exactly the hulls of the maximizing monomial sets") {
  tt::Rng rng(9107);
  for (int k = 0; k < 20; ++k) {
    BiPoly p = rng.chance(0.5)
                   ? rng.bipoly_standard(static_cast<int>(rng.integer(1, 4)))
                   : rng.bipoly_dense(static_cast<int>(rng.integer(2, 4)));
    TropicalCurve c = tropical_curve(p);
    for (const CurveVertex& v : c.vertices) {
      TropicalNumber top = eval_bi(p, v.pos.x, v.pos.y);
      std::vector<IJ> maximizers;
      for (const auto& [e, a] : p.terms())
        if (TropicalNumber(a.finite() + Rational(e.i) * v.pos.x +
                           Rational(e.j) * v.pos.y) == top)
          maximizers.push_back(e);
      CHECK(maximizers.size() >= 3);
      CHECK(lattice_hull(maximizers) == c.dual.cells[v.cell].vertices);
    }
  }
}

TEST_CASE("point membership: on-curve iff the maximum is attained twice") {
  tt::Rng rng(9104);
  for (int k = 0; k < 10; ++k) {
    BiPoly p = rng.bipoly_standard(static_cast<int>(rng.integer(1, 4)));
    TropicalCurve c = tropical_curve(p);

    // interior points of edges and rays
    int on_checked = 0;
    for (const CurveEdge& e : c.edges) {
      QPoint a = c.vertices[e.v1].pos, b = c.vertices[e.v2].pos;
      QPoint mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
      CHECK(maximizer_count(p, mid.x, mid.y) >= 2);
      ++on_checked;
    }
    for (const CurveRay& r : c.rays) {
      QPoint a = c.vertices[r.base].pos;
      QPoint q{a.x + Rational(r.dir.x) * Rational(3, 2),
               a.y + Rational(r.dir.y) * Rational(3, 2)};
      CHECK(maximizer_count(p, q.x, q.y) >= 2);
      ++on_checked;
    }
    CHECK(on_checked > 0);

    // random points: the exact membership test agrees with the
    // two-maximizers characterization
    for (int s = 0; s < 100; ++s) {
      QPoint q{rng.rational(20, 3), rng.rational(20, 3)};
      bool on = on_curve_exact(c, q);
      CHECK(on == (maximizer_count(p, q.x, q.y) >= 2));
    }
  }
}

TEST_CASE("reconstruction from the lifted dual is exact") {
  tt::Rng rng(9105);
  for (int k = 0; k < 25; ++k) {
    BiPoly p = rng.bipoly_standard(static_cast<int>(rng.integer(1, 4)));
    TropicalCurve c = tropical_curve(p);
    if (c.vertices.empty()) continue;
    QPoint anchor = c.vertices[0].pos;  // vertex dual to cell 0
    TropicalCurve r = curve_from_dual_description(c.dual, anchor);
    CHECK(same_geometry(c, r));
  }
}

TEST_CASE("reconstruction without heights: combinatorics preserved") {
  tt::Rng rng(9106);
  for (int k = 0; k < 12; ++k) {
    BiPoly p = rng.bipoly_standard(static_cast<int>(rng.integer(2, 4)));
    TropicalCurve c = tropical_curve(p);
    DualSubdivision stripped = c.dual;
    stripped.has_lift = false;
    stripped.lifts.clear();

    TropicalCurve r = curve_from_dual_description(stripped, QPoint{rat("0"), rat("0")});
    CHECK(r.vertices.size() == c.vertices.size());
    CHECK(r.edges.size() == c.edges.size());
    CHECK(ray_multiset(r) == ray_multiset(c));
    CHECK(check_balancing(r).ok);
    CHECK(r.vertices[0].pos == QPoint{rat("0"), rat("0")});
  }
}

TEST_CASE("reconstruction of the four-triangle conic picture") {
  DualSubdivision s = tt::make_subdivision({
      {{0, 0}, {0, 1}, {1, 1}},
      {{0, 1}, {1, 1}, {0, 2}},
      {{0, 0}, {1, 0}, {1, 1}},
      {{1, 0}, {1, 1}, {2, 0}},
  });
  TropicalCurve r = curve_from_dual_description(s, QPoint{rat("-1"), rat("1")});
  TropicalCurve c = tropical_curve(smooth_conic());
  CHECK(r.vertices.size() == c.vertices.size());
  CHECK(r.edges.size() == c.edges.size());
  CHECK(ray_multiset(r) == ray_multiset(c));
  CHECK(r.vertices[0].pos == QPoint{rat("-1"), rat("1")});
  CHECK(check_balancing(r).ok);
}

TEST_CASE("reconstruction of a single-cell picture is the anchored fan") {
  DualSubdivision s = tt::make_subdivision({{{0, 0}, {1, 0}, {0, 1}}});
  TropicalCurve r = curve_from_dual_description(s, QPoint{rat("0"), rat("0")});
  REQUIRE(r.vertices.size() == 1);
  CHECK(r.vertices[0].pos == QPoint{rat("0"), rat("0")});
  CHECK(r.edges.empty());
  CHECK(r.rays.size() == 3);

  // same with a quadrilateral cell: every edge becomes a ray
  DualSubdivision q = tt::make_subdivision({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
  TropicalCurve rq = curve_from_dual_description(q, QPoint{rat("2"), rat("-3")});
  REQUIRE(rq.vertices.size() == 1);
  CHECK(rq.vertices[0].pos == QPoint{rat("2"), rat("-3")});
  CHECK(rq.rays.size() == 4);
  CHECK(check_balancing(rq).ok);
}

TEST_CASE("non-regular subdivision is rejected with offending edges") {
  // the classical pinwheel triangulation of a triangle around an inner
  // triangle admits no convex lift
  DualSubdivision s = tt::make_subdivision({
      {{1, 1}, {2, 1}, {1, 2}},          // inner
      {{4, 0}, {0, 4}, {2, 1}},          // corridor 1
      {{0, 4}, {1, 2}, {2, 1}},
      {{0, 4}, {0, 0}, {1, 2}},          // corridor 2
      {{0, 0}, {1, 1}, {1, 2}},
      {{0, 0}, {4, 0}, {1, 1}},          // corridor 3
      {{4, 0}, {2, 1}, {1, 1}},
  });
  CHECK_THROWS_WITH_AS(curve_from_dual_description(s, QPoint{rat("0"), rat("0")}),
                       doctest::Contains("no compatible lift"), Error);
}
