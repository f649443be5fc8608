#include <doctest.h>

#include <map>
#include <set>

#include "support/builders.hpp"
#include "tropica/error.hpp"
#include "tropica/patchwork.hpp"

using namespace tropica;
using tt::bi;
using tt::line_at;
using tt::rat;

namespace {

// degree-d polynomial whose lift is strictly concave-generic: the dual is a
// unimodular triangulation (all cells triangles, all weights 1)
BiPoly honeycomb(int d) {
  std::vector<std::pair<IJ, TropicalNumber>> terms;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j)
      terms.emplace_back(IJ{i, j},
                         TropicalNumber(Rational(-(i * i + i * j + j * j))));
  return BiPoly::from_terms(terms);
}

TropicalCurve line_curve() { return tropical_curve(line_at(rat("0"), rat("0"))); }

// exhaustive oracle over all orbit combinations, an independent
// implementation of the two erasure rules
std::vector<SurvivorSet> brute_force_patchworks(const TropicalCurve& c) {
  const int ne = static_cast<int>(c.total_edges());
  auto dir_of = [&](int e) {
    return e < static_cast<int>(c.edges.size())
               ? c.edges[e].dir
               : c.rays[e - c.edges.size()].dir;
  };
  std::vector<std::vector<int>> incident(c.vertices.size());
  for (size_t k = 0; k < c.edges.size(); ++k) {
    incident[c.edges[k].v1].push_back(static_cast<int>(k));
    incident[c.edges[k].v2].push_back(static_cast<int>(k));
  }
  for (size_t k = 0; k < c.rays.size(); ++k)
    incident[c.rays[k].base].push_back(static_cast<int>(c.edges.size() + k));

  std::vector<SurvivorSet> valid;
  for (long mask = 0; mask < (1L << ne); ++mask) {
    SurvivorSet s;
    s.survivors.resize(ne);
    for (int e = 0; e < ne; ++e) {
      Quadrant q0 = (mask >> e) & 1 ? 1 : 0;
      if (q0 == 1 && paired_quadrant(0, dir_of(e)) == 1) q0 = 2;  // pick the other orbit
      Quadrant q1 = paired_quadrant(q0, dir_of(e));
      s.survivors[e] = {std::min(q0, q1), std::max(q0, q1)};
    }
    bool ok = true;
    for (size_t v = 0; v < incident.size() && ok; ++v)
      for (Quadrant q = 0; q < 4 && ok; ++q) {
        int count = 0;
        for (int e : incident[v]) {
          auto [a, b] = s.survivors[e];
          if (a == q || b == q) ++count;
        }
        if (count != 0 && count != 2) ok = false;
      }
    if (ok) valid.push_back(s);
  }
  return valid;
}

SurvivorSet survivors3(std::pair<int, int> a, std::pair<int, int> b,
                       std::pair<int, int> c) {
  SurvivorSet s;
  auto norm = [](std::pair<int, int> q) {
    return std::make_pair(std::min(q.first, q.second), std::max(q.first, q.second));
  };
  s.survivors = {norm(a), norm(b), norm(c)};
  return s;
}

}  // namespace

TEST_CASE("the line's edge order and orbit structure") {
  TropicalCurve c = line_curve();
  REQUIRE(c.edges.empty());
  REQUIRE(c.rays.size() == 3);
  CHECK(c.rays[0].dir == Vec2i{-1, 0});
  CHECK(c.rays[1].dir == Vec2i{0, -1});
  CHECK(c.rays[2].dir == Vec2i{1, 1});

  // pairing map: (eps1, eps2) -> (eps1 + alpha, eps2 + beta) mod 2
  CHECK(paired_quadrant(quadrant_of(0, 1), Vec2i{-1, 0}) == quadrant_of(1, 1));
  CHECK(paired_quadrant(quadrant_of(1, 0), Vec2i{0, -1}) == quadrant_of(1, 1));
  CHECK(paired_quadrant(quadrant_of(1, 0), Vec2i{1, 1}) == quadrant_of(0, 1));
}

TEST_CASE("validate: the worked line survivor sets") {
  TropicalCurve c = line_curve();
  // quadrant shorthand: index = quadrant_of(eps1, eps2)
  int q00 = quadrant_of(0, 0), q10 = quadrant_of(1, 0), q01 = quadrant_of(0, 1),
      q11 = quadrant_of(1, 1);

  // keeping the {(0,0),(1,1)} orbit of the diagonal ray piles three
  // survivors into quadrant (1,1) and leaves one in (0,0)
  auto bad = patchwork_validate(
      c, survivors3({q01, q11}, {q10, q11}, {q00, q11}));
  CHECK_FALSE(bad.ok);
  bool found_11 = false, found_00 = false;
  for (const auto& v : bad.violations) {
    REQUIRE(v.type == PatchworkViolation::Type::VertexParity);
    if (v.quadrant == q11) {
      found_11 = true;
      CHECK(v.survivor_count == 3);
    }
    if (v.quadrant == q00) {
      found_00 = true;
      CHECK(v.survivor_count == 1);
    }
  }
  CHECK(found_11);
  CHECK(found_00);

  // switching the diagonal ray to the {(1,0),(0,1)} orbit fixes it
  auto good = patchwork_validate(
      c, survivors3({q01, q11}, {q10, q11}, {q10, q01}));
  CHECK(good.ok);

  // survivors that are not an s_{a,b} orbit violate the pairing rule
  auto wrong_pair = patchwork_validate(
      c, survivors3({q00, q01}, {q10, q11}, {q10, q01}));
  CHECK_FALSE(wrong_pair.ok);
  bool pairing = false;
  for (const auto& v : wrong_pair.violations)
    if (v.type == PatchworkViolation::Type::EdgePairing && v.edge == 0) pairing = true;
  CHECK(pairing);
}

TEST_CASE("preconditions: odd weights and triangular cells") {
  // the weighted conic has even-weight edges
  TropicalCurve weighted = tropical_curve(
      bi({{0, 0, "0"}, {1, 0, "0"}, {0, 1, "0"}, {0, 2, "0"}, {2, 0, "-1"}}));
  CHECK_THROWS_AS(patchwork_enumerate(weighted, -1), Error);

  // a square dual cell is not a triangle
  TropicalCurve square = tropical_curve(
      bi({{0, 0, "0"}, {1, 0, "0"}, {0, 1, "0"}, {1, 1, "0"}}));
  CHECK_THROWS_AS(patchwork_enumerate(square, -1), Error);

  // degenerate support
  TropicalCurve seg = tropical_curve(bi({{0, 0, "0"}, {1, 0, "0"}}));
  CHECK_THROWS_AS(patchwork_enumerate(seg, -1), Error);
}

TEST_CASE("enumerate matches the exhaustive oracle on the line") {
  TropicalCurve c = line_curve();
  auto enumerated = patchwork_enumerate(c, -1);
  auto oracle = brute_force_patchworks(c);
  CHECK(enumerated.size() == 4);  // frozen from the oracle
  REQUIRE(enumerated.size() == oracle.size());
  std::set<std::vector<std::pair<Quadrant, Quadrant>>> a, b;
  for (const auto& s : enumerated) a.insert(s.survivors);
  for (const auto& s : oracle) b.insert(s.survivors);
  CHECK(a == b);
}

TEST_CASE("a one-vertex star with the line's rays enumerates identically") {
  TropicalCurve star;
  star.vertices.push_back({{rat("5"), rat("-2")}, -1});
  star.rays.push_back({0, {-1, 0}, 1, -1});
  star.rays.push_back({0, {0, -1}, 1, -1});
  star.rays.push_back({0, {1, 1}, 1, -1});
  auto a = patchwork_enumerate(star, -1);
  auto b = patchwork_enumerate(line_curve(), -1);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) CHECK(a[k].survivors == b[k].survivors);
}

TEST_CASE("every enumerated patchwork validates; pairing is an involution") {
  TropicalCurve c = tropical_curve(honeycomb(3));
  auto sets = patchwork_enumerate(c, 256);
  CHECK(!sets.empty());
  auto dir_of = [&](int e) {
    return e < static_cast<int>(c.edges.size()) ? c.edges[e].dir
                                                : c.rays[e - c.edges.size()].dir;
  };
  for (const auto& s : sets) {
    CHECK(patchwork_validate(c, s).ok);
    for (size_t e = 0; e < s.survivors.size(); ++e) {
      auto [q1, q2] = s.survivors[e];
      CHECK(paired_quadrant(q1, dir_of(static_cast<int>(e))) == q2);
      CHECK(paired_quadrant(q2, dir_of(static_cast<int>(e))) == q1);
    }
  }
}

TEST_CASE("line patchworks arrange like a classical line") {
  TropicalCurve c = line_curve();
  for (const auto& s : patchwork_enumerate(c, -1)) {
    ArrangementStats st = arrangement_stats(c, s);
    CHECK(st.components == 1);
    CHECK(st.bounded == 0);
    CHECK(st.unbounded == 1);
    REQUIRE(st.details.size() == 1);
    CHECK(st.details[0].unbounded_ends == 2);
    CHECK(st.details[0].quadrants.size() == 3);  // a line crosses 3 quadrants
  }
}

TEST_CASE("cubic patchworks: Harnack bound and an oval member") {
  TropicalCurve c = tropical_curve(honeycomb(3));

  // preconditions hold for the honeycomb lift
  for (const SubCell& cell : c.dual.cells) CHECK(cell.vertices.size() == 3);
  for (const CurveEdge& e : c.edges) CHECK(e.weight % 2 == 1);
  for (const CurveRay& r : c.rays) CHECK(r.weight % 2 == 1);

  auto sets = patchwork_enumerate(c, 2048);
  CHECK(!sets.empty());
  int with_oval = 0;
  for (const auto& s : sets) {
    ArrangementStats st = arrangement_stats(c, s);
    CHECK(st.components <= 4);  // (d(d-1)+2)/2 at d = 3
    CHECK(st.bounded + st.unbounded == st.components);
    if (st.bounded >= 1 && st.unbounded >= 1) ++with_oval;
    for (size_t k = 0; k < st.details.size(); ++k) {
      const ComponentInfo& ci = st.details[k];
      if (!ci.bounded) CHECK(ci.parent == -1);
      if (ci.parent >= 0) {
        CHECK(ci.parent != static_cast<int>(k));
        CHECK(st.details[ci.parent].bounded);
      }
      CHECK(!ci.quadrants.empty());
    }
  }
  // the classical cubic arrangement (an oval plus an unbounded branch)
  // appears among the enumerated patchworks
  CHECK(with_oval > 0);
}

TEST_CASE("patchwork counts follow the sign-distribution law") {
  // for a triangulated odd-weight curve, valid survivor sets correspond to
  // sign vectors on the support lattice points modulo the global flip:
  // 2^(n-1) of them
  for (int d : {1, 2, 3}) {
    TropicalCurve c = tropical_curve(honeycomb(d));
    size_t support = c.dual.support.size();
    auto sets = patchwork_enumerate(c, -1);
    CHECK(sets.size() == (size_t{1} << (support - 1)));
  }
}

TEST_CASE("smooth conic patchworks arrange like hyperbolas, never ellipses") {
  TropicalCurve c = tropical_curve(honeycomb(2));
  auto sets = patchwork_enumerate(c, -1);
  REQUIRE(sets.size() == 32);
  for (const auto& s : sets) {
    ArrangementStats st = arrangement_stats(c, s);
    CHECK(st.components == 2);  // the Harnack bound (2(2-1)+2)/2, attained
    CHECK(st.bounded == 0);     // no patchworked conic produces a lone oval
  }
}

TEST_CASE("cubic patchworks: the maximal arrangement appears 64 times") {
  TropicalCurve c = tropical_curve(honeycomb(3));
  auto sets = patchwork_enumerate(c, -1);
  REQUIRE(sets.size() == 512);
  int maximal = 0;
  for (const auto& s : sets) {
    ArrangementStats st = arrangement_stats(c, s);
    if (st.components == 4) {
      CHECK(st.bounded == 1);  // an oval plus three unbounded arcs
      ++maximal;
    } else {
      CHECK(st.components == 3);
      CHECK(st.bounded == 0);
    }
  }
  CHECK(maximal == 64);
}

TEST_CASE("harnack bound on random odd-weight triangulated curves") {
  tt::Rng rng(12001);
  int tested = 0;
  for (int attempt = 0; attempt < 120 && tested < 15; ++attempt) {
    int d = static_cast<int>(rng.integer(1, 3));
    BiPoly p = rng.bipoly_standard(d);
    TropicalCurve c = tropical_curve(p);
    bool ok = true;
    for (const SubCell& cell : c.dual.cells) ok &= cell.vertices.size() == 3;
    for (const CurveEdge& e : c.edges) ok &= (e.weight % 2 == 1);
    for (const CurveRay& r : c.rays) ok &= (r.weight % 2 == 1);
    if (!ok) continue;
    ++tested;
    long bound = (static_cast<long>(d) * (d - 1) + 2) / 2;
    for (const auto& s : patchwork_enumerate(c, 64))
      CHECK(arrangement_stats(c, s).components <= bound);
  }
  CHECK(tested >= 15);
}

namespace {

// the classical correspondence: the copy of an edge survives in a quadrant
// exactly when its two dual monomials take opposite signs there
SurvivorSet survivors_from_signs(const TropicalCurve& c,
                                 const std::map<IJ, int>& sign) {
  SurvivorSet s;
  const int ne = static_cast<int>(c.total_edges());
  s.survivors.resize(ne);
  for (int e = 0; e < ne; ++e) {
    int dual = e < static_cast<int>(c.edges.size())
                   ? c.edges[e].dual_edge
                   : c.rays[e - c.edges.size()].dual_edge;
    const SubEdge& de = c.dual.edges[dual];
    std::vector<Quadrant> kept;
    for (Quadrant q = 0; q < 4; ++q) {
      auto b = quadrant_bits(q);
      int sa = sign.at(de.a) * (((de.a.i * b[0] + de.a.j * b[1]) % 2) ? -1 : 1);
      int sb = sign.at(de.b) * (((de.b.i * b[0] + de.b.j * b[1]) % 2) ? -1 : 1);
      if (sa != sb) kept.push_back(q);
    }
    REQUIRE(kept.size() == 2);
    s.survivors[e] = {kept[0], kept[1]};
  }
  return s;
}

}  // namespace

TEST_CASE("every sign distribution induces a valid patchwork") {
  tt::Rng rng(12002);
  for (int d : {2, 3, 4}) {
    TropicalCurve c = tropical_curve(honeycomb(d));
    for (int trial = 0; trial < 40; ++trial) {
      std::map<IJ, int> sign;
      for (const IJ& p : c.dual.support) sign[p] = rng.chance(0.5) ? 1 : -1;
      CHECK(patchwork_validate(c, survivors_from_signs(c, sign)).ok);
    }
  }
}

TEST_CASE("a degree-6 sign vector produces nested ovals") {
  TropicalCurve c = tropical_curve(honeycomb(6));
  const int signs[] = {1, -1, -1, -1, -1, 1,  -1, 1,  -1, -1, 1,  1,  -1, 1,
                       -1, -1, -1, -1, -1, 1,  -1, -1, -1, -1, -1, 1,  -1, -1};
  REQUIRE(c.dual.support.size() == 28);
  std::map<IJ, int> sign;
  for (size_t k = 0; k < c.dual.support.size(); ++k)
    sign[c.dual.support[k]] = signs[k];

  SurvivorSet s = survivors_from_signs(c, sign);
  ArrangementStats st = arrangement_stats(c, s);
  CHECK(st.components == 10);
  CHECK(st.bounded == 4);
  CHECK(st.components <= (6 * 5 + 2) / 2);  // Harnack at degree 6

  int nested = 0;
  for (const ComponentInfo& ci : st.details)
    if (ci.parent >= 0) {
      ++nested;
      CHECK(ci.bounded);
      CHECK(st.details[ci.parent].bounded);
    }
  CHECK(nested == 1);  // one oval sits inside another
}

TEST_CASE("empty curve: no components") {
  TropicalCurve empty = tropical_curve(bi({{1, 1, "3"}}));
  SurvivorSet none;
  ArrangementStats st = arrangement_stats(empty, none);
  CHECK(st.components == 0);
  CHECK(st.bounded == 0);
  CHECK(st.unbounded == 0);
}

TEST_CASE("survivor set must cover the edges") {
  TropicalCurve c = line_curve();
  SurvivorSet wrong;
  wrong.survivors = {{0, 1}};
  CHECK_THROWS_AS(patchwork_validate(c, wrong), Error);
}
