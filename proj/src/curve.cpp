#include "tropica/curve.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <set>

#include "simplex.hpp"
#include "tropica/error.hpp"

namespace tropica {

namespace {

QPoint cell_vertex_from_plane(const SubCell& c) {
  return {-c.alpha, -c.beta};
}

QPoint centroid(const std::vector<IJ>& pts) {
  Rational sx(0), sy(0);
  for (const IJ& p : pts) {
    sx += p.i;
    sy += p.j;
  }
  Rational n(static_cast<long>(pts.size()));
  return {sx / n, sy / n};
}

// builds vertices/edges/rays from a subdivision whose cells carry planes
TropicalCurve curve_from_planes(const DualSubdivision& S) {
  TropicalCurve C;
  C.dual = S;
  for (size_t ci = 0; ci < S.cells.size(); ++ci) {
    const SubCell& cell = S.cells[ci];
    CurveVertex v;
    v.pos = cell_vertex_from_plane(cell);
    v.cell = static_cast<int>(ci);
    C.vertices.push_back(v);
  }

  for (size_t ei = 0; ei < S.edges.size(); ++ei) {
    const SubEdge& de = S.edges[ei];
    Vec2i seg{de.b.i - de.a.i, de.b.j - de.a.j};
    Vec2i perp = rot90(primitive(seg));
    if (de.ncells == 2) {
      CurveEdge e;
      e.v1 = de.cells[0];
      e.v2 = de.cells[1];
      e.weight = de.weight;
      e.dual_edge = static_cast<int>(ei);
      QPoint d = C.vertices[e.v2].pos - C.vertices[e.v1].pos;
      // the curve edge is perpendicular to its dual lattice segment
      assert(d.x * Rational(seg.x) + d.y * Rational(seg.y) == 0);
      Rational along = d.x * Rational(perp.x) + d.y * Rational(perp.y);
      assert(along != 0);
      e.dir = along > 0 ? perp : -perp;
      C.edges.push_back(e);
    } else {
      CurveRay r;
      r.base = de.cells[0];
      r.weight = de.weight;
      r.dual_edge = static_cast<int>(ei);
      // rays leave the Newton polygon: orient the perpendicular away from
      // the cell
      QPoint inward = centroid(S.cells[de.cells[0]].vertices) -
                      QPoint{Rational(de.a.i), Rational(de.a.j)};
      Rational side = inward.x * Rational(perp.x) + inward.y * Rational(perp.y);
      assert(side != 0);
      r.dir = side > 0 ? -perp : perp;
      C.rays.push_back(r);
    }
  }
  return C;
}

}  // namespace

TropicalCurve tropical_curve(const BiPoly& p) {
  DualSubdivision S = dual_subdivision(p);

  if (S.dimension == 0) {
    TropicalCurve C;
    C.dual = S;
    return C;  // a single monomial never ties: the curve is empty
  }

  if (S.dimension == 1) {
    // every 1-cell of the segment subdivision is dual to a full line; a
    // full line is modelled as a pseudo-vertex carrying two opposite rays
    TropicalCurve C;
    C.dual = S;
    C.degenerate = true;
    IJ p0 = S.newton_polygon[0];
    Vec2i s = primitive(Vec2i{S.newton_polygon[1].i - p0.i, S.newton_polygon[1].j - p0.j});
    Rational ss(s.x * s.x + s.y * s.y);
    for (const SubCell& cell : S.cells) {
      const IJ& A = cell.vertices[0];
      const IJ& B = cell.vertices[1];
      long long tau_a = (s.x != 0) ? (A.i - p0.i) / s.x : (A.j - p0.j) / s.y;
      long long tau_b = (s.x != 0) ? (B.i - p0.i) / s.x : (B.j - p0.j) / s.y;
      Rational ha = p.coeff(A).finite(), hb = p.coeff(B).finite();
      // monomial tie along the line s.(x,y) = u*
      Rational ustar = (ha - hb) / Rational(static_cast<long>(tau_b - tau_a));
      long long w = std::abs(tau_b - tau_a) * lattice_gcd(s);

      CurveVertex v;
      v.pos = {ustar * Rational(s.x) / ss, ustar * Rational(s.y) / ss};
      v.cell = static_cast<int>(C.vertices.size());
      C.vertices.push_back(v);
      Vec2i d = rot90(s);
      C.rays.push_back({static_cast<int>(C.vertices.size()) - 1, d, w, -1});
      C.rays.push_back({static_cast<int>(C.vertices.size()) - 1, -d, w, -1});
    }
    return C;
  }

  TropicalCurve C = curve_from_planes(S);

#ifndef NDEBUG
  // vertex positions are the unique solution of any two independent
  // monomial equalities of their cell
  for (const CurveVertex& v : C.vertices) {
    const SubCell& cell = S.cells[v.cell];
    const IJ e0 = cell.vertices[0];
    Rational p0 = p.coeff(e0).finite() + Rational(e0.i) * v.pos.x + Rational(e0.j) * v.pos.y;
    for (size_t k = 1; k < cell.vertices.size(); ++k) {
      const IJ ek = cell.vertices[k];
      Rational pk = p.coeff(ek).finite() + Rational(ek.i) * v.pos.x + Rational(ek.j) * v.pos.y;
      assert(pk == p0);
    }
    assert(eval_bi(p, v.pos.x, v.pos.y) == TropicalNumber(p0));
  }
#endif
  return C;
}

bool same_geometry(const TropicalCurve& a, const TropicalCurve& b) {
  auto vertex_key = [](const TropicalCurve& c) {
    std::multiset<std::pair<Rational, Rational>> s;
    for (const auto& v : c.vertices) s.insert({v.pos.x, v.pos.y});
    return s;
  };
  if (vertex_key(a) != vertex_key(b)) return false;

  using Seg = std::tuple<Rational, Rational, Rational, Rational, long long>;
  auto edge_key = [](const TropicalCurve& c) {
    std::multiset<Seg> s;
    for (const auto& e : c.edges) {
      QPoint p = c.vertices[e.v1].pos, q = c.vertices[e.v2].pos;
      if (!lex_less(p, q)) std::swap(p, q);
      s.insert({p.x, p.y, q.x, q.y, e.weight});
    }
    return s;
  };
  if (edge_key(a) != edge_key(b)) return false;

  using RayKey = std::tuple<Rational, Rational, long long, long long, long long>;
  auto ray_key = [](const TropicalCurve& c) {
    std::multiset<RayKey> s;
    for (const auto& r : c.rays) {
      const QPoint& p = c.vertices[r.base].pos;
      s.insert({p.x, p.y, r.dir.x, r.dir.y, r.weight});
    }
    return s;
  };
  return ray_key(a) == ray_key(b);
}

DegreeReport curve_degree(const TropicalCurve& c) {
  DegreeReport rep;
  for (const CurveRay& r : c.rays) {
    if (r.dir == Vec2i{-1, 0}) rep.sum_left += r.weight;
    if (r.dir == Vec2i{0, -1}) rep.sum_down += r.weight;
    if (r.dir == Vec2i{1, 1}) rep.sum_diag += r.weight;
  }
  rep.degree = rep.sum_left;

  rep.standard_support = false;
  if (!c.dual.support.empty()) {
    int d = 0;
    for (const IJ& e : c.dual.support) d = std::max(d, e.i + e.j);
    auto has = [&](IJ e) {
      return std::find(c.dual.support.begin(), c.dual.support.end(), e) !=
             c.dual.support.end();
    };
    rep.standard_support = has({0, 0}) && has({d, 0}) && has({0, d});
  }
  if (rep.standard_support) {
    assert(rep.sum_left == rep.sum_down && rep.sum_left == rep.sum_diag);
  }
  return rep;
}

BalanceReport check_balancing(const TropicalCurve& g) {
  BalanceReport rep;
  // exact sums: graph JSON may carry arbitrary integer directions/weights
  std::vector<std::pair<Rational, Rational>> sums(
      g.vertices.size(), {Rational(0), Rational(0)});

  auto add = [&](int v, const Vec2i& d, long long w, bool flip) {
    Rational wq(static_cast<long>(flip ? -w : w));
    sums[v].first += wq * Rational(d.x);
    sums[v].second += wq * Rational(d.y);
  };

  for (size_t k = 0; k < g.edges.size(); ++k) {
    const CurveEdge& e = g.edges[k];
    if (!is_primitive(e.dir)) {
      rep.malformed = true;
      rep.malformed_reasons.push_back("edge " + std::to_string(k) +
                                      " direction is not primitive");
      continue;
    }
    QPoint d = g.vertices[e.v2].pos - g.vertices[e.v1].pos;
    Rational crossq = d.x * Rational(e.dir.y) - d.y * Rational(e.dir.x);
    Rational dotq = d.x * Rational(e.dir.x) + d.y * Rational(e.dir.y);
    if (crossq != 0 || dotq <= 0) {
      rep.malformed = true;
      rep.malformed_reasons.push_back("edge " + std::to_string(k) +
                                      " direction does not match its endpoints");
      continue;
    }
    if (e.weight <= 0) {
      rep.malformed = true;
      rep.malformed_reasons.push_back("edge " + std::to_string(k) +
                                      " has non-positive weight");
      continue;
    }
    add(e.v1, e.dir, e.weight, false);
    add(e.v2, e.dir, e.weight, true);
  }
  for (size_t k = 0; k < g.rays.size(); ++k) {
    const CurveRay& r = g.rays[k];
    if (!is_primitive(r.dir)) {
      rep.malformed = true;
      rep.malformed_reasons.push_back("ray " + std::to_string(k) +
                                      " direction is not primitive");
      continue;
    }
    if (r.weight <= 0) {
      rep.malformed = true;
      rep.malformed_reasons.push_back("ray " + std::to_string(k) +
                                      " has non-positive weight");
      continue;
    }
    add(r.base, r.dir, r.weight, false);
  }
  if (rep.malformed) return rep;

  for (size_t v = 0; v < sums.size(); ++v)
    if (sums[v].first != 0 || sums[v].second != 0)
      rep.violating_vertices.push_back(static_cast<int>(v));
  rep.ok = rep.violating_vertices.empty();
  return rep;
}

namespace {

// barycentric-style coefficients expressing plane values over a cell's first
// three vertices: plane(q) = sum_k lambda_k * h(w_k)
std::array<Rational, 3> plane_coeffs(const IJ& w0, const IJ& w1, const IJ& w2,
                                     const IJ& q) {
  long det = static_cast<long>(w1.i - w0.i) * (w2.j - w0.j) -
             static_cast<long>(w1.j - w0.j) * (w2.i - w0.i);
  Rational l1 = Rational(static_cast<long>(q.i - w0.i) * (w2.j - w0.j) -
                         static_cast<long>(q.j - w0.j) * (w2.i - w0.i)) /
                Rational(det);
  Rational l2 = Rational(static_cast<long>(w1.i - w0.i) * (q.j - w0.j) -
                         static_cast<long>(w1.j - w0.j) * (q.i - w0.i)) /
                Rational(det);
  return {Rational(1) - l1 - l2, l1, l2};
}

void require(bool cond, const char* msg) {
  if (!cond) throw Error(ErrorKind::Domain, msg);
}

}  // namespace

TropicalCurve curve_from_dual_description(const DualSubdivision& subdiv,
                                          const QPoint& anchor) {
  require(subdiv.dimension == 2,
          "reconstruction requires a 2-dimensional subdivision");
  require(!subdiv.cells.empty(), "subdivision has no cells");
  for (const SubCell& c : subdiv.cells)
    require(c.vertices.size() >= 3, "subdivision cell with fewer than 3 vertices");

  // cells must meet face-to-face: a shared edge is a full edge of both
  for (const SubEdge& e : subdiv.edges)
    for (int k = 0; k < e.ncells; ++k) {
      require(e.cells[k] >= 0 && e.cells[k] < static_cast<int>(subdiv.cells.size()),
              "subdivision edge references a missing cell");
      const auto& vs = subdiv.cells[e.cells[k]].vertices;
      bool has_a = std::find(vs.begin(), vs.end(), e.a) != vs.end();
      bool has_b = std::find(vs.begin(), vs.end(), e.b) != vs.end();
      require(has_a && has_b,
              "subdivision edge endpoints must be vertices of its cells");
    }
  {
    Rational area(0);
    for (const SubCell& c : subdiv.cells) area += polygon_double_area(c.vertices);
    require(area == polygon_double_area(subdiv.newton_polygon),
            "cells do not tile the Newton polygon");
  }

  DualSubdivision S = subdiv;

  // heights at cell vertices, either from the stored lift or synthesized
  std::map<IJ, Rational> height;
  if (S.has_lift) {
    require(S.lifts.size() == S.support.size(),
            "lift array does not match support");
    std::map<IJ, Rational> lift_of;
    for (size_t k = 0; k < S.support.size(); ++k) lift_of[S.support[k]] = S.lifts[k];
    for (const SubCell& c : S.cells)
      for (const IJ& w : c.vertices) {
        auto it = lift_of.find(w);
        require(it != lift_of.end(), "cell vertex missing from support");
        height[w] = it->second;
      }
  } else {
    // index the distinct cell vertices
    std::map<IJ, int> var;
    for (const SubCell& c : S.cells)
      for (const IJ& w : c.vertices)
        var.emplace(w, static_cast<int>(var.size()));

    std::vector<lp::Constraint> cons;
    std::vector<int> row_edge;  // constraint row -> interior edge index
    for (const SubCell& c : S.cells) {
      for (size_t k = 3; k < c.vertices.size(); ++k) {
        auto lam = plane_coeffs(c.vertices[0], c.vertices[1], c.vertices[2],
                                c.vertices[k]);
        lp::Constraint eq;
        eq.is_equality = true;
        eq.rhs = 0;
        for (int t = 0; t < 3; ++t) eq.coeffs.push_back({var[c.vertices[t]], lam[t]});
        eq.coeffs.push_back({var[c.vertices[k]], Rational(-1)});
        cons.push_back(eq);
        row_edge.push_back(-1);
      }
    }
    for (size_t ei = 0; ei < S.edges.size(); ++ei) {
      const SubEdge& de = S.edges[ei];
      if (de.ncells != 2) continue;
      // strict fold: the neighbour's far vertex lies strictly under this
      // cell's plane (>= 1 after scaling)
      const SubCell& U = S.cells[de.cells[0]];
      const SubCell& V = S.cells[de.cells[1]];
      const IJ* far = nullptr;
      for (const IJ& w : V.vertices) {
        long long cr = static_cast<long long>(de.b.i - de.a.i) * (w.j - de.a.j) -
                       static_cast<long long>(de.b.j - de.a.j) * (w.i - de.a.i);
        if (cr != 0) {
          far = &w;
          break;
        }
      }
      require(far != nullptr, "degenerate cell across interior edge");
      auto lam = plane_coeffs(U.vertices[0], U.vertices[1], U.vertices[2], *far);
      lp::Constraint ge;
      ge.is_equality = false;
      ge.rhs = 1;
      for (int t = 0; t < 3; ++t) ge.coeffs.push_back({var[U.vertices[t]], lam[t]});
      ge.coeffs.push_back({var[*far], Rational(-1)});
      cons.push_back(ge);
      row_edge.push_back(static_cast<int>(ei));
    }

    auto res = lp::solve_feasibility(static_cast<int>(var.size()), cons);
    if (!res.feasible) {
      std::string edges;
      for (int row : res.infeasible_rows) {
        if (row >= 0 && row < static_cast<int>(row_edge.size()) && row_edge[row] >= 0) {
          if (!edges.empty()) edges += ",";
          edges += std::to_string(row_edge[row]);
        }
      }
      throw Error(ErrorKind::NonRegular,
                  "subdivision admits no compatible lift (offending interior "
                  "edges: " + (edges.empty() ? std::string("cycle spans all") : edges) + ")");
    }
    for (const auto& [w, idx] : var) height[w] = res.x[idx];
  }

  // planes per cell from the heights
  for (SubCell& c : S.cells) {
    const IJ &w0 = c.vertices[0], &w1 = c.vertices[1], &w2 = c.vertices[2];
    Rational det(static_cast<long>(w1.i - w0.i) * (w2.j - w0.j) -
                 static_cast<long>(w1.j - w0.j) * (w2.i - w0.i));
    require(det != 0, "first three cell vertices are collinear");
    Rational h2 = height[w1] - height[w0];
    Rational h3 = height[w2] - height[w0];
    c.alpha = (h2 * Rational(w2.j - w0.j) - h3 * Rational(w1.j - w0.j)) / det;
    c.beta = (h3 * Rational(w1.i - w0.i) - h2 * Rational(w2.i - w0.i)) / det;
    c.gamma = height[w0] - c.alpha * w0.i - c.beta * w0.j;
    c.has_plane = true;
    for (const IJ& w : c.vertices)
      require(height[w] == c.alpha * w.i + c.beta * w.j + c.gamma,
              "cell vertices are not coplanar under the given lift");
  }
  // adjacent cells must fold convexly, else the input is not the
  // subdivision its lift induces
  for (const SubEdge& de : S.edges) {
    if (de.ncells != 2) continue;
    const SubCell& U = S.cells[de.cells[0]];
    const SubCell& V = S.cells[de.cells[1]];
    const IJ* far = nullptr;
    for (const IJ& w : V.vertices) {
      long cr = static_cast<long>(de.b.i - de.a.i) * (w.j - de.a.j) -
                static_cast<long>(de.b.j - de.a.j) * (w.i - de.a.i);
      if (cr != 0) {
        far = &w;
        break;
      }
    }
    require(far != nullptr, "degenerate cell across interior edge");
    Rational fold = U.alpha * far->i + U.beta * far->j + U.gamma - height[*far];
    if (fold <= 0)
      throw Error(ErrorKind::NonRegular,
                  "lift does not fold convexly across an interior edge");
  }

  TropicalCurve C = curve_from_planes(S);
  QPoint shift = anchor - C.vertices[0].pos;
  for (CurveVertex& v : C.vertices) v.pos = v.pos + shift;
  return C;
}

}  // namespace tropica
