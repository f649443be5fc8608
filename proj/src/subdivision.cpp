#include "tropica/subdivision.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "tropica/error.hpp"

namespace tropica {

namespace {

long long cross3(const IJ& o, const IJ& a, const IJ& b) {
  return static_cast<long long>(a.i - o.i) * (b.j - o.j) -
         static_cast<long long>(a.j - o.j) * (b.i - o.i);
}

bool all_collinear(const std::vector<IJ>& pts) {
  if (pts.size() < 3) return true;
  for (size_t k = 2; k < pts.size(); ++k)
    if (cross3(pts[0], pts[1], pts[k]) != 0) return false;
  return true;
}

}  // namespace

std::vector<IJ> lattice_hull(std::vector<IJ> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;

  std::vector<IJ> hull(2 * points.size());
  size_t k = 0;
  for (const IJ& p : points) {  // lower chain
    while (k >= 2 && cross3(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {  // upper
    while (k >= lower && cross3(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

Rational polygon_double_area(const std::vector<IJ>& poly) {
  long long s = 0;
  for (size_t k = 0; k < poly.size(); ++k) {
    const IJ& p = poly[k];
    const IJ& q = poly[(k + 1) % poly.size()];
    s += static_cast<long long>(p.i) * q.j - static_cast<long long>(p.j) * q.i;
  }
  return Rational(static_cast<long>(s));
}

namespace {

DualSubdivision collinear_subdivision(const std::vector<IJ>& support,
                                      const std::vector<Rational>& lifts) {
  DualSubdivision S;
  S.support = support;
  S.lifts = lifts;
  S.has_lift = true;

  if (support.size() == 1) {
    S.dimension = 0;
    S.newton_polygon = {support[0]};
    return S;
  }

  S.dimension = 1;
  // parametrize the support along its line: p = p0 + tau * s
  IJ p0 = support.front();
  Vec2i span{support.back().i - p0.i, support.back().j - p0.j};
  Vec2i s = primitive(span);
  std::vector<std::pair<long long, Rational>> on_line;  // (tau, height)
  for (size_t k = 0; k < support.size(); ++k) {
    Vec2i d{support[k].i - p0.i, support[k].j - p0.j};
    long long tau = (s.x != 0) ? d.x / s.x : d.y / s.y;
    on_line.emplace_back(tau, lifts[k]);
  }
  std::sort(on_line.begin(), on_line.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  S.newton_polygon = {IJ{p0.i + static_cast<int>(on_line.front().first * s.x),
                         p0.j + static_cast<int>(on_line.front().first * s.y)},
                      IJ{p0.i + static_cast<int>(on_line.back().first * s.x),
                         p0.j + static_cast<int>(on_line.back().first * s.y)}};

  // 1D upper hull over (tau, h); each hull edge is a 1-dimensional cell
  std::vector<std::pair<long long, Rational>> hull;
  for (const auto& q : on_line) {
    while (hull.size() >= 2) {
      const auto& u = hull[hull.size() - 2];
      const auto& v = hull[hull.size() - 1];
      if ((v.second - u.second) * Rational(static_cast<long>(q.first - u.first)) >
          (q.second - u.second) * Rational(static_cast<long>(v.first - u.first)))
        break;
      hull.pop_back();
    }
    hull.push_back(q);
  }
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    SubCell c;
    auto at = [&](long long tau) {
      return IJ{p0.i + static_cast<int>(tau * s.x), p0.j + static_cast<int>(tau * s.y)};
    };
    c.vertices = {at(hull[k].first), at(hull[k + 1].first)};
    S.cells.push_back(c);
  }
  return S;
}

}  // namespace

DualSubdivision dual_subdivision(const BiPoly& p) {
  std::vector<IJ> support = p.support();
  std::vector<Rational> lifts;
  lifts.reserve(support.size());
  for (const IJ& e : support) lifts.push_back(p.coeff(e).finite());

  if (all_collinear(support)) return collinear_subdivision(support, lifts);

  DualSubdivision S;
  S.support = support;
  S.lifts = lifts;
  S.has_lift = true;
  S.dimension = 2;
  S.newton_polygon = lattice_hull(support);

  const size_t n = support.size();
  // Upper facets by exhaustive plane enumeration: a facet plane passes
  // through three support points with non-collinear projection and dominates
  // every lift. Desk-scale supports keep this exact approach cheap.
  std::map<std::pair<Rational, Rational>, SubCell> facets;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c) {
        long long det = cross3(support[a], support[b], support[c]);
        if (det == 0) continue;
        Rational d2i(support[b].i - support[a].i), d2j(support[b].j - support[a].j);
        Rational d3i(support[c].i - support[a].i), d3j(support[c].j - support[a].j);
        Rational h2 = lifts[b] - lifts[a];
        Rational h3 = lifts[c] - lifts[a];
        Rational rdet(static_cast<long>(det));
        Rational alpha = (h2 * d3j - h3 * d2j) / rdet;
        Rational beta = (h3 * d2i - h2 * d3i) / rdet;
        Rational gamma = lifts[a] - alpha * support[a].i - beta * support[a].j;
        if (facets.count({alpha, beta})) continue;

        bool upper = true;
        std::vector<IJ> eq;
        for (size_t k = 0; k < n; ++k) {
          Rational plane = alpha * support[k].i + beta * support[k].j + gamma;
          if (lifts[k] > plane) {
            upper = false;
            break;
          }
          if (lifts[k] == plane) eq.push_back(support[k]);
        }
        if (!upper) continue;

        SubCell cell;
        cell.vertices = lattice_hull(eq);
        cell.has_plane = true;
        cell.alpha = alpha;
        cell.beta = beta;
        cell.gamma = gamma;
        facets.emplace(std::make_pair(alpha, beta), std::move(cell));
      }

  for (auto& [key, cell] : facets) S.cells.push_back(std::move(cell));
  std::sort(S.cells.begin(), S.cells.end(),
            [](const SubCell& x, const SubCell& y) { return x.vertices < y.vertices; });

  // edge table: each cell contributes its boundary segments
  std::map<std::pair<IJ, IJ>, SubEdge> edges;
  for (size_t ci = 0; ci < S.cells.size(); ++ci) {
    const auto& vs = S.cells[ci].vertices;
    for (size_t k = 0; k < vs.size(); ++k) {
      IJ u = vs[k], v = vs[(k + 1) % vs.size()];
      auto key = std::minmax(u, v);
      auto it = edges.find(key);
      if (it == edges.end()) {
        SubEdge e;
        e.a = key.first;
        e.b = key.second;
        e.cells[e.ncells++] = static_cast<int>(ci);
        e.weight = lattice_gcd(Vec2i{e.b.i - e.a.i, e.b.j - e.a.j});
        edges.emplace(key, e);
      } else {
        assert(it->second.ncells == 1);
        it->second.cells[it->second.ncells++] = static_cast<int>(ci);
      }
    }
  }
  for (auto& [key, e] : edges) {
    e.boundary = (e.ncells == 1);
    S.edges.push_back(e);
  }

#ifndef NDEBUG
  // cells tile the Newton polygon
  Rational area_sum(0);
  for (const auto& c : S.cells) area_sum += polygon_double_area(c.vertices);
  assert(area_sum == polygon_double_area(S.newton_polygon));
#endif
  return S;
}

}  // namespace tropica
