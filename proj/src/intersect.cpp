#include "tropica/intersect.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>

#include "tropica/eps.hpp"
#include "tropica/error.hpp"

namespace tropica {

namespace {

// one edge or ray in parametric form: base + s * dir, s in [0, len] or [0, oo)
template <class T>
struct ParamEdge {
  Pt<T> base;
  Vec2i dir;                    // primitive
  std::optional<Rational> len;  // nullopt for rays; translation keeps it rational
  long long weight = 1;
  int id = -1;  // unified edge index within its curve
};

template <class T>
std::vector<ParamEdge<T>> parametrize(const TropicalCurve& c, const Pt<T>& shift) {
  std::vector<ParamEdge<T>> out;
  for (size_t k = 0; k < c.edges.size(); ++k) {
    const CurveEdge& e = c.edges[k];
    ParamEdge<T> pe;
    const QPoint& a = c.vertices[e.v1].pos;
    const QPoint& b = c.vertices[e.v2].pos;
    pe.base = Pt<T>{T(a.x), T(a.y)} + shift;
    pe.dir = e.dir;
    pe.len = (e.dir.x != 0) ? (b.x - a.x) / Rational(e.dir.x)
                            : (b.y - a.y) / Rational(e.dir.y);
    pe.weight = e.weight;
    pe.id = static_cast<int>(k);
    out.push_back(pe);
  }
  for (size_t k = 0; k < c.rays.size(); ++k) {
    const CurveRay& r = c.rays[k];
    ParamEdge<T> pe;
    const QPoint& a = c.vertices[r.base].pos;
    pe.base = Pt<T>{T(a.x), T(a.y)} + shift;
    pe.dir = r.dir;
    pe.weight = r.weight;
    pe.id = static_cast<int>(c.edges.size() + k);
    out.push_back(pe);
  }
  return out;
}

template <class T>
T cross_dir(const Pt<T>& d, const Vec2i& u) {
  return d.x * T(Rational(u.y)) - d.y * T(Rational(u.x));
}

template <class T>
T dot_dir(const Pt<T>& d, const Vec2i& u) {
  return d.x * T(Rational(u.x)) + d.y * T(Rational(u.y));
}

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::Domain, "intersection multiplicity overflows");
  return out;
}

enum class HitKind { None, Interior, Endpoint, Overlap };

template <class T>
struct Hit {
  HitKind kind = HitKind::None;
  Pt<T> point;
  long long mult = 0;
};

template <class T>
Hit<T> intersect_edges(const ParamEdge<T>& e1, const ParamEdge<T>& e2) {
  Hit<T> hit;
  long det = cross(e1.dir, e2.dir);
  Pt<T> d = e2.base - e1.base;

  if (det == 0) {
    if (!(cross_dir(d, e1.dir) == T(Rational(0)))) return hit;  // parallel, distinct lines
    // collinear: intersect both parameter intervals along e1
    Rational uu(e1.dir.x * e1.dir.x + e1.dir.y * e1.dir.y);
    T t0 = dot_dir(d, e1.dir) / uu;  // e2.base in e1-parameters
    bool same_dir = (e1.dir == e2.dir);

    std::optional<T> lo2, hi2;  // nullopt = unbounded on that side
    if (e2.len) {
      T t1 = same_dir ? T(t0 + T(*e2.len)) : T(t0 - T(*e2.len));
      lo2 = std::min(t0, t1);
      hi2 = std::max(t0, t1);
    } else if (same_dir) {
      lo2 = t0;
    } else {
      hi2 = t0;
    }

    T lo = T(Rational(0));  // e1 starts at 0
    if (lo2 && *lo2 > lo) lo = *lo2;
    std::optional<T> hi;
    if (e1.len) hi = T(*e1.len);
    if (hi2 && (!hi || *hi2 < *hi)) hi = hi2;

    if (!hi) {
      hit.kind = HitKind::Overlap;  // overlapping forever
    } else if (lo < *hi) {
      hit.kind = HitKind::Overlap;
    } else if (lo == *hi) {
      hit.kind = HitKind::Endpoint;  // touching collinearly at one point
    }
    return hit;
  }

  Rational rdet(det);
  T s = cross_dir(d, e2.dir) / rdet;
  T r = cross_dir(d, e1.dir) / rdet;
  T zero = T(Rational(0));

  auto classify = [&](const T& t, const std::optional<Rational>& len) {
    if (t < zero) return HitKind::None;
    if (t == zero) return HitKind::Endpoint;
    if (len) {
      T l{T(*len)};
      if (t > l) return HitKind::None;
      if (t == l) return HitKind::Endpoint;
    }
    return HitKind::Interior;
  };

  HitKind k1 = classify(s, e1.len);
  HitKind k2 = classify(r, e2.len);
  if (k1 == HitKind::None || k2 == HitKind::None) return hit;
  hit.kind = (k1 == HitKind::Interior && k2 == HitKind::Interior)
                 ? HitKind::Interior
                 : HitKind::Endpoint;
  hit.point = Pt<T>{e1.base.x + s * T(Rational(e1.dir.x)),
                    e1.base.y + s * T(Rational(e1.dir.y))};
  hit.mult = checked_mul(checked_mul(e1.weight, e2.weight), std::abs(det));
  return hit;
}

std::vector<IntersectionPoint> sort_points(std::vector<IntersectionPoint> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const IntersectionPoint& a, const IntersectionPoint& b) {
              return lex_less(a.p, b.p);
            });
  return pts;
}

}  // namespace

TransverseResult transverse_intersections(const TropicalCurve& c1,
                                          const TropicalCurve& c2) {
  TransverseResult res;
  auto E1 = parametrize<Rational>(c1, QPoint{Rational(0), Rational(0)});
  auto E2 = parametrize<Rational>(c2, QPoint{Rational(0), Rational(0)});

  std::map<std::pair<Rational, Rational>, IntersectionPoint> acc;
  bool saw_overlap = false, saw_endpoint = false;
  for (const auto& e1 : E1)
    for (const auto& e2 : E2) {
      Hit<Rational> h = intersect_edges(e1, e2);
      switch (h.kind) {
        case HitKind::None:
          break;
        case HitKind::Overlap:
          saw_overlap = true;
          break;
        case HitKind::Endpoint:
          saw_endpoint = true;
          break;
        case HitKind::Interior: {
          auto key = std::make_pair(h.point.x, h.point.y);
          auto it = acc.find(key);
          if (it == acc.end()) {
            IntersectionPoint ip;
            ip.p = h.point;
            ip.mult = h.mult;
            ip.kind = IntersectionPoint::Kind::Transverse;
            ip.witnesses = {{e1.id, e2.id}};
            acc.emplace(key, ip);
          } else {
            it->second.mult += h.mult;
            it->second.witnesses.push_back({e1.id, e2.id});
          }
          break;
        }
      }
    }
  if (saw_overlap || saw_endpoint) {
    // overlap is the defining degeneracy when both occur (a shared ray also
    // puts each vertex on the other curve)
    res.reason = saw_overlap ? NonTransverseReason::OverlappingParallelEdges
                             : NonTransverseReason::VertexOnCurve;
    return res;
  }
  for (auto& [key, ip] : acc) res.points.push_back(std::move(ip));
  res.points = sort_points(std::move(res.points));
  res.ok = true;
  return res;
}

Vec2i stable_translation_direction(const TropicalCurve& c1,
                                   const TropicalCurve& c2) {
  auto blocked = [&](const Vec2i& v) {
    for (const TropicalCurve* c : {&c1, &c2}) {
      for (const CurveEdge& e : c->edges)
        if (parallel(v, e.dir)) return true;
      for (const CurveRay& r : c->rays)
        if (parallel(v, r.dir)) return true;
    }
    return false;
  };
  for (long k = 1;; ++k) {
    Vec2i v{1, k};
    if (!blocked(v)) return v;
  }
}

std::vector<IntersectionPoint> stable_intersections_with_direction(
    const TropicalCurve& c1, const TropicalCurve& c2, const Vec2i& v) {
  auto E1 = parametrize<Eps>(c1, Pt<Eps>{Eps(Rational(0)), Eps(Rational(0))});
  // c2 moves by eps*v
  auto E2 = parametrize<Eps>(
      c2, Pt<Eps>{Eps(Rational(0), Rational(v.x)), Eps(Rational(0), Rational(v.y))});

  std::map<std::pair<Rational, Rational>, IntersectionPoint> groups;
  for (const auto& e1 : E1)
    for (const auto& e2 : E2) {
      Hit<Eps> h = intersect_edges(e1, e2);
      // the translation direction is parallel to no edge, so with an
      // infinitesimal eps every contact is a clean interior crossing
      assert(h.kind == HitKind::None || h.kind == HitKind::Interior);
      if (h.kind != HitKind::Interior) continue;
      auto key = std::make_pair(h.point.x.a, h.point.y.a);  // the eps->0 limit
      auto it = groups.find(key);
      if (it == groups.end()) {
        IntersectionPoint ip;
        ip.p = QPoint{key.first, key.second};
        ip.mult = h.mult;
        ip.witnesses = {{e1.id, e2.id}};
        groups.emplace(key, ip);
      } else {
        it->second.mult += h.mult;
        it->second.witnesses.push_back({e1.id, e2.id});
      }
    }

  auto is_vertex = [](const TropicalCurve& c, const QPoint& p) {
    for (const CurveVertex& v2 : c.vertices)
      if (v2.pos == p) return true;
    return false;
  };
  std::vector<IntersectionPoint> pts;
  for (auto& [key, ip] : groups) {
    ip.kind = (is_vertex(c1, ip.p) || is_vertex(c2, ip.p))
                  ? IntersectionPoint::Kind::StableLimit
                  : IntersectionPoint::Kind::Transverse;
    pts.push_back(std::move(ip));
  }
  return sort_points(std::move(pts));
}

std::vector<IntersectionPoint> stable_intersections(const TropicalCurve& c1,
                                                    const TropicalCurve& c2) {
  return stable_intersections_with_direction(
      c1, c2, stable_translation_direction(c1, c2));
}

std::pair<BiPoly, TropicalCurve> union_curve(const BiPoly& p1, const BiPoly& p2) {
  BiPoly q = trop_mul(p1, p2);
  return {q, tropical_curve(q)};
}

BezoutReport bezout_check(const BiPoly& p1, const BiPoly& p2) {
  if (!p1.standard_support() || !p2.standard_support())
    throw Error(ErrorKind::Domain,
                "bezout_check requires the corner monomials a_{0,0}, a_{d,0}, "
                "a_{0,d} to be finite (degrees are undefined otherwise)");
  BezoutReport rep;
  rep.d1 = p1.degree();
  rep.d2 = p2.degree();
  rep.points = stable_intersections(tropical_curve(p1), tropical_curve(p2));
  for (const auto& ip : rep.points) rep.total += ip.mult;
  rep.ok = (rep.total == static_cast<long long>(rep.d1) * rep.d2);
  return rep;
}

}  // namespace tropica
