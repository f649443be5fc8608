#include "tropica/patchwork.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "tropica/error.hpp"

namespace tropica {

namespace {

Vec2i edge_direction(const TropicalCurve& c, int unified_id) {
  if (unified_id < static_cast<int>(c.edges.size()))
    return c.edges[unified_id].dir;
  return c.rays[unified_id - static_cast<int>(c.edges.size())].dir;
}

long long edge_weight(const TropicalCurve& c, int unified_id) {
  if (unified_id < static_cast<int>(c.edges.size()))
    return c.edges[unified_id].weight;
  return c.rays[unified_id - static_cast<int>(c.edges.size())].weight;
}

std::vector<std::vector<int>> incidence(const TropicalCurve& c) {
  std::vector<std::vector<int>> inc(c.vertices.size());
  for (size_t k = 0; k < c.edges.size(); ++k) {
    inc[c.edges[k].v1].push_back(static_cast<int>(k));
    inc[c.edges[k].v2].push_back(static_cast<int>(k));
  }
  for (size_t k = 0; k < c.rays.size(); ++k)
    inc[c.rays[k].base].push_back(static_cast<int>(c.edges.size() + k));
  return inc;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void patchwork_require_preconditions(const TropicalCurve& c) {
  if (c.degenerate)
    throw Error(ErrorKind::Precondition,
                "patchworking requires a 2-dimensional Newton polygon");
  for (size_t k = 0; k < c.total_edges(); ++k)
    if (edge_weight(c, static_cast<int>(k)) % 2 == 0)
      throw Error(ErrorKind::Precondition,
                  "patchworking requires only edges of odd weight (edge " +
                      std::to_string(k) + " has even weight)",
                  "{\"reason\":\"even-weight edge\",\"edge\":" + std::to_string(k) + "}");
  for (const SubCell& cell : c.dual.cells)
    if (cell.vertices.size() != 3)
      throw Error(ErrorKind::Precondition,
                  "patchworking requires all dual cells to be triangles",
                  "{\"reason\":\"non-triangular cell\"}");
}

PatchworkValidation patchwork_validate(const TropicalCurve& c,
                                       const SurvivorSet& survivors) {
  patchwork_require_preconditions(c);
  if (survivors.survivors.size() != c.total_edges())
    throw Error(ErrorKind::InvalidArgument,
                "survivor set must cover every edge exactly once");

  PatchworkValidation out;
  for (size_t e = 0; e < survivors.survivors.size(); ++e) {
    auto [q1, q2] = survivors.survivors[e];
    if (q1 < 0 || q1 > 3 || q2 < 0 || q2 > 3)
      throw Error(ErrorKind::InvalidArgument, "quadrant out of range");
    Vec2i d = edge_direction(c, static_cast<int>(e));
    if (q1 == q2 || paired_quadrant(q1, d) != q2) {
      PatchworkViolation v;
      v.type = PatchworkViolation::Type::EdgePairing;
      v.edge = static_cast<int>(e);
      out.violations.push_back(v);
    }
  }

  auto inc = incidence(c);
  for (size_t v = 0; v < inc.size(); ++v) {
    for (Quadrant q = 0; q < 4; ++q) {
      int count = 0;
      for (int e : inc[v]) {
        auto [q1, q2] = survivors.survivors[e];
        if (q1 == q || q2 == q) ++count;
      }
      if (count != 0 && count != 2) {
        PatchworkViolation viol;
        viol.type = PatchworkViolation::Type::VertexParity;
        viol.vertex = static_cast<int>(v);
        viol.quadrant = q;
        viol.survivor_count = count;
        out.violations.push_back(viol);
      }
    }
  }
  out.ok = out.violations.empty();
  return out;
}

std::vector<SurvivorSet> patchwork_enumerate(const TropicalCurve& c, long limit) {
  patchwork_require_preconditions(c);
  const int ne = static_cast<int>(c.total_edges());
  auto inc = incidence(c);

  // pairing 0 = the orbit containing quadrant 0, pairing 1 = its complement
  std::vector<std::array<std::pair<Quadrant, Quadrant>, 2>> orbits(ne);
  for (int e = 0; e < ne; ++e) {
    Vec2i d = edge_direction(c, e);
    Quadrant p0 = paired_quadrant(0, d);
    assert(p0 != 0);  // primitive directions are never (even, even)
    Quadrant a = 0, b = p0;
    std::vector<Quadrant> rest;
    for (Quadrant q = 1; q < 4; ++q)
      if (q != p0) rest.push_back(q);
    orbits[e][0] = {std::min(a, b), std::max(a, b)};
    orbits[e][1] = {std::min(rest[0], rest[1]), std::max(rest[0], rest[1])};
  }

  // a vertex can be checked once all its incident edges are decided
  std::vector<std::vector<int>> check_at(ne);
  for (size_t v = 0; v < inc.size(); ++v) {
    if (inc[v].empty()) continue;
    int last = *std::max_element(inc[v].begin(), inc[v].end());
    check_at[last].push_back(static_cast<int>(v));
  }

  std::vector<SurvivorSet> results;
  SurvivorSet current;
  current.survivors.resize(ne);

  auto vertex_ok = [&](int v) {
    for (Quadrant q = 0; q < 4; ++q) {
      int count = 0;
      for (int e : inc[v]) {
        auto [q1, q2] = current.survivors[e];
        if (q1 == q || q2 == q) ++count;
      }
      if (count != 0 && count != 2) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int e) -> bool {
    if (limit >= 0 && static_cast<long>(results.size()) >= limit) return false;
    if (e == ne) {
      results.push_back(current);
      return limit < 0 || static_cast<long>(results.size()) < limit;
    }
    for (int choice = 0; choice < 2; ++choice) {
      current.survivors[e] = orbits[e][choice];
      bool ok = true;
      for (int v : check_at[e])
        if (!vertex_ok(v)) {
          ok = false;
          break;
        }
      if (ok && !self(self, e + 1)) return false;
    }
    return true;
  };
  rec(rec, 0);
  return results;
}

namespace {

struct EmbeddedSegment {
  QPoint a, b;
};

QPoint reflect(const QPoint& p, Quadrant q) {
  auto [e1, e2] = quadrant_bits(q);
  return {e1 ? -p.x : p.x, e2 ? -p.y : p.y};
}

// finite axis point reached by a ray whose direction has a negative
// component (drawn from a base strictly inside the positive quadrant)
QPoint axis_point(const QPoint& base, const Vec2i& dir) {
  std::optional<Rational> t;
  if (dir.x < 0) t = base.x / Rational(-dir.x);
  if (dir.y < 0) {
    Rational ty = base.y / Rational(-dir.y);
    if (!t || ty < *t) t = ty;
  }
  return {base.x + *t * Rational(dir.x), base.y + *t * Rational(dir.y)};
}

bool on_segment(const QPoint& p, const EmbeddedSegment& s) {
  Rational cx = (s.b.x - s.a.x) * (p.y - s.a.y) - (s.b.y - s.a.y) * (p.x - s.a.x);
  if (cx != 0) return false;
  Rational dot = (p.x - s.a.x) * (s.b.x - s.a.x) + (p.y - s.a.y) * (s.b.y - s.a.y);
  Rational len2 = (s.b.x - s.a.x) * (s.b.x - s.a.x) + (s.b.y - s.a.y) * (s.b.y - s.a.y);
  return dot >= 0 && dot <= len2;
}

// crossing-number parity of the horizontal ray from p towards +x
bool point_inside(const QPoint& p, const std::vector<EmbeddedSegment>& segs) {
  int crossings = 0;
  for (const auto& s : segs) {
    bool above_a = s.a.y > p.y;
    bool above_b = s.b.y > p.y;
    if (above_a == above_b) continue;
    Rational xi = s.a.x + (s.b.x - s.a.x) * (p.y - s.a.y) / (s.b.y - s.a.y);
    if (xi > p.x) ++crossings;
  }
  return (crossings % 2) == 1;
}

}  // namespace

ArrangementStats arrangement_stats(const TropicalCurve& c,
                                   const SurvivorSet& survivors) {
  ArrangementStats stats;
  if (c.empty()) return stats;

  PatchworkValidation check = patchwork_validate(c, survivors);
  if (!check.ok)
    throw Error(ErrorKind::Domain,
                "arrangement_stats requires a valid real tropical curve");

  // embed the source into the open positive quadrant
  Rational minx = c.vertices[0].pos.x, miny = c.vertices[0].pos.y;
  for (const CurveVertex& v : c.vertices) {
    minx = std::min(minx, v.pos.x);
    miny = std::min(miny, v.pos.y);
  }
  QPoint shift{Rational(1) - minx, Rational(1) - miny};
  auto emb = [&](const QPoint& p) { return p + shift; };

  const int ne = static_cast<int>(c.total_edges());
  const int nv = static_cast<int>(c.vertices.size());

  // node ids: vertex copies, then per-edge-copy terminals for rays
  auto vertex_node = [&](int v, Quadrant q) { return q * nv + v; };
  int next_node = 4 * nv;
  std::map<std::pair<int, Quadrant>, int> terminal;  // (ray id, key quadrant)
  std::vector<std::pair<int, Quadrant>> copies;      // surviving edge copies
  for (int e = 0; e < ne; ++e) {
    auto [q1, q2] = survivors.survivors[e];
    copies.push_back({e, q1});
    copies.push_back({e, q2});
  }

  auto is_ray = [&](int e) { return e >= static_cast<int>(c.edges.size()); };
  auto ray_of = [&](int e) { return c.rays[e - c.edges.size()]; };
  auto glues = [&](const Vec2i& d) { return d.x < 0 || d.y < 0; };

  Dsu dsu(next_node + 2 * ne * 4);
  std::vector<int> copy_node_a(copies.size()), copy_node_b(copies.size());
  for (size_t k = 0; k < copies.size(); ++k) {
    auto [e, q] = copies[k];
    if (!is_ray(e)) {
      const CurveEdge& ce = c.edges[e];
      copy_node_a[k] = vertex_node(ce.v1, q);
      copy_node_b[k] = vertex_node(ce.v2, q);
    } else {
      const CurveRay& r = ray_of(e);
      copy_node_a[k] = vertex_node(r.base, q);
      Quadrant key = q;
      if (glues(r.dir)) key = std::min(q, paired_quadrant(q, r.dir));
      auto [it, inserted] = terminal.emplace(std::make_pair(e, key), next_node);
      if (inserted) ++next_node;
      copy_node_b[k] = it->second;
    }
    dsu.unite(copy_node_a[k], copy_node_b[k]);
  }

  // group copies into components
  std::map<int, int> comp_of_root;
  std::vector<std::vector<size_t>> members;
  for (size_t k = 0; k < copies.size(); ++k) {
    int root = dsu.find(copy_node_a[k]);
    auto [it, inserted] = comp_of_root.emplace(root, static_cast<int>(members.size()));
    if (inserted) members.push_back({});
    members[it->second].push_back(k);
  }

  stats.components = static_cast<int>(members.size());
  stats.details.resize(members.size());
  std::vector<std::vector<EmbeddedSegment>> polylines(members.size());

  for (size_t ci = 0; ci < members.size(); ++ci) {
    ComponentInfo& info = stats.details[ci];
    std::set<Quadrant> quads;
    info.bounded = true;
    for (size_t k : members[ci]) {
      auto [e, q] = copies[k];
      quads.insert(q);
      if (!is_ray(e)) {
        const CurveEdge& ce = c.edges[e];
        polylines[ci].push_back({reflect(emb(c.vertices[ce.v1].pos), q),
                                 reflect(emb(c.vertices[ce.v2].pos), q)});
        continue;
      }
      const CurveRay& r = ray_of(e);
      QPoint base = emb(c.vertices[r.base].pos);
      if (glues(r.dir)) {
        polylines[ci].push_back({reflect(base, q), reflect(axis_point(base, r.dir), q)});
      } else {
        info.bounded = false;
        ++info.unbounded_ends;
      }
    }
    info.quadrants.assign(quads.begin(), quads.end());
    if (info.bounded) ++stats.bounded;
    else ++stats.unbounded;
  }

  // nesting forest of the bounded components by containment: the parent of a
  // component is its container of maximal depth
  auto probe_of = [&](size_t a) -> std::optional<QPoint> {
    for (const auto& seg : polylines[a]) {
      QPoint mid{(seg.a.x + seg.b.x) / 2, (seg.a.y + seg.b.y) / 2};
      bool clean = true;
      for (size_t b = 0; b < members.size() && clean; ++b) {
        if (b == a) continue;
        for (const auto& sb : polylines[b])
          if (on_segment(mid, sb)) {
            clean = false;
            break;
          }
      }
      if (clean) return mid;
    }
    return std::nullopt;
  };

  std::vector<std::optional<QPoint>> probes(members.size());
  std::vector<int> depth(members.size(), 0);
  for (size_t a = 0; a < members.size(); ++a) {
    if (!stats.details[a].bounded) continue;
    probes[a] = probe_of(a);
    if (!probes[a]) continue;
    for (size_t b = 0; b < members.size(); ++b)
      if (b != a && stats.details[b].bounded && point_inside(*probes[a], polylines[b]))
        ++depth[a];
  }
  for (size_t a = 0; a < members.size(); ++a) {
    if (!stats.details[a].bounded || !probes[a]) continue;
    int parent = -1;
    for (size_t b = 0; b < members.size(); ++b) {
      if (b == a || !stats.details[b].bounded) continue;
      if (!point_inside(*probes[a], polylines[b])) continue;
      if (parent < 0 || depth[b] > depth[parent]) parent = static_cast<int>(b);
    }
    stats.details[a].parent = parent;
  }
  return stats;
}

}  // namespace tropica
