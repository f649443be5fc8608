#include "tropica/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tropica/error.hpp"

namespace tropica {

namespace {

std::string fmt(double v) {
  char buf[48];
  if (v == 0.0) v = 0.0;  // normalize -0
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  double w() const { return x1 - x0; }
  double h() const { return y1 - y0; }
  void grow(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
};

// collects drawing commands and emits them in a y-flipped viewBox
class Canvas {
 public:
  Canvas(const Box& view) : view_(view) {
    if (!(view_.w() > 0) || !(view_.h() > 0))
      throw Error(ErrorKind::Domain, "viewport has zero area");
    stroke_ = std::max(view_.w(), view_.h()) / 240.0;
  }

  double base_stroke() const { return stroke_; }
  const Box& view() const { return view_; }

  void line(double ax, double ay, double bx, double by, const char* color,
            double width) {
    body_ << "<line x1=\"" << fmt(ax) << "\" y1=\"" << fmt(-ay) << "\" x2=\""
          << fmt(bx) << "\" y2=\"" << fmt(-by) << "\" stroke=\"" << color
          << "\" stroke-width=\"" << fmt(width) << "\" stroke-linecap=\"round\"/>\n";
  }

  void circle(double cx, double cy, double r, const char* fill) {
    body_ << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(-cy) << "\" r=\""
          << fmt(r) << "\" fill=\"" << fill << "\"/>\n";
  }

  void text(double x, double y, const std::string& s, double size) {
    body_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(-y) << "\" font-size=\""
          << fmt(size) << "\" font-family=\"monospace\" fill=\"#333333\">" << s
          << "</text>\n";
  }

  // clips a parametric ray/segment to the viewport; returns false if outside
  bool clip(double ax, double ay, double dx, double dy, double tmax,
            double& t0, double& t1) const {
    t0 = 0.0;
    t1 = tmax;
    auto pass = [&](double p, double q) {
      if (p == 0.0) return q >= 0.0;
      double r = q / p;
      if (p < 0) {
        if (r > t1) return false;
        if (r > t0) t0 = r;
      } else {
        if (r < t0) return false;
        if (r < t1) t1 = r;
      }
      return true;
    };
    return pass(-dx, ax - view_.x0) && pass(dx, view_.x1 - ax) &&
           pass(-dy, ay - view_.y0) && pass(dy, view_.y1 - ay) && t0 <= t1;
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\""
        << fmt(640.0 * view_.h() / view_.w()) << "\" viewBox=\"" << fmt(view_.x0)
        << " " << fmt(-view_.y1) << " " << fmt(view_.w()) << " " << fmt(view_.h())
        << "\">\n";
    out << "<rect x=\"" << fmt(view_.x0) << "\" y=\"" << fmt(-view_.y1)
        << "\" width=\"" << fmt(view_.w()) << "\" height=\"" << fmt(view_.h())
        << "\" fill=\"#ffffff\"/>\n";
    out << body_.str();
    out << "</svg>\n";
    return out.str();
  }

 private:
  Box view_;
  double stroke_;
  std::ostringstream body_;
};

Box auto_view(const Box& bbox, double pad_fraction) {
  Box v = bbox;
  double extent = std::max(v.w(), v.h());
  double pad = extent * pad_fraction;
  if (v.w() == 0 || v.h() == 0) pad = std::max(pad, 1.0);
  v.x0 -= pad;
  v.y0 -= pad;
  v.x1 += pad;
  v.y1 += pad;
  return v;
}

Box resolve_view(const RenderSpec& spec, const std::optional<Box>& bbox) {
  if (spec.viewport) {
    const auto& vp = *spec.viewport;
    Box v{vp[0], vp[1], vp[2], vp[3]};
    if (!(v.w() > 0) || !(v.h() > 0))
      throw Error(ErrorKind::Domain, "viewport has zero area");
    return v;
  }
  if (!bbox)
    throw Error(ErrorKind::Domain,
                "empty scene needs an explicit viewport to render");
  return auto_view(*bbox, spec.pad_fraction);
}

std::optional<Box> vertex_bbox(const TropicalCurve& c) {
  if (c.vertices.empty()) return std::nullopt;
  Box b{rational_to_double(c.vertices[0].pos.x), rational_to_double(c.vertices[0].pos.y),
        rational_to_double(c.vertices[0].pos.x), rational_to_double(c.vertices[0].pos.y)};
  for (const CurveVertex& v : c.vertices)
    b.grow(rational_to_double(v.pos.x), rational_to_double(v.pos.y));
  return b;
}

void draw_curve_into(Canvas& canvas, const TropicalCurve& c, const char* color,
                     bool labels, double width_scale = 1.0) {
  double base = canvas.base_stroke() * width_scale;
  double label_size = std::max(canvas.view().w(), canvas.view().h()) / 28.0;
  for (const CurveEdge& e : c.edges) {
    double ax = rational_to_double(c.vertices[e.v1].pos.x);
    double ay = rational_to_double(c.vertices[e.v1].pos.y);
    double bx = rational_to_double(c.vertices[e.v2].pos.x);
    double by = rational_to_double(c.vertices[e.v2].pos.y);
    canvas.line(ax, ay, bx, by, color, base * static_cast<double>(e.weight));
    if (labels && e.weight >= 2)
      canvas.text((ax + bx) / 2 + label_size / 3, (ay + by) / 2 + label_size / 3,
                  std::to_string(e.weight), label_size);
  }
  for (const CurveRay& r : c.rays) {
    double ax = rational_to_double(c.vertices[r.base].pos.x);
    double ay = rational_to_double(c.vertices[r.base].pos.y);
    double dx = static_cast<double>(r.dir.x), dy = static_cast<double>(r.dir.y);
    double t0, t1;
    if (!canvas.clip(ax, ay, dx, dy, 1e18, t0, t1)) continue;
    canvas.line(ax + t0 * dx, ay + t0 * dy, ax + t1 * dx, ay + t1 * dy, color,
                base * static_cast<double>(r.weight));
    if (labels && r.weight >= 2) {
      double mx = ax + (t0 + t1) / 2 * dx, my = ay + (t0 + t1) / 2 * dy;
      canvas.text(mx + label_size / 3, my + label_size / 3,
                  std::to_string(r.weight), label_size);
    }
  }
  for (const CurveVertex& v : c.vertices)
    canvas.circle(rational_to_double(v.pos.x), rational_to_double(v.pos.y),
                  base * 1.2, color);
}

}  // namespace

std::string svg_curve(const TropicalCurve& c, const RenderSpec& spec) {
  Canvas canvas(resolve_view(spec, vertex_bbox(c)));
  draw_curve_into(canvas, c, "#1f4e9c", spec.labels);
  return canvas.finish();
}

std::string svg_subdivision(const DualSubdivision& s, const RenderSpec& spec) {
  std::optional<Box> bbox;
  if (!s.newton_polygon.empty()) {
    Box b{static_cast<double>(s.newton_polygon[0].i),
          static_cast<double>(s.newton_polygon[0].j),
          static_cast<double>(s.newton_polygon[0].i),
          static_cast<double>(s.newton_polygon[0].j)};
    for (const IJ& p : s.newton_polygon)
      b.grow(static_cast<double>(p.i), static_cast<double>(p.j));
    bbox = b;
  }
  Canvas canvas(resolve_view(spec, bbox));
  double base = canvas.base_stroke();

  for (const SubEdge& e : s.edges)
    canvas.line(e.a.i, e.a.j, e.b.i, e.b.j, "#1f4e9c", base);
  if (s.dimension == 1)
    for (const SubCell& c : s.cells)
      canvas.line(c.vertices[0].i, c.vertices[0].j, c.vertices[1].i,
                  c.vertices[1].j, "#1f4e9c", base);

  // the lattice, drawn per the usual convention of marking all integer
  // points of the ambient triangle, not only the subdivision vertices
  const Box& v = canvas.view();
  for (long i = static_cast<long>(std::ceil(v.x0)); i <= static_cast<long>(std::floor(v.x1)); ++i)
    for (long j = static_cast<long>(std::ceil(v.y0)); j <= static_cast<long>(std::floor(v.y1)); ++j)
      canvas.circle(static_cast<double>(i), static_cast<double>(j), base * 1.4,
                    "#000000");
  return canvas.finish();
}

std::string svg_patchwork(const TropicalCurve& c, const SurvivorSet& survivors,
                          const RenderSpec& spec) {
  if (c.empty()) {
    Canvas canvas(resolve_view(spec, std::nullopt));
    return canvas.finish();
  }
  // embed the source into the open positive quadrant, as arrangement_stats
  Rational minx = c.vertices[0].pos.x, miny = c.vertices[0].pos.y;
  for (const CurveVertex& v : c.vertices) {
    minx = std::min(minx, v.pos.x);
    miny = std::min(miny, v.pos.y);
  }
  QPoint shift{Rational(1) - minx, Rational(1) - miny};

  TropicalCurve moved = c;
  for (CurveVertex& v : moved.vertices) v.pos = v.pos + shift;
  auto bbox = vertex_bbox(moved);
  Box full{-bbox->x1, -bbox->y1, bbox->x1, bbox->y1};
  double extent = std::max(full.w(), full.h());
  full.x0 -= 0.15 * extent;
  full.y0 -= 0.15 * extent;
  full.x1 += 0.15 * extent;
  full.y1 += 0.15 * extent;

  Canvas canvas(spec.viewport ? resolve_view(spec, std::nullopt) : full);
  double base = canvas.base_stroke();
  canvas.line(canvas.view().x0, 0, canvas.view().x1, 0, "#999999", base / 2);
  canvas.line(0, canvas.view().y0, 0, canvas.view().y1, "#999999", base / 2);

  auto draw_copy = [&](int unified, Quadrant q) {
    auto bits = quadrant_bits(q);
    double sx = bits[0] ? -1.0 : 1.0;
    double sy = bits[1] ? -1.0 : 1.0;
    long long w;
    double ax, ay, bx, by;
    if (unified < static_cast<int>(moved.edges.size())) {
      const CurveEdge& e = moved.edges[unified];
      ax = rational_to_double(moved.vertices[e.v1].pos.x);
      ay = rational_to_double(moved.vertices[e.v1].pos.y);
      bx = rational_to_double(moved.vertices[e.v2].pos.x);
      by = rational_to_double(moved.vertices[e.v2].pos.y);
      w = e.weight;
      canvas.line(sx * ax, sy * ay, sx * bx, sy * by, "#b03030", base * w);
      return;
    }
    const CurveRay& r = moved.rays[unified - moved.edges.size()];
    ax = rational_to_double(moved.vertices[r.base].pos.x);
    ay = rational_to_double(moved.vertices[r.base].pos.y);
    double dx = static_cast<double>(r.dir.x), dy = static_cast<double>(r.dir.y);
    w = r.weight;
    if (r.dir.x < 0 || r.dir.y < 0) {
      // glued copy: stops at its axis point
      double t = 1e18;
      if (r.dir.x < 0) t = std::min(t, ax / -dx);
      if (r.dir.y < 0) t = std::min(t, ay / -dy);
      bx = ax + t * dx;
      by = ay + t * dy;
      canvas.line(sx * ax, sy * ay, sx * bx, sy * by, "#b03030", base * w);
      canvas.circle(sx * bx, sy * by, base * 1.6, "#b03030");
      return;
    }
    double t0, t1;
    if (!canvas.clip(sx * ax, sy * ay, sx * dx, sy * dy, 1e18, t0, t1)) return;
    canvas.line(sx * ax + t0 * sx * dx, sy * ay + t0 * sy * dy,
                sx * ax + t1 * sx * dx, sy * ay + t1 * sy * dy, "#b03030",
                base * w);
  };

  for (size_t e = 0; e < survivors.survivors.size(); ++e) {
    auto [q1, q2] = survivors.survivors[e];
    draw_copy(static_cast<int>(e), q1);
    draw_copy(static_cast<int>(e), q2);
  }
  return canvas.finish();
}

std::string svg_amoeba(const AmoebaSample& sample, const TropicalCurve& c,
                       const RenderSpec& spec) {
  Box w{sample.window[0], sample.window[1], sample.window[2], sample.window[3]};
  Canvas canvas(spec.viewport ? resolve_view(spec, std::nullopt) : auto_view(w, 0.02));
  double base = canvas.base_stroke();
  for (const auto& p : sample.points)
    canvas.circle(p[0], p[1], base * 0.8, "#2e8b57");
  draw_curve_into(canvas, c, "#1f4e9c", spec.labels, 0.6);
  return canvas.finish();
}

}  // namespace tropica
