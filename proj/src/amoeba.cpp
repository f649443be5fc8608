#include "tropica/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "tropica/error.hpp"

namespace tropica {

BiPoly CoefficientFamily::induced_tropical() const {
  std::vector<std::pair<IJ, TropicalNumber>> out;
  for (const FamilyTerm& ft : terms) {
    Rational top = ft.series[0].r;
    for (const SeriesTerm& st : ft.series) top = std::max(top, st.r);
    out.emplace_back(ft.ij, TropicalNumber(top));
  }
  return BiPoly::from_terms(out);
}

int CoefficientFamily::degree_y() const {
  int d = 0;
  for (const FamilyTerm& ft : terms) d = std::max(d, ft.ij.j);
  return d;
}

void validate_family(const CoefficientFamily& f) {
  if (f.terms.empty())
    throw Error(ErrorKind::Domain, "coefficient family has no terms");
  std::set<IJ> seen;
  for (const FamilyTerm& ft : f.terms) {
    if (!seen.insert(ft.ij).second)
      throw Error(ErrorKind::Parse, "duplicate exponent pair in family");
    if (ft.series.empty())
      throw Error(ErrorKind::Domain, "empty coefficient series");
    std::set<Rational> rs;
    const SeriesTerm* top = &ft.series[0];
    for (const SeriesTerm& st : ft.series) {
      if (!rs.insert(st.r).second)
        throw Error(ErrorKind::Parse, "duplicate exponent in coefficient series");
      if (st.r > top->r) top = &st;
    }
    if (top->beta_re == 0 && top->beta_im == 0)
      throw Error(ErrorKind::Domain, "beta at the top exponent must be nonzero");
  }
}

std::vector<std::array<double, 2>> log_map(
    const std::vector<std::array<std::complex<double>, 2>>& points, double t) {
  if (!(t > 1.0))
    throw Error(ErrorKind::Domain, "log_map requires t > 1");
  double lnt = std::log(t);
  std::vector<std::array<double, 2>> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p[0] == std::complex<double>(0.0) || p[1] == std::complex<double>(0.0))
      throw Error(ErrorKind::Domain, "log_map point has a zero coordinate");
    out.push_back({std::log(std::abs(p[0])) / lnt, std::log(std::abs(p[1])) / lnt});
  }
  return out;
}

namespace {

using Cx = std::complex<double>;

// alpha_{i,j}(t) in doubles
Cx series_at(const FamilyTerm& ft, double t) {
  Cx acc(0.0, 0.0);
  for (const SeriesTerm& st : ft.series) {
    double scale = std::pow(t, rational_to_double(st.r));
    acc += Cx(rational_to_double(st.beta_re), rational_to_double(st.beta_im)) * scale;
  }
  return acc;
}

// roots of c2 y^2 + c1 y + c0, numerically stable complex form
std::vector<Cx> y_roots(const Cx& c2, const Cx& c1, const Cx& c0) {
  if (std::abs(c2) == 0.0) {
    if (std::abs(c1) == 0.0) return {};
    return {-c0 / c1};
  }
  Cx disc = c1 * c1 - 4.0 * c2 * c0;
  Cx s = std::sqrt(disc);
  if (std::real(std::conj(c1) * s) < 0.0) s = -s;
  Cx q = -0.5 * (c1 + s);
  std::vector<Cx> roots;
  if (std::abs(q) == 0.0) {
    roots.push_back(Cx(0.0));
    roots.push_back(-c1 / c2);
  } else {
    roots.push_back(q / c2);
    roots.push_back(c0 / q);
  }
  return roots;
}

std::array<double, 4> curve_window(const TropicalCurve& c, double pad) {
  if (c.vertices.empty()) return {-pad, -pad, pad, pad};
  double x0 = rational_to_double(c.vertices[0].pos.x), x1 = x0;
  double y0 = rational_to_double(c.vertices[0].pos.y), y1 = y0;
  for (const CurveVertex& v : c.vertices) {
    double x = rational_to_double(v.pos.x), y = rational_to_double(v.pos.y);
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  return {x0 - pad, y0 - pad, x1 + pad, y1 + pad};
}

double point_segment_distance(double px, double py, double ax, double ay,
                              double bx, double by, bool unbounded) {
  double dx = bx - ax, dy = by - ay;
  double len2 = dx * dx + dy * dy;
  double s = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  s = std::max(s, 0.0);
  if (!unbounded) s = std::min(s, 1.0);
  double qx = ax + s * dx, qy = ay + s * dy;
  return std::hypot(px - qx, py - qy);
}

}  // namespace

double distance_to_curve(const TropicalCurve& c, double x, double y) {
  double best = std::numeric_limits<double>::infinity();
  for (const CurveEdge& e : c.edges) {
    const QPoint& a = c.vertices[e.v1].pos;
    const QPoint& b = c.vertices[e.v2].pos;
    best = std::min(best, point_segment_distance(
                              x, y, rational_to_double(a.x), rational_to_double(a.y),
                              rational_to_double(b.x), rational_to_double(b.y), false));
  }
  for (const CurveRay& r : c.rays) {
    const QPoint& a = c.vertices[r.base].pos;
    double ax = rational_to_double(a.x), ay = rational_to_double(a.y);
    best = std::min(best, point_segment_distance(x, y, ax, ay,
                                                 ax + static_cast<double>(r.dir.x),
                                                 ay + static_cast<double>(r.dir.y), true));
  }
  return best;
}

AmoebaSample sample_amoeba(const CoefficientFamily& family, const Rational& t,
                           const GridSpec& grid) {
  validate_family(family);
  if (family.degree_y() > 2)
    throw Error(ErrorKind::Unsupported,
                "sampling solves for y in closed form; degree in y must be <= 2");
  if (t <= 1)
    throw Error(ErrorKind::Domain, "sample_amoeba requires t > 1");
  if (grid.moduli < 1 || grid.phases < 1)
    throw Error(ErrorKind::InvalidArgument, "grid must have positive resolution");

  TropicalCurve curve = tropical_curve(family.induced_tropical());

  AmoebaSample sample;
  sample.t = rational_to_double(t);
  sample.grid = grid;
  sample.window = curve_window(curve, grid.pad);

  double lnt = std::log(sample.t);
  double u0 = sample.window[0], u1 = sample.window[2];

  // per-term alpha(t), fixed over the grid
  std::vector<Cx> alpha(family.terms.size());
  for (size_t k = 0; k < family.terms.size(); ++k)
    alpha[k] = series_at(family.terms[k], sample.t);

  const double two_pi = 2.0 * 3.14159265358979323846;
  for (int mu = 0; mu < grid.moduli; ++mu) {
    double u = grid.moduli == 1 ? (u0 + u1) / 2
                                : u0 + (u1 - u0) * mu / (grid.moduli - 1);
    double mod = std::exp(u * lnt);  // t^u
    for (int ph = 0; ph < grid.phases; ++ph) {
      double phi = two_pi * ph / grid.phases;
      Cx x = std::polar(mod, phi);

      Cx c[3] = {Cx(0.0), Cx(0.0), Cx(0.0)};
      for (size_t k = 0; k < family.terms.size(); ++k) {
        const IJ& ij = family.terms[k].ij;
        c[ij.j] += alpha[k] * std::pow(x, ij.i);
      }
      for (Cx y : y_roots(c[2], c[1], c[0])) {
        if (y == Cx(0.0)) {
          ++sample.rejected;
          continue;
        }
        // residual check against the scaled monomial magnitude
        Cx value(0.0);
        double max_mono = 0.0;
        for (size_t k = 0; k < family.terms.size(); ++k) {
          const IJ& ij = family.terms[k].ij;
          Cx mono = alpha[k] * std::pow(x, ij.i) * std::pow(y, ij.j);
          value += mono;
          max_mono = std::max(max_mono, std::abs(mono));
        }
        double residual = std::abs(value) / (1.0 + max_mono);
        if (residual < sample.residual_tol) {
          sample.points.push_back(
              {std::log(std::abs(x)) / lnt, std::log(std::abs(y)) / lnt});
          sample.max_kept_residual = std::max(sample.max_kept_residual, residual);
          ++sample.kept;
        } else {
          ++sample.rejected;
        }
      }
    }
  }
  return sample;
}

namespace {

// pieces of the curve clipped to the window, as dense net points
std::vector<std::array<double, 2>> curve_net(const TropicalCurve& c,
                                             const std::array<double, 4>& w,
                                             double step) {
  std::vector<std::array<double, 2>> net;
  auto clip_emit = [&](double ax, double ay, double bx, double by) {
    // Liang-Barsky
    double t0 = 0.0, t1 = 1.0, dx = bx - ax, dy = by - ay;
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
    if (!pass(-dx, ax - w[0]) || !pass(dx, w[2] - ax) || !pass(-dy, ay - w[1]) ||
        !pass(dy, w[3] - ay))
      return;
    double len = std::hypot(dx, dy) * (t1 - t0);
    int n = std::max(2, static_cast<int>(len / std::max(step, 1e-9)) + 1);
    for (int k = 0; k <= n; ++k) {
      double s = t0 + (t1 - t0) * k / n;
      net.push_back({ax + s * dx, ay + s * dy});
    }
  };

  for (const CurveEdge& e : c.edges) {
    const QPoint& a = c.vertices[e.v1].pos;
    const QPoint& b = c.vertices[e.v2].pos;
    clip_emit(rational_to_double(a.x), rational_to_double(a.y),
              rational_to_double(b.x), rational_to_double(b.y));
  }
  double diag = std::hypot(w[2] - w[0], w[3] - w[1]);
  for (const CurveRay& r : c.rays) {
    const QPoint& a = c.vertices[r.base].pos;
    double ax = rational_to_double(a.x), ay = rational_to_double(a.y);
    double norm = std::hypot(static_cast<double>(r.dir.x),
                             static_cast<double>(r.dir.y));
    // long enough to leave the window from anywhere inside it
    double reach = 2.0 * diag / norm + 1.0;
    clip_emit(ax, ay, ax + reach * r.dir.x, ay + reach * r.dir.y);
  }
  return net;
}

}  // namespace

ConvergenceReport convergence_report(const CoefficientFamily& family,
                                     const std::vector<Rational>& t_values,
                                     const GridSpec& grid) {
  validate_family(family);
  if (t_values.empty())
    throw Error(ErrorKind::InvalidArgument, "no t values given");

  TropicalCurve curve = tropical_curve(family.induced_tropical());
  if (curve.empty())
    throw Error(ErrorKind::Domain,
                "the induced tropical curve is empty (single monomial); "
                "there is no limit set to measure distances against");

  ConvergenceReport rep;
  rep.window = curve_window(curve, grid.pad);
  double diag = std::hypot(rep.window[2] - rep.window[0], rep.window[3] - rep.window[1]);
  auto net = curve_net(curve, rep.window, diag / 512.0);

  for (const Rational& t : t_values) {
    AmoebaSample s = sample_amoeba(family, t, grid);
    double dev = 0.0;
    for (const auto& p : s.points)
      dev = std::max(dev, distance_to_curve(curve, p[0], p[1]));
    double cov = 0.0;
    for (const auto& q : net) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& p : s.points)
        nearest = std::min(nearest, std::hypot(p[0] - q[0], p[1] - q[1]));
      cov = std::max(cov, nearest);
    }
    rep.t_values.push_back(s.t);
    rep.dev.push_back(dev);
    rep.cov.push_back(cov);
  }

  rep.dev_strictly_decreasing = true;
  for (size_t k = 0; k + 1 < rep.dev.size(); ++k)
    if (!(rep.dev[k + 1] < rep.dev[k])) rep.dev_strictly_decreasing = false;

  double num = 0.0, den = 0.0;
  for (size_t k = 0; k < rep.dev.size(); ++k) {
    double inv = 1.0 / std::log(rep.t_values[k]);
    num += rep.dev[k] * inv;
    den += inv * inv;
  }
  rep.fit_c_over_ln_t = den > 0 ? num / den : 0.0;
  return rep;
}

}  // namespace tropica
