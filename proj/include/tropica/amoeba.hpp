#pragma once

#include <array>
#include <complex>
#include <vector>

#include "tropica/bipoly.hpp"
#include "tropica/curve.hpp"

namespace tropica {

// alpha_{i,j}(t) = sum_r beta_{i,j,r} t^r with rational exponents and
// complex rational beta; the induced tropical coefficient is max over r.
struct SeriesTerm {
  Rational r;
  Rational beta_re, beta_im;

  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

struct FamilyTerm {
  IJ ij;
  std::vector<SeriesTerm> series;  // nonempty, beta at the top exponent != 0

  friend bool operator==(const FamilyTerm&, const FamilyTerm&) = default;
};

struct CoefficientFamily {
  std::vector<FamilyTerm> terms;

  // the tropical polynomial with a_{i,j} = max of the exponents r
  BiPoly induced_tropical() const;
  int degree_y() const;

  friend bool operator==(const CoefficientFamily&, const CoefficientFamily&) = default;
};

// validates the invariants (nonempty series, distinct exponents, nonzero
// leading beta); throws on violation
void validate_family(const CoefficientFamily& f);

struct GridSpec {
  int moduli = 41;   // |x| = t^u for u uniform over the padded window
  int phases = 64;   // arguments uniform on [0, 2pi)
  double pad = 2.0;  // window = curve bounding box padded by this

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct AmoebaSample {
  double t = 0;
  std::vector<std::array<double, 2>> points;  // (log_t|x|, log_t|y|)
  GridSpec grid;
  std::array<double, 4> window{};  // x0, y0, x1, y1
  double residual_tol = 1e-10;
  double max_kept_residual = 0.0;  // largest relative residual among points
  size_t kept = 0;
  size_t rejected = 0;
};

// coordinate-wise log base t of absolute values; rejects zero coordinates
// (points must lie in (C*)^2) and t <= 1
std::vector<std::array<double, 2>> log_map(
    const std::vector<std::array<std::complex<double>, 2>>& points, double t);

// Samples Log_t of the zero set of P_t: for each x on a log-radial grid the
// y-roots come from the closed-form linear/quadratic solver, which is why
// this laboratory is restricted to deg_y <= 2. Retained points satisfy
// |P_t(x,y)| / (1 + max |monomial|) < residual_tol.
AmoebaSample sample_amoeba(const CoefficientFamily& family, const Rational& t,
                           const GridSpec& grid);

struct ConvergenceReport {
  std::vector<double> t_values;
  // one-sided deviation: max over samples of distance to the tropical curve
  std::vector<double> dev;
  // coverage gap: max over a dense net on the curve (inside the window) of
  // distance to the nearest sample
  std::vector<double> cov;
  bool dev_strictly_decreasing = false;
  double fit_c_over_ln_t = 0.0;  // least-squares C for dev(t) ~ C / ln t
  std::array<double, 4> window{};
};

ConvergenceReport convergence_report(const CoefficientFamily& family,
                                     const std::vector<Rational>& t_values,
                                     const GridSpec& grid);

// Euclidean distance from a point to the curve (segments and full rays),
// evaluated in doubles on the exact curve data
double distance_to_curve(const TropicalCurve& c, double x, double y);

}  // namespace tropica
