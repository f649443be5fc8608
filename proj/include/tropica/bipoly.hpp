#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "tropica/geometry.hpp"
#include "tropica/tropical.hpp"

namespace tropica {

// exponent pair of a monomial x^i y^j
struct IJ {
  int i = 0;
  int j = 0;

  auto operator<=>(const IJ&) const = default;
};

// Bivariate tropical polynomial "sum a_{i,j} x^i y^j".
// Invariants: at least one finite coefficient; Bottom entries pruned.
class BiPoly {
 public:
  static BiPoly from_terms(
      const std::vector<std::pair<IJ, TropicalNumber>>& terms);

  const std::map<IJ, TropicalNumber>& terms() const { return coeffs_; }
  TropicalNumber coeff(IJ e) const;
  // max of i+j over the support
  int degree() const;
  // the corner monomials a_{0,0}, a_{d,0}, a_{0,d} are all finite
  bool standard_support() const;
  std::vector<IJ> support() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  BiPoly() = default;
  std::map<IJ, TropicalNumber> coeffs_;
};

TropicalNumber eval_bi(const BiPoly& p, const Rational& x, const Rational& y);

// tropical product: max-plus convolution of the coefficient tables
BiPoly trop_mul(const BiPoly& a, const BiPoly& b);

// number of monomials attaining the max at (x, y)
int maximizer_count(const BiPoly& p, const Rational& x, const Rational& y);

}  // namespace tropica
