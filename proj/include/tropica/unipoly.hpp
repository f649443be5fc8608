#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tropica/tropical.hpp"

namespace tropica {

// Univariate tropical polynomial "sum a_i x^i" = max_i(a_i + i*x).
// Invariants: at least one finite coefficient; Bottom entries are pruned.
class UniPoly {
 public:
  static UniPoly from_terms(
      const std::vector<std::pair<unsigned, TropicalNumber>>& terms);

  const std::map<unsigned, TropicalNumber>& terms() const { return coeffs_; }
  unsigned degree() const { return coeffs_.rbegin()->first; }
  unsigned min_exponent() const { return coeffs_.begin()->first; }
  TropicalNumber coeff(unsigned i) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  UniPoly() = default;
  std::map<unsigned, TropicalNumber> coeffs_;
};

struct RootEntry {
  TropicalNumber root;
  unsigned order;

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

// sorted ascending, the -inf root (if any) first; roots pairwise distinct;
// orders sum to the degree
using RootList = std::vector<RootEntry>;

struct Factorization {
  TropicalNumber leading;  // a_d of the canonical polynomial
  RootList roots;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// max_i(a_i + i*x); evaluation at Bottom yields a_0 (Bottom if absent)
TropicalNumber eval_uni(const UniPoly& p, const TropicalNumber& x);

// The unique maximal polynomial defining the same function: coefficients are
// replaced by the least concave majorant of the points (i, a_i), evaluated at
// every integer between the minimum and maximum exponent.
UniPoly canonicalize(const UniPoly& p);

// Corners of the piecewise-linear graph, with order = slope difference across
// the corner. The root at -inf has order min_exponent(): a degree-d
// polynomial gets exactly d roots only if the monomial deficit at the low end
// is counted, via P = "x^m Q(x)" and the root of "x" being -inf.
RootList roots_uni(const UniPoly& p);

Factorization factor_uni(const UniPoly& p);

// Tropical product of linear factors "(x + r)^k" (factor "x" for the -inf
// root), expanded by max-plus convolution. Output is concave (canonical).
// Requires all orders positive.
UniPoly expand_linear_factors(const TropicalNumber& leading,
                              const RootList& roots);

// max-plus convolution: c_n = max_{i+j=n}(a_i + b_j)
UniPoly mul_uni(const UniPoly& a, const UniPoly& b);

}  // namespace tropica
