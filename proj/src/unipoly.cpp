#include "tropica/unipoly.hpp"

#include <cassert>

#include "tropica/error.hpp"

namespace tropica {

namespace {

struct HullPoint {
  unsigned i;
  Rational a;
};

// Strict upper hull of (i, a_i): vertices only, collinear middles dropped.
// Slopes between consecutive vertices are strictly decreasing.
std::vector<HullPoint> upper_hull(const UniPoly& p) {
  std::vector<HullPoint> hull;
  for (const auto& [i, a] : p.terms()) {
    HullPoint q{i, a.finite()};
    while (hull.size() >= 2) {
      const HullPoint& s = hull[hull.size() - 2];
      const HullPoint& m = hull[hull.size() - 1];
      // keep m only if it lies strictly above the chord s..q
      Rational lhs = (m.a - s.a) * Rational(static_cast<long>(q.i - s.i));
      Rational rhs = (q.a - s.a) * Rational(static_cast<long>(m.i - s.i));
      if (lhs > rhs) break;
      hull.pop_back();
    }
    hull.push_back(q);
  }
  return hull;
}

}  // namespace

UniPoly UniPoly::from_terms(
    const std::vector<std::pair<unsigned, TropicalNumber>>& terms) {
  UniPoly p;
  for (const auto& [i, c] : terms) {
    if (c.is_bottom()) continue;
    auto [it, inserted] = p.coeffs_.emplace(i, c);
    if (!inserted)
      throw Error(ErrorKind::Parse, "duplicate exponent in polynomial");
  }
  if (p.coeffs_.empty())
    throw Error(ErrorKind::Domain, "polynomial has no finite coefficient");
  return p;
}

TropicalNumber UniPoly::coeff(unsigned i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? TropicalNumber::bottom() : it->second;
}

TropicalNumber eval_uni(const UniPoly& p, const TropicalNumber& x) {
  if (x.is_bottom()) return p.coeff(0);
  TropicalNumber best = TropicalNumber::bottom();
  for (const auto& [i, a] : p.terms()) {
    TropicalNumber v(a.finite() + Rational(i) * x.finite());
    best = trop_add(best, v);
  }
  return best;
}

UniPoly canonicalize(const UniPoly& p) {
  auto hull = upper_hull(p);
  std::vector<std::pair<unsigned, TropicalNumber>> terms;
  size_t seg = 0;
  for (unsigned i = p.min_exponent(); i <= p.degree(); ++i) {
    while (seg + 1 < hull.size() && hull[seg + 1].i <= i) ++seg;
    if (hull[seg].i == i) {
      terms.emplace_back(i, TropicalNumber(hull[seg].a));
    } else {
      const HullPoint& l = hull[seg];
      const HullPoint& r = hull[seg + 1];
      Rational v = l.a + (r.a - l.a) * Rational(static_cast<long>(i - l.i)) /
                             Rational(static_cast<long>(r.i - l.i));
      terms.emplace_back(i, TropicalNumber(v));
    }
  }
  return UniPoly::from_terms(terms);
}

RootList roots_uni(const UniPoly& p) {
  auto hull = upper_hull(p);
  RootList roots;
  if (p.min_exponent() > 0)
    roots.push_back({TropicalNumber::bottom(), p.min_exponent()});
  // corner between hull vertices e_j < e_{j+1} sits where the two monomials
  // tie; orders come out in ascending root order because hull slopes decrease
  for (size_t j = 0; j + 1 < hull.size(); ++j) {
    Rational x = (hull[j].a - hull[j + 1].a) /
                 Rational(static_cast<long>(hull[j + 1].i - hull[j].i));
    roots.push_back({TropicalNumber(x), hull[j + 1].i - hull[j].i});
  }
  return roots;
}

Factorization factor_uni(const UniPoly& p) {
  return Factorization{p.coeff(p.degree()), roots_uni(p)};
}

UniPoly mul_uni(const UniPoly& a, const UniPoly& b) {
  std::map<unsigned, TropicalNumber> acc;
  for (const auto& [i, ca] : a.terms())
    for (const auto& [j, cb] : b.terms()) {
      TropicalNumber v = trop_mul(ca, cb);
      auto [it, inserted] = acc.emplace(i + j, v);
      if (!inserted) it->second = trop_add(it->second, v);
    }
  std::vector<std::pair<unsigned, TropicalNumber>> terms(acc.begin(), acc.end());
  return UniPoly::from_terms(terms);
}

UniPoly expand_linear_factors(const TropicalNumber& leading,
                              const RootList& roots) {
  if (leading.is_bottom())
    throw Error(ErrorKind::Domain, "leading coefficient must be finite");
  unsigned shift = 0;
  UniPoly acc = UniPoly::from_terms({{0u, leading}});
  for (const auto& r : roots) {
    if (r.order == 0)
      throw Error(ErrorKind::Domain, "root orders must be positive");
    if (r.root.is_bottom()) {
      shift += r.order;  // factor "x^order"
      continue;
    }
    UniPoly lin = UniPoly::from_terms(
        {{0u, r.root}, {1u, TropicalNumber(Rational(0))}});
    for (unsigned k = 0; k < r.order; ++k) acc = mul_uni(acc, lin);
  }
  if (shift == 0) return acc;
  std::vector<std::pair<unsigned, TropicalNumber>> terms;
  for (const auto& [i, c] : acc.terms()) terms.emplace_back(i + shift, c);
  return UniPoly::from_terms(terms);
}

}  // namespace tropica
