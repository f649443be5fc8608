#include "tropica/bipoly.hpp"

#include "tropica/error.hpp"

namespace tropica {

BiPoly BiPoly::from_terms(
    const std::vector<std::pair<IJ, TropicalNumber>>& terms) {
  BiPoly p;
  for (const auto& [e, c] : terms) {
    if (e.i < 0 || e.j < 0)
      throw Error(ErrorKind::Parse, "negative exponent");
    if (c.is_bottom()) continue;
    auto [it, inserted] = p.coeffs_.emplace(e, c);
    if (!inserted)
      throw Error(ErrorKind::Parse, "duplicate exponent pair in polynomial");
  }
  if (p.coeffs_.empty())
    throw Error(ErrorKind::Domain, "polynomial has no finite coefficient");
  return p;
}

TropicalNumber BiPoly::coeff(IJ e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? TropicalNumber::bottom() : it->second;
}

int BiPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : coeffs_) d = std::max(d, e.i + e.j);
  return d;
}

bool BiPoly::standard_support() const {
  int d = degree();
  return coeffs_.count({0, 0}) && coeffs_.count({d, 0}) && coeffs_.count({0, d});
}

std::vector<IJ> BiPoly::support() const {
  std::vector<IJ> s;
  s.reserve(coeffs_.size());
  for (const auto& [e, c] : coeffs_) s.push_back(e);
  return s;
}

TropicalNumber eval_bi(const BiPoly& p, const Rational& x, const Rational& y) {
  TropicalNumber best = TropicalNumber::bottom();
  for (const auto& [e, a] : p.terms()) {
    TropicalNumber v(a.finite() + Rational(e.i) * x + Rational(e.j) * y);
    best = trop_add(best, v);
  }
  return best;
}

BiPoly trop_mul(const BiPoly& a, const BiPoly& b) {
  std::map<IJ, TropicalNumber> acc;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      IJ e{ea.i + eb.i, ea.j + eb.j};
      TropicalNumber v = trop_mul(ca, cb);
      auto [it, inserted] = acc.emplace(e, v);
      if (!inserted) it->second = trop_add(it->second, v);
    }
  std::vector<std::pair<IJ, TropicalNumber>> terms(acc.begin(), acc.end());
  return BiPoly::from_terms(terms);
}

int maximizer_count(const BiPoly& p, const Rational& x, const Rational& y) {
  TropicalNumber best = eval_bi(p, x, y);
  int n = 0;
  for (const auto& [e, a] : p.terms()) {
    TropicalNumber v(a.finite() + Rational(e.i) * x + Rational(e.j) * y);
    if (v == best) ++n;
  }
  return n;
}

}  // namespace tropica
