#include "tropica/tropical.hpp"

#include "tropica/error.hpp"

namespace tropica {

TropicalNumber trop_add(const TropicalNumber& x, const TropicalNumber& y) {
  return x < y ? y : x;
}

TropicalNumber trop_mul(const TropicalNumber& x, const TropicalNumber& y) {
  if (x.is_bottom() || y.is_bottom()) return TropicalNumber::bottom();
  return TropicalNumber(x.finite() + y.finite());
}

TropicalNumber trop_pow(const TropicalNumber& x, unsigned k) {
  if (k == 0) return TropicalNumber(Rational(0));
  if (x.is_bottom()) return TropicalNumber::bottom();
  return TropicalNumber(Rational(k) * x.finite());
}

TropicalNumber parse_tropical(const std::string& text) {
  if (text == "-inf") return TropicalNumber::bottom();
  return TropicalNumber(parse_rational(text));
}

std::string tropical_to_string(const TropicalNumber& v) {
  if (v.is_bottom()) return "-inf";
  return rational_to_string(v.finite());
}

DownSet hyper_add(const TropicalNumber& x, const TropicalNumber& y) {
  if (x == y) return DownSet::closed_ray(x);
  return DownSet::singleton(trop_add(x, y));
}

DownSet hyper_fold(const DownSet& acc, const TropicalNumber& v) {
  if (!acc.is_ray()) return hyper_add(acc.value(), v);
  // {z <= u} (+) v: elementwise union of z (+) v over z <= u
  if (v > acc.value()) return DownSet::singleton(v);
  return acc;
}

Sign sign_mul(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

SignSet sign_hyper_add(Sign a, Sign b) {
  SignSet out;
  if (a == Sign::Zero && b == Sign::Zero) {
    out.has_zero = true;
  } else if (a == Sign::Zero || b == Sign::Zero) {
    Sign other = (a == Sign::Zero) ? b : a;
    if (other == Sign::Plus) out.has_plus = true;
    else out.has_minus = true;
  } else if (a == b) {
    if (a == Sign::Plus) out.has_plus = true;
    else out.has_minus = true;
  } else {
    out.has_zero = out.has_plus = out.has_minus = true;  // {0, +/-1}
  }
  return out;
}

}  // namespace tropica
