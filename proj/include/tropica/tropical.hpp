#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tropica/rational.hpp"

namespace tropica {

// Element of the max-plus semi-field T = Q u {-inf}. Bottom (-inf) is a
// tagged state, never a sentinel rational, so arithmetic cannot silently
// treat it as a finite value. Values are immutable; all operations are
// pure functions.
class TropicalNumber {
 public:
  TropicalNumber(const Rational& v) : v_(v) {}  // NOLINT: implicit by design
  TropicalNumber(long v) : v_(Rational(v)) {}   // NOLINT
  static TropicalNumber bottom() { return TropicalNumber(); }

  bool is_bottom() const { return !v_.has_value(); }
  // precondition: !is_bottom()
  const Rational& finite() const { return *v_; }

  // total order with Bottom minimal
  friend bool operator==(const TropicalNumber& a, const TropicalNumber& b) {
    if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
    return *a.v_ == *b.v_;
  }
  friend bool operator<(const TropicalNumber& a, const TropicalNumber& b) {
    if (a.is_bottom()) return !b.is_bottom();
    if (b.is_bottom()) return false;
    return *a.v_ < *b.v_;
  }
  friend bool operator<=(const TropicalNumber& a, const TropicalNumber& b) {
    return a < b || a == b;
  }
  friend bool operator>(const TropicalNumber& a, const TropicalNumber& b) {
    return b < a;
  }
  friend bool operator>=(const TropicalNumber& a, const TropicalNumber& b) {
    return b <= a;
  }
  friend bool operator!=(const TropicalNumber& a, const TropicalNumber& b) {
    return !(a == b);
  }

 private:
  TropicalNumber() = default;
  std::optional<Rational> v_;
};

// "x + y" = max(x, y)
TropicalNumber trop_add(const TropicalNumber& x, const TropicalNumber& y);
// "x * y" = x + y; Bottom absorbs
TropicalNumber trop_mul(const TropicalNumber& x, const TropicalNumber& y);
// "x^k" = k*x; x^0 = 0 (the multiplicative identity), including Bottom^0
TropicalNumber trop_pow(const TropicalNumber& x, unsigned k);

// "-inf" | "p/q" | "p"; decimals accepted on input
TropicalNumber parse_tropical(const std::string& text);
std::string tropical_to_string(const TropicalNumber& v);

// Value of a hyperfield sum: either a single element or the full down-set
// {z <= upper}. Restricted to the two shapes binary hyper-addition can
// produce; n-ary sums are folded pairwise and normalized.
class DownSet {
 public:
  enum class Kind { Singleton, ClosedRay };

  static DownSet singleton(const TropicalNumber& v) {
    return DownSet(Kind::Singleton, v);
  }
  // normalizes ClosedRay(-inf) == {-inf} to a Singleton
  static DownSet closed_ray(const TropicalNumber& upper) {
    if (upper.is_bottom()) return singleton(upper);
    return DownSet(Kind::ClosedRay, upper);
  }

  Kind kind() const { return kind_; }
  bool is_ray() const { return kind_ == Kind::ClosedRay; }
  // the singleton value, or the ray's upper bound
  const TropicalNumber& value() const { return v_; }

  bool contains(const TropicalNumber& z) const {
    return is_ray() ? z <= v_ : z == v_;
  }
  bool contains_bottom() const {
    return is_ray() || v_.is_bottom();
  }

  friend bool operator==(const DownSet& a, const DownSet& b) {
    return a.kind_ == b.kind_ && a.v_ == b.v_;
  }

 private:
  DownSet(Kind k, TropicalNumber v) : kind_(k), v_(v) {}
  Kind kind_;
  TropicalNumber v_;
};

// x (+) y over the tropical hyperfield: {max} if x != y, {z <= x} if x = y
DownSet hyper_add(const TropicalNumber& x, const TropicalNumber& y);
// folds one more summand into an already-normalized hyperfield sum
DownSet hyper_fold(const DownSet& acc, const TropicalNumber& v);

enum class Sign : int { Minus = -1, Zero = 0, Plus = 1 };

Sign sign_mul(Sign a, Sign b);

// subset of {0,+1,-1}, from the sign hyperfield's addition table
struct SignSet {
  bool has_zero = false;
  bool has_plus = false;
  bool has_minus = false;

  bool contains(Sign s) const {
    switch (s) {
      case Sign::Zero: return has_zero;
      case Sign::Plus: return has_plus;
      case Sign::Minus: return has_minus;
    }
    return false;
  }
  friend bool operator==(const SignSet&, const SignSet&) = default;
};

SignSet sign_hyper_add(Sign a, Sign b);

}  // namespace tropica
