#pragma once

#include "tropica/rational.hpp"

namespace tropica {

// Element a + b*eps of Q[eps]/(eps^2) with eps a positive infinitesimal.
// The lexicographic order (constant part first) agrees with substituting any
// sufficiently small positive rational for eps, which is exactly what the
// stable-intersection translation needs: no "small enough number" guesswork.
struct Eps {
  Rational a;  // constant part
  Rational b;  // eps coefficient

  Eps() : a(0), b(0) {}
  Eps(const Rational& c) : a(c), b(0) {}  // NOLINT: implicit by design
  Eps(long c) : a(c), b(0) {}             // NOLINT
  Eps(const Rational& c, const Rational& s) : a(c), b(s) {}

  friend Eps operator+(const Eps& u, const Eps& v) { return {u.a + v.a, u.b + v.b}; }
  friend Eps operator-(const Eps& u, const Eps& v) { return {u.a - v.a, u.b - v.b}; }
  friend Eps operator-(const Eps& u) { return {-u.a, -u.b}; }
  // product truncates the eps^2 term
  friend Eps operator*(const Eps& u, const Eps& v) {
    return {u.a * v.a, u.a * v.b + u.b * v.a};
  }
  // division by a pure scalar (all the intersection solver requires)
  friend Eps operator/(const Eps& u, const Rational& s) { return {u.a / s, u.b / s}; }

  friend bool operator==(const Eps&, const Eps&) = default;
  friend bool operator<(const Eps& u, const Eps& v) {
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  }
  friend bool operator<=(const Eps& u, const Eps& v) { return u < v || u == v; }
  friend bool operator>(const Eps& u, const Eps& v) { return v < u; }
  friend bool operator>=(const Eps& u, const Eps& v) { return v <= u; }
};

}  // namespace tropica
