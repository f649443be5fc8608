#pragma once

#include <cstdlib>
#include <numeric>

#include "tropica/rational.hpp"

namespace tropica {

// Integer direction vector (edge slopes are rational, so primitive integer
// directions exist and are unique up to sign).
struct Vec2i {
  long x = 0;
  long y = 0;

  friend bool operator==(const Vec2i&, const Vec2i&) = default;
  friend Vec2i operator-(const Vec2i& v) { return {-v.x, -v.y}; }
};

inline long cross(const Vec2i& a, const Vec2i& b) {
  return a.x * b.y - a.y * b.x;
}

inline bool is_primitive(const Vec2i& v) {
  if (v.x == 0 && v.y == 0) return false;
  return std::gcd(std::abs(v.x), std::abs(v.y)) == 1;
}

// lattice length of v, i.e. one less than the number of lattice points on
// the segment 0..v
inline long lattice_gcd(const Vec2i& v) {
  return std::gcd(std::abs(v.x), std::abs(v.y));
}

inline Vec2i primitive(const Vec2i& v) {
  long g = lattice_gcd(v);
  return g == 0 ? Vec2i{0, 0} : Vec2i{v.x / g, v.y / g};
}

// rotation by +pi/2
inline Vec2i rot90(const Vec2i& v) { return {-v.y, v.x}; }

inline bool parallel(const Vec2i& a, const Vec2i& b) {
  return cross(a, b) == 0;
}

// 2D point over an ordered exact scalar (Rational, or Q[eps]/(eps^2))
template <class T>
struct Pt {
  T x{};
  T y{};

  friend bool operator==(const Pt&, const Pt&) = default;
  friend Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
};

using QPoint = Pt<Rational>;

inline bool lex_less(const QPoint& a, const QPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

template <class T>
Pt<T> scaled(const Vec2i& v, const T& s) {
  return {s * T(v.x), s * T(v.y)};
}

}  // namespace tropica
