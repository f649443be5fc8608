#pragma once

#include <gmpxx.h>

#include <string>

namespace tropica {

// Exact rational scalar used throughout the kernel. Every geometric
// predicate downstream (hull membership, segment intersection) relies on
// this being exact; floating point appears only in the amoeba module and
// in dequant_add.
using Rational = mpq_class;

// Accepts "p", "p/q" and plain decimals like "-1.5" (normalized to -3/2).
Rational parse_rational(const std::string& text);

// Canonical form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
std::string rational_to_string(const Rational& q);

inline double rational_to_double(const Rational& q) { return q.get_d(); }

}  // namespace tropica
