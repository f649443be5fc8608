#pragma once

#include "tropica/curve.hpp"
#include "tropica/tropical.hpp"
#include "tropica/unipoly.hpp"

namespace tropica {

// Hyperfield evaluation of P at x: the pairwise hyper_add-fold of the
// monomial values a_i + i*x, normalized. x_0 is a hyperfield root exactly
// when the result contains the tropical zero -inf, i.e. is a ClosedRay:
// for finite x every monomial value is finite and the ray appears exactly
// when the max is attained at least twice. For x = -inf the monomial values
// can themselves be -inf; the fold's x (+) -inf = {x} rule applies.
DownSet hyper_eval_uni(const UniPoly& p, const TropicalNumber& x);

// The multivalued graph {(x, y) : y in (a+x) (+) b} as a 1-complex: the
// graph of max(a+x, b) grows a vertical downward tail where the function is
// truly multivalued, at x = b-a. Equals the tropical curve of "b+ax+0y".
// Requires a, b finite.
TropicalCurve line_graph_with_tail(const TropicalNumber& a,
                                   const TropicalNumber& b);

}  // namespace tropica
