#pragma once

#include <string>

#include "tropica/rational.hpp"

namespace tropica {

struct DequantResult {
  double value = 0.0;      // log_t(t^x + t^y), rounded to double
  std::string decimal;     // the same value with `digits` significant digits
  Rational lower;          // max(x, y): the exact lower bound
  double bound = 0.0;      // log_t 2: width of the sandwich
};

// "x +_t y" = log_t(t^x + t^y), evaluated as
//   max(x,y) + log_t(1 + t^{-|x-y|})
// so the large powers never materialize. The only inexact operation in the
// kernel; `digits` is the requested number of correct decimal digits. The
// chain is six correctly-rounded operations at digits*log2(10)+48 bits of
// working precision, so the accumulated error stays far below the last
// requested digit. Requires t > 1 and 1 <= digits <= 10^4.
DequantResult dequant_add(const Rational& x, const Rational& y,
                          const Rational& t, int digits = 17);

}  // namespace tropica
