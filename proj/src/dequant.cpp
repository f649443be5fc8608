#include "tropica/dequant.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "tropica/error.hpp"

namespace tropica {

DequantResult dequant_add(const Rational& x, const Rational& y,
                          const Rational& t, int digits) {
  if (t <= 1)
    throw Error(ErrorKind::Domain, "dequant_add requires t > 1");
  if (digits < 1 || digits > 10000)
    throw Error(ErrorKind::InvalidArgument, "precision must be in [1, 10^4]");

  Rational m = std::max(x, y);
  Rational d = std::max(x, y) - std::min(x, y);  // |x - y| >= 0

  // ~3.33 bits per decimal digit plus guard bits for the 6-operation chain
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.3219280948874) + 48;
  prec = std::max<mpfr_prec_t>(prec, 64);

  mpfr_t mt, lnt, e, r;
  mpfr_inits2(prec, mt, lnt, e, r, static_cast<mpfr_ptr>(nullptr));

  mpfr_set_q(mt, t.get_mpq_t(), MPFR_RNDN);
  mpfr_log(lnt, mt, MPFR_RNDN);                       // ln t > 0
  mpfr_set_q(e, d.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(e, e, lnt, MPFR_RNDN);
  mpfr_neg(e, e, MPFR_RNDN);
  mpfr_exp(e, e, MPFR_RNDN);                          // t^{-|x-y|}
  mpfr_log1p(e, e, MPFR_RNDN);                        // ln(1 + t^{-|x-y|})
  mpfr_div(e, e, lnt, MPFR_RNDN);                     // log_t(1 + ...)
  mpfr_set_q(r, m.get_mpq_t(), MPFR_RNDN);
  mpfr_add(r, r, e, MPFR_RNDN);

  DequantResult out;
  out.lower = m;
  out.value = mpfr_get_d(r, MPFR_RNDN);

  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, r);
  out.decimal.assign(buf.data());

  // log_t 2
  mpfr_set_ui(e, 2, MPFR_RNDN);
  mpfr_log(e, e, MPFR_RNDN);
  mpfr_div(e, e, lnt, MPFR_RNDN);
  out.bound = mpfr_get_d(e, MPFR_RNDN);

  mpfr_clears(mt, lnt, e, r, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace tropica
