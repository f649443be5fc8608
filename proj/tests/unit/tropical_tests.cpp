#include <doctest.h>

#include "support/builders.hpp"
#include "tropica/dequant.hpp"
#include "tropica/error.hpp"
#include "tropica/tropical.hpp"

using namespace tropica;
using tt::tn;

TEST_CASE("semi-field worked computations") {
  CHECK(trop_add(tn("1"), tn("1")) == tn("1"));
  CHECK(trop_add(tn("1"), tn("2")) == tn("2"));
  CHECK(trop_add(trop_add(tn("1"), tn("2")), tn("3")) == tn("3"));
  CHECK(trop_mul(tn("1"), tn("2")) == tn("3"));
  CHECK(trop_mul(tn("1"), trop_add(tn("2"), tn("-1"))) == tn("3"));
  CHECK(trop_mul(tn("1"), tn("-2")) == tn("-1"));
  CHECK(trop_pow(trop_add(tn("5"), tn("3")), 2) == tn("10"));
}

TEST_CASE("bottom element") {
  TropicalNumber bot = TropicalNumber::bottom();
  CHECK(trop_add(tn("7/3"), bot) == tn("7/3"));
  CHECK(trop_mul(tn("5"), bot).is_bottom());
  CHECK(trop_pow(bot, 0) == tn("0"));
  CHECK(trop_pow(bot, 3).is_bottom());
  CHECK(bot < tn("-100000"));
  CHECK(bot == TropicalNumber::bottom());
}

TEST_CASE("trop_pow scales") {
  CHECK(trop_pow(tn("2"), 3) == tn("6"));
  CHECK(trop_pow(tn("-1/2"), 0) == tn("0"));
  CHECK(trop_pow(tn("1/3"), 4) == tn("4/3"));
}

TEST_CASE("semi-field axioms on random rationals") {
  tt::Rng rng(7001);
  for (int k = 0; k < 300; ++k) {
    TropicalNumber x(rng.rational()), y(rng.rational()), z(rng.rational());
    if (rng.chance(0.1)) x = TropicalNumber::bottom();
    if (rng.chance(0.1)) y = TropicalNumber::bottom();

    CHECK(trop_add(x, y) == trop_add(y, x));
    CHECK(trop_mul(x, y) == trop_mul(y, x));
    CHECK(trop_add(trop_add(x, y), z) == trop_add(x, trop_add(y, z)));
    CHECK(trop_mul(trop_mul(x, y), z) == trop_mul(x, trop_mul(y, z)));
    CHECK(trop_mul(x, trop_add(y, z)) ==
          trop_add(trop_mul(x, y), trop_mul(x, z)));
    CHECK(trop_add(x, x) == x);
    CHECK(trop_add(x, TropicalNumber::bottom()) == x);
    CHECK(trop_mul(x, tn("0")) == x);
    if (!x.is_bottom())
      CHECK(trop_mul(x, TropicalNumber(-x.finite())) == tn("0"));
  }
}

TEST_CASE("hyperfield addition") {
  CHECK(hyper_add(tn("1"), tn("2")) == DownSet::singleton(tn("2")));
  CHECK(hyper_add(tn("1"), tn("1")) == DownSet::closed_ray(tn("1")));
  CHECK(hyper_add(tn("4"), TropicalNumber::bottom()) == DownSet::singleton(tn("4")));
  CHECK(hyper_add(tn("1"), tn("1")).contains(TropicalNumber::bottom()));
  CHECK(hyper_add(tn("1"), tn("1")).contains(tn("-9")));
  CHECK_FALSE(hyper_add(tn("1"), tn("1")).contains(tn("3/2")));
  // {-inf} (+) {-inf} degenerates to the singleton bottom
  DownSet bot2 = hyper_add(TropicalNumber::bottom(), TropicalNumber::bottom());
  CHECK_FALSE(bot2.is_ray());
  CHECK(bot2.value().is_bottom());
}

TEST_CASE("hyperfield degeneration to the semi-field") {
  tt::Rng rng(7002);
  for (int k = 0; k < 200; ++k) {
    TropicalNumber x(rng.rational()), y(rng.rational());
    if (rng.chance(0.1)) y = TropicalNumber::bottom();
    DownSet s = hyper_add(x, y);
    if (x != y) CHECK(s == DownSet::singleton(trop_add(x, y)));
    CHECK(s.contains(trop_add(x, y)));
  }
}

TEST_CASE("hyper_fold is associative after normalization") {
  tt::Rng rng(7003);
  for (int k = 0; k < 200; ++k) {
    std::vector<TropicalNumber> vals;
    for (int n = 0; n < 4; ++n)
      vals.push_back(rng.chance(0.15) ? TropicalNumber::bottom()
                                      : TropicalNumber(rng.rational(4, 2)));
    DownSet forward = DownSet::singleton(vals[0]);
    for (size_t i = 1; i < vals.size(); ++i) forward = hyper_fold(forward, vals[i]);
    DownSet backward = DownSet::singleton(vals.back());
    for (size_t i = vals.size() - 1; i-- > 0;) backward = hyper_fold(backward, vals[i]);
    CHECK(forward == backward);
  }
}

TEST_CASE("sign hyperfield table") {
  auto set = [](bool z, bool p, bool m) {
    SignSet s;
    s.has_zero = z;
    s.has_plus = p;
    s.has_minus = m;
    return s;
  };
  CHECK(sign_hyper_add(Sign::Plus, Sign::Minus) == set(true, true, true));
  CHECK(sign_hyper_add(Sign::Minus, Sign::Plus) == set(true, true, true));
  CHECK(sign_hyper_add(Sign::Plus, Sign::Plus) == set(false, true, false));
  CHECK(sign_hyper_add(Sign::Minus, Sign::Minus) == set(false, false, true));
  CHECK(sign_hyper_add(Sign::Zero, Sign::Minus) == set(false, false, true));
  CHECK(sign_hyper_add(Sign::Zero, Sign::Plus) == set(false, true, false));
  CHECK(sign_hyper_add(Sign::Minus, Sign::Zero) == set(false, false, true));
  CHECK(sign_hyper_add(Sign::Plus, Sign::Zero) == set(false, true, false));
  CHECK(sign_hyper_add(Sign::Zero, Sign::Zero) == set(true, false, false));
  CHECK(sign_mul(Sign::Minus, Sign::Minus) == Sign::Plus);
  CHECK(sign_mul(Sign::Minus, Sign::Zero) == Sign::Zero);
}

TEST_CASE("dequant_add fixtures") {
  // log_2(2^0 + 2^0) = 1 exactly
  auto r = dequant_add(tt::rat("0"), tt::rat("0"), tt::rat("2"), 30);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));

  // sandwich at (3, 1, 10)
  auto s = dequant_add(tt::rat("3"), tt::rat("1"), tt::rat("10"), 30);
  CHECK(s.value >= 3.0);
  CHECK(s.value <= 3.0 + s.bound + 1e-15);

  // closed form at widely separated arguments
  auto w = dequant_add(tt::rat("10"), tt::rat("0"), tt::rat("10"), 30);
  double expected = 10.0 + std::log10(1.0 + 1e-10);
  CHECK(w.value == doctest::Approx(expected).epsilon(1e-14));

  CHECK_THROWS_AS(dequant_add(tt::rat("0"), tt::rat("0"), tt::rat("1"), 10), Error);
  CHECK_THROWS_AS(dequant_add(tt::rat("0"), tt::rat("0"), tt::rat("1/2"), 10), Error);
}

TEST_CASE("dequant convergence in t") {
  tt::Rng rng(7004);
  const long ts[] = {2, 10, 100, 1000000};
  for (int k = 0; k < 50; ++k) {
    Rational x = rng.rational(), y = rng.rational();
    double prev_bound = 1e300;
    for (long t : ts) {
      auto r = dequant_add(x, y, Rational(t), 25);
      double maxxy = rational_to_double(std::max(x, y));
      CHECK(r.value >= maxxy - 1e-12);
      CHECK(r.value <= maxxy + r.bound + 1e-12);
      CHECK(r.bound < prev_bound);
      prev_bound = r.bound;
    }
  }
}

TEST_CASE("tropical number parsing and formatting") {
  CHECK(tropical_to_string(tn("-inf")) == "-inf");
  CHECK(tropical_to_string(tn("-1.5")) == "-3/2");
  CHECK(tropical_to_string(tn("4/2")) == "2");
  CHECK(tropical_to_string(tn("0.25")) == "1/4");
  CHECK(tropical_to_string(tn("-0.5")) == "-1/2");
  CHECK_THROWS_AS(tn("abc"), Error);
  CHECK_THROWS_AS(tn("1/0"), Error);
  CHECK_THROWS_AS(tn(""), Error);
  CHECK_THROWS_AS(tn("1.2.3"), Error);
}
