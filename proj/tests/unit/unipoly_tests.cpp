#include <doctest.h>

#include "support/builders.hpp"
#include "tropica/error.hpp"
#include "tropica/unipoly.hpp"

using namespace tropica;
using tt::tn;
using tt::uni;

TEST_CASE("evaluation") {
  CHECK(eval_uni(uni({{0, "0"}, {1, "0"}}), tn("-3")) == tn("0"));
  CHECK(eval_uni(uni({{0, "0"}, {1, "0"}, {2, "-1"}}), tn("1")) == tn("1"));
  CHECK(eval_uni(uni({{0, "1"}, {1, "0"}, {2, "3"}}), tn("0")) == tn("3"));
  // at bottom the constant term survives (or nothing does)
  CHECK(eval_uni(uni({{0, "5"}, {2, "0"}}), tn("-inf")) == tn("5"));
  CHECK(eval_uni(uni({{1, "5"}}), tn("-inf")).is_bottom());
}

TEST_CASE("construction prunes and validates") {
  UniPoly p = UniPoly::from_terms({{0u, tn("1")}, {3u, tn("-inf")}, {2u, tn("0")}});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(3).is_bottom());
  CHECK_THROWS_AS(UniPoly::from_terms({{1u, tn("-inf")}}), Error);
  CHECK_THROWS_AS(UniPoly::from_terms({{0u, tn("1")}, {0u, tn("2")}}), Error);
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(uni({{0, "0"}, {2, "0"}})) == uni({{0, "0"}, {1, "0"}, {2, "0"}}));
  // concave inputs are fixed points
  UniPoly p = uni({{0, "0"}, {1, "0"}, {2, "-1"}});
  CHECK(canonicalize(p) == p);
  CHECK(canonicalize(uni({{0, "1"}, {1, "1"}, {2, "3"}})) ==
        uni({{0, "1"}, {1, "2"}, {2, "3"}}));
}

TEST_CASE("canonicalize preserves the function") {
  tt::Rng rng(8001);
  for (int k = 0; k < 100; ++k) {
    UniPoly p = rng.unipoly(9);
    UniPoly q = canonicalize(p);
    for (int s = 0; s < 100; ++s) {
      TropicalNumber x = s == 0 ? TropicalNumber::bottom()
                                : TropicalNumber(rng.rational(30, 7));
      CHECK(eval_uni(p, x) == eval_uni(q, x));
    }
    CHECK(canonicalize(q) == q);
  }
}

TEST_CASE("roots of the worked polynomials") {
  RootList r1 = roots_uni(uni({{0, "0"}, {1, "0"}}));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == RootEntry{tn("0"), 1});

  RootList r2 = roots_uni(uni({{0, "0"}, {1, "0"}, {2, "-1"}}));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == RootEntry{tn("0"), 1});
  CHECK(r2[1] == RootEntry{tn("1"), 1});

  RootList r3 = roots_uni(uni({{0, "0"}, {2, "0"}}));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0] == RootEntry{tn("0"), 2});

  // "0 + x + x^2": the maximum is attained three times at 0, order 2
  RootList r4 = roots_uni(uni({{0, "0"}, {1, "0"}, {2, "0"}}));
  REQUIRE(r4.size() == 1);
  CHECK(r4[0] == RootEntry{tn("0"), 2});

  RootList r5 = roots_uni(uni({{0, "-1"}, {1, "3"}, {2, "2"}, {3, "0"}}));
  REQUIRE(r5.size() == 3);
  CHECK(r5[0] == RootEntry{tn("-4"), 1});
  CHECK(r5[1] == RootEntry{tn("1"), 1});
  CHECK(r5[2] == RootEntry{tn("2"), 1});

  // a cubic with a hidden double root: the exponent-2 line never attains
  // the maximum alone
  RootList r6 = roots_uni(uni({{0, "-1"}, {1, "2"}, {2, "-2"}, {3, "0"}}));
  REQUIRE(r6.size() == 2);
  CHECK(r6[0] == RootEntry{tn("-3"), 1});
  CHECK(r6[1] == RootEntry{tn("1"), 2});
}

TEST_CASE("the root at -inf carries the low-exponent deficit") {
  RootList r = roots_uni(uni({{1, "0"}, {2, "0"}}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].root.is_bottom());
  CHECK(r[0].order == 1);
  CHECK(r[1] == RootEntry{tn("0"), 1});

  RootList mono = roots_uni(uni({{3, "5"}}));
  REQUIRE(mono.size() == 1);
  CHECK(mono[0].root.is_bottom());
  CHECK(mono[0].order == 3);
}

TEST_CASE("roots agree with the breakpoint-scan oracle") {
  tt::Rng rng(8002);
  for (int k = 0; k < 200; ++k) {
    UniPoly p = rng.unipoly(10);
    CHECK(roots_uni(p) == tt::roots_oracle(p));
  }
}

TEST_CASE("fundamental theorem: orders sum to the degree") {
  tt::Rng rng(8003);
  for (int k = 0; k < 300; ++k) {
    UniPoly p = rng.unipoly(12);
    unsigned total = 0;
    for (const RootEntry& r : roots_uni(p)) total += r.order;
    CHECK(total == p.degree());
  }
}

TEST_CASE("root lists are ascending, bottom first, pairwise distinct") {
  tt::Rng rng(8006);
  for (int k = 0; k < 150; ++k) {
    RootList roots = roots_uni(rng.unipoly(11));
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
      CHECK(roots[i].root < roots[i + 1].root);
      CHECK(roots[i].order >= 1);
    }
    for (size_t i = 1; i < roots.size(); ++i) CHECK_FALSE(roots[i].root.is_bottom());
  }
}

TEST_CASE("factorization fixtures") {
  auto f1 = factor_uni(uni({{0, "0"}, {1, "0"}, {2, "-1"}}));
  CHECK(f1.leading == tn("-1"));
  REQUIRE(f1.roots.size() == 2);
  CHECK(f1.roots[0] == RootEntry{tn("0"), 1});
  CHECK(f1.roots[1] == RootEntry{tn("1"), 1});

  auto f2 = factor_uni(uni({{0, "0"}, {2, "0"}}));
  CHECK(f2.leading == tn("0"));
  REQUIRE(f2.roots.size() == 1);
  CHECK(f2.roots[0] == RootEntry{tn("0"), 2});

  auto f3 = factor_uni(uni({{3, "5"}}));
  CHECK(f3.leading == tn("5"));
  REQUIRE(f3.roots.size() == 1);
  CHECK(f3.roots[0].root.is_bottom());
  CHECK(f3.roots[0].order == 3);
}

TEST_CASE("expand_linear_factors fixtures") {
  UniPoly p = expand_linear_factors(tn("-1"), {{tn("0"), 1}, {tn("1"), 1}});
  CHECK(p == uni({{0, "0"}, {1, "0"}, {2, "-1"}}));

  UniPoly c = expand_linear_factors(tn("0"), {});
  CHECK(c == uni({{0, "0"}}));

  UniPoly sq = expand_linear_factors(tn("0"), {{tn("0"), 2}});
  CHECK(sq == uni({{0, "0"}, {1, "0"}, {2, "0"}}));

  CHECK_THROWS_AS(expand_linear_factors(tn("0"), {{tn("1"), 0}}), Error);
  CHECK_THROWS_AS(expand_linear_factors(tn("-inf"), {}), Error);
}

TEST_CASE("factor then expand reproduces the canonical polynomial") {
  tt::Rng rng(8004);
  for (int k = 0; k < 200; ++k) {
    UniPoly p = rng.unipoly(12);
    auto f = factor_uni(p);
    CHECK(expand_linear_factors(f.leading, f.roots) == canonicalize(p));
  }
}

TEST_CASE("order-k divisibility: dividing out a root and re-expanding") {
  tt::Rng rng(8005);
  for (int k = 0; k < 100; ++k) {
    UniPoly p = rng.unipoly(8);
    auto f = factor_uni(p);
    for (size_t drop = 0; drop < f.roots.size(); ++drop) {
      // Q = the product of the remaining factors; multiplying the dropped
      // factor back must reproduce the canonical polynomial
      RootList rest;
      for (size_t i = 0; i < f.roots.size(); ++i)
        if (i != drop) rest.push_back(f.roots[i]);
      UniPoly q = expand_linear_factors(f.leading, rest);
      UniPoly whole = expand_linear_factors(tn("0"), {f.roots[drop]});
      CHECK(mul_uni(q, whole) == canonicalize(p));
    }
  }
}
