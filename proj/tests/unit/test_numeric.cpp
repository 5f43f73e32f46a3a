// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

using predabs::InvalidArgument;
using predabs::PolyMu;
using predabs::Rational;
using predabs::RationalFnMu;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  CHECK(Rational(4, 20).num() == 1);
  CHECK(Rational(4, 20).den() == 5);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, 5).den() == 1);
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational text form") {
  CHECK(Rational(17, 20).str() == "17/20");
  CHECK(Rational(-3, 1).str() == "-3");
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("0.75") == Rational(3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("abc"), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse(""), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1/"), InvalidArgument);
}

TEST_CASE("rational overflow is reported instead of wrapping") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-40, 40);
  for (int i = 0; i < 500; ++i) {
    std::int64_t b = d(rng), dd = d(rng), ff = d(rng);
    if (b == 0 || dd == 0 || ff == 0) continue;
    Rational x(d(rng), b), y(d(rng), dd), z(d(rng), ff);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Rational(0));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("polynomials in mu print canonically") {
  PolyMu p = PolyMu(Rational(17, 20)) * PolyMu::mu() + PolyMu(Rational(3, 20)) * PolyMu::one_minus_mu();
  CHECK(p.str() == "(14*mu + 3)/20");
  CHECK(PolyMu::mu().str() == "mu");
  CHECK(PolyMu::one_minus_mu().str() == "-mu + 1");
  CHECK((PolyMu(Rational(1, 2)) * PolyMu::mu()).str() == "mu/2");
  CHECK(PolyMu(Rational(3, 4)).str() == "3/4");
  CHECK(PolyMu().str() == "0");
  CHECK((PolyMu::mu() * PolyMu::mu() - PolyMu(Rational(2))).str() == "mu^2 - 2");
}

TEST_CASE("polynomial evaluation matches Horner by hand") {
  PolyMu p(std::vector<Rational>{Rational(1), Rational(-2), Rational(3)});  // 3mu^2 - 2mu + 1
  Rational mu(3, 4);
  CHECK(p.evaluate(mu) == Rational(3) * mu * mu - Rational(2) * mu + Rational(1));
  CHECK(p.degree() == 2);
  CHECK(PolyMu(std::vector<Rational>{Rational(1), Rational(0), Rational(0)}).degree() == 0);
}

TEST_CASE("powers and multiplicity at one") {
  PolyMu q = PolyMu::one_minus_mu().pow(3) * (PolyMu::mu() + PolyMu(Rational(2)));
  CHECK(q.multiplicity_at_one() == 3);
  CHECK(q.divide_by_mu_minus_one(3) == PolyMu(Rational(-1)) * (PolyMu::mu() + PolyMu(Rational(2))));
  CHECK(PolyMu::mu().multiplicity_at_one() == 0);
  CHECK(PolyMu::mu().pow(0) == PolyMu(Rational(1)));
}

TEST_CASE("rational functions reduce content and take the limit at one") {
  // (1-mu)^2 (mu + 1) / ((1-mu)^2 * 4)
  PolyMu num = PolyMu::one_minus_mu().pow(2) * (PolyMu::mu() + PolyMu(Rational(1)));
  PolyMu den = PolyMu::one_minus_mu().pow(2) * PolyMu(Rational(4));
  RationalFnMu f(num, den);
  CHECK(f.limit_at_one() == Rational(1, 2));
  CHECK(f.evaluate(Rational(1, 2)) == Rational(3, 8));

  RationalFnMu g(PolyMu(Rational(1, 2)) * PolyMu::mu(), PolyMu(Rational(1, 3)));
  CHECK(g.numerator() == PolyMu(Rational(3)) * PolyMu::mu());
  CHECK(g.denominator() == PolyMu(Rational(2)));
  CHECK(g.str() == "3*mu / 2");
  CHECK_THROWS(RationalFnMu(PolyMu::mu(), PolyMu()));
}

TEST_CASE("limit at one agrees with evaluation when there is no pole") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-5, 5);
  for (int i = 0; i < 200; ++i) {
    PolyMu a(std::vector<Rational>{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))});
    PolyMu b(std::vector<Rational>{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))});
    if (b.is_zero() || b.evaluate(Rational(1)).is_zero()) continue;
    RationalFnMu f(a, b);
    CHECK(f.limit_at_one() == a.evaluate(Rational(1)) / b.evaluate(Rational(1)));
    // Multiplying through by (1 - mu)^k leaves the limit unchanged.
    RationalFnMu g(a * PolyMu::one_minus_mu().pow(2), b * PolyMu::one_minus_mu().pow(2));
    CHECK(g.limit_at_one() == f.limit_at_one());
  }
}
