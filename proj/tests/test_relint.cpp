#include <doctest.h>

#include "cmperiods/errors.hpp"
#include "cmperiods/relint.hpp"
#include "oracles.hpp"

using namespace cmperiods;

namespace {

mpz_class pow10z(unsigned e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 10, e);
  return v;
}

}  // namespace

TEST_CASE("recognize_rational examples") {
  PrecisionContext ctx(120);
  const auto prec = ctx.bits();
  auto q = recognize_rational(BigReal::from_string("0.75", prec), pow10z(12), ctx);
  REQUIRE(q);
  CHECK(*q == mpq_class(3, 4));
  BigReal near = BigReal::ratio(22, 7, prec) + pow10(-100, prec);
  q = recognize_rational(near, pow10z(12), ctx);
  REQUIRE(q);
  CHECK(*q == mpq_class(22, 7));
  CHECK_FALSE(recognize_rational(oracle::pi(prec), pow10z(6), ctx).has_value());
  q = recognize_rational(BigReal::from_int(-5, prec), 1, ctx);
  REQUIRE(q);
  CHECK(*q == -5);
  q = recognize_rational(BigReal(prec), 10, ctx);
  REQUIRE(q);
  CHECK(*q == 0);
  CHECK_THROWS_AS(recognize_rational(BigReal(prec), 0, ctx), DomainError);
}

TEST_CASE("pi with max_den 10^6: every fraction misses the window") {
  // Oracle: n/m with m <= 10^6 stays at distance >= 1/(2 * 10^12) from pi.
  PrecisionContext ctx(60);
  const auto prec = ctx.bits();
  const BigReal pi = oracle::pi(prec);
  const BigReal window = pow10(-12, prec) / 2;
  bool any = false;
  for (long m = 1; m <= 1000000 && !any; ++m) {
    BigReal n = floor(pi * m + BigReal::ratio(1, 2, prec));
    if (abs(pi * m - n) < window * m) any = true;
  }
  CHECK_FALSE(any);
  CHECK_FALSE(recognize_rational(pi, 1000000, ctx).has_value());
  auto q = recognize_rational(pi, 1000, ctx);
  REQUIRE(q);
  CHECK(*q == mpq_class(355, 113));
}

TEST_CASE("recognize_sqrtp examples") {
  PrecisionContext ctx(120);
  const auto prec = ctx.bits();
  BigReal r7 = sqrt(BigReal::from_int(7, prec));
  auto q = recognize_sqrtp(r7 * 3, 7, pow10z(12), ctx);
  REQUIRE(q);
  CHECK(*q == 3);
  q = recognize_sqrtp(r7 / 2, 7, pow10z(12), ctx);
  REQUIRE(q);
  CHECK(*q == mpq_class(1, 2));
  CHECK_FALSE(recognize_sqrtp(sqrt(BigReal::from_int(2, prec)), 7, pow10z(12), ctx).has_value());
}

TEST_CASE("rational round trip on 10^4 random fractions") {
  PrecisionContext ctx(120);
  const auto prec = ctx.bits();
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 10000; ++i) {
    mpq_class expected(num(oracle::rng()), den(oracle::rng()));
    expected.canonicalize();
    auto q = recognize_rational(BigReal::from_rational(expected, prec), 1000000, ctx);
    REQUIRE(q);
    REQUIRE(*q == expected);
  }
}

TEST_CASE("height") {
  CHECK(height(mpq_class(-7, 3)) == 7);
  CHECK(height(mpq_class(2, 9)) == 9);
}

TEST_CASE("pslq finds planted relations") {
  PrecisionContext ctx(120);
  const auto prec = ctx.bits();
  BigReal one = BigReal::from_int(1, prec);
  auto r = pslq({one, sqrt(BigReal::from_int(2, prec)), BigReal::from_int(2, prec)}, 1000, ctx);
  REQUIRE(r);
  // a + b sqrt2 + 2c = 0 forces b = 0, a = -2c
  CHECK(r->coeffs[1] == 0);
  CHECK(r->coeffs[0] == -2 * r->coeffs[2]);

  BigReal phi = (1 + sqrt(BigReal::from_int(5, prec))) / 2;
  r = pslq({one, phi, phi * phi}, 1000, ctx);
  REQUIRE(r);
  CHECK(abs(r->coeffs[0]) == 1);
  CHECK(r->coeffs[0] == r->coeffs[1]);
  CHECK(r->coeffs[2] == -r->coeffs[0]);
}

TEST_CASE("pslq finds nothing small between 1 and pi") {
  PrecisionContext ctx(120);
  const auto prec = ctx.bits();
  const BigReal pi = oracle::pi(prec);
  CHECK_FALSE(pslq({BigReal::from_int(1, prec), pi}, 1000, ctx).has_value());
  // exhaustive oracle: no a + b pi with |a|, |b| <= 1000 is below 10^-60
  const BigReal tiny = pow10(-60, prec);
  bool found = false;
  for (long b = 1; b <= 1000 && !found; ++b) {
    BigReal a = floor(pi * b + BigReal::ratio(1, 2, prec));
    if (abs(a - pi * b) < tiny) found = true;
  }
  CHECK_FALSE(found);
}

TEST_CASE("pslq recovers 100 planted relations on 4-vectors") {
  PrecisionContext ctx(120);
  const auto prec = ctx.bits();
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::uniform_int_distribution<long> seed(1, 1000000);
  PrecisionContext wide(240);
  for (int trial = 0; trial < 100; ++trial) {
    // x0..x2 random reals, x3 = -(c0 x0 + c1 x1 + c2 x2) / c3
    std::vector<long> c(4);
    for (auto& v : c) v = coeff(oracle::rng());
    if (c[3] == 0) c[3] = 1;
    std::vector<BigReal> xs;
    for (int i = 0; i < 3; ++i) {
      xs.push_back(log(BigReal::from_int(seed(oracle::rng()) + 1, prec)));
    }
    BigReal lin = xs[0] * c[0] + xs[1] * c[1] + xs[2] * c[2];
    xs.push_back(-lin / c[3]);
    auto r = pslq(xs, 1000, ctx);
    REQUIRE(r);
    // soundness: the relation holds when re-evaluated at doubled precision
    std::vector<BigReal> wide_xs;
    for (int i = 0; i < 3; ++i) wide_xs.push_back(xs[static_cast<std::size_t>(i)].with_precision(wide.bits()));
    BigReal lin_w = wide_xs[0] * c[0] + wide_xs[1] * c[1] + wide_xs[2] * c[2];
    wide_xs.push_back(-lin_w / c[3]);
    BigReal sum(wide.bits());
    BigReal x_max(wide.bits());
    mpz_class c_max = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      sum += BigReal::from_mpz(r->coeffs[i], wide.bits()) * wide_xs[i];
      if (abs(wide_xs[i]) > x_max) x_max = abs(wide_xs[i]);
      if (abs(r->coeffs[i]) > c_max) c_max = abs(r->coeffs[i]);
    }
    CHECK(abs(sum) < pow10(-60, wide.bits()) * x_max * BigReal::from_mpz(c_max, wide.bits()));
  }
}

TEST_CASE("pslq input validation") {
  PrecisionContext ctx(40);
  CHECK_THROWS_AS(pslq({BigReal::from_int(1, ctx.bits())}, 10, ctx), DomainError);
  CHECK_THROWS_AS(pslq({BigReal(ctx.bits()), BigReal(ctx.bits())}, 10, ctx), DomainError);
}
