#include <cmath>

#include "cmperiods/errors.hpp"
#include "cmperiods/numkernel.hpp"

namespace cmperiods {

namespace {

// Digits lost to the alternating series below the crossover are bounded by
// log10(e^x); 25 keeps that loss inside the extra bits.
constexpr double kSeriesCrossover = 25.0;
constexpr mpfr_prec_t kExtraBits = 112;
constexpr int kMaxIterations = 200000;

// Legendre continued fraction, modified Lentz:
// Gamma(a,x) = e^-x x^a / (x+1-a- 1(1-a)/(x+3-a- 2(2-a)/(x+5-a- ...)))
BigReal continued_fraction(const BigReal& a, const BigReal& x,
                           const BigReal& eps, mpfr_prec_t prec) {
  BigReal tiny = pow10(-1000, prec);
  BigReal b = x + 1 - a;
  BigReal c = 1 / tiny;
  BigReal d = 1 / b;
  BigReal h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    BigReal an = (a - i) * i;  // -i (i - a)
    b += 2;
    d = an * d + b;
    if (abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (abs(c) < tiny) c = tiny;
    d = 1 / d;
    BigReal delta = d * c;
    h *= delta;
    if (abs(delta - 1) < eps) {
      return exp(-x) * pow(x, a) * h;
    }
  }
  throw PrecisionError("incomplete gamma continued fraction did not converge",
                       0);
}

// gamma(a,x) = e^-x x^a sum_n x^n / (a (a+1) ... (a+n)); a not a
// non-positive integer.
BigReal lower_series(const BigReal& a, const BigReal& x, const BigReal& eps) {
  BigReal ap = a;
  BigReal term = 1 / a;
  BigReal sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    ap += 1;
    term *= x / ap;
    sum += term;
    if (abs(term) < abs(sum) * eps) {
      return sum * exp(-x) * pow(x, a);
    }
  }
  throw PrecisionError("incomplete gamma series did not converge", 0);
}

// E1(x) = -gamma - log x - sum_{n>=1} (-x)^n / (n n!)
BigReal e1_series(const BigReal& x, const BigReal& eps, mpfr_prec_t prec) {
  BigReal sum(prec);
  BigReal term = BigReal::from_int(1, prec);
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= -x;
    term /= n;
    BigReal contrib = term / n;
    sum += contrib;
    if (abs(contrib) < eps) {
      return -const_euler(prec) - log(x) - sum;
    }
  }
  throw PrecisionError("E1 series did not converge", 0);
}

BigReal e1_impl(const BigReal& x, const BigReal& eps, mpfr_prec_t prec) {
  if (x < kSeriesCrossover) return e1_series(x, eps, prec);
  return continued_fraction(BigReal(prec), x, eps, prec);
}

}  // namespace

BigReal exp_integral_e1(const BigReal& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("E1 requires x > 0");
  const mpfr_prec_t prec = ctx.bits() + kExtraBits;
  BigReal eps = pow10(-(ctx.working_digits() + 10), prec);
  return e1_impl(x.with_precision(prec), eps, prec).with_precision(ctx.bits());
}

BigReal upper_incomplete_gamma(const BigReal& a, const BigReal& x,
                               const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("incomplete gamma requires x > 0");
  const mpfr_prec_t prec = ctx.bits() + kExtraBits;
  BigReal aa = a.with_precision(prec);
  BigReal xx = x.with_precision(prec);
  BigReal eps = pow10(-(ctx.working_digits() + 10), prec);

  if (floor(aa) == aa && aa <= 0) {
    // Gamma(a, x) = (Gamma(a+1, x) - x^a e^-x) / a, stepping down from E1.
    long target = aa.to_long_floor();
    BigReal value = e1_impl(xx, eps, prec);
    BigReal emx = exp(-xx);
    for (long k = 0; k > target; --k) {
      long next = k - 1;
      value = (value - pow(xx, next) * emx) / next;
    }
    return value.with_precision(ctx.bits());
  }
  if (xx >= kSeriesCrossover && xx > aa + 1) {
    return continued_fraction(aa, xx, eps, prec).with_precision(ctx.bits());
  }
  PrecisionContext inner(ctx.target_digits(), ctx.guard_digits() + 30);
  BigReal full = gamma_real(aa, inner).with_precision(prec);
  return (full - lower_series(aa, xx, eps)).with_precision(ctx.bits());
}

}  // namespace cmperiods
