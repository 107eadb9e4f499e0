#include <cmath>

#include "cmperiods/errors.hpp"
#include "cmperiods/numkernel.hpp"

namespace cmperiods {

BigReal bessel_k(const BigReal& nu, const BigReal& x,
                 const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("bessel_k requires x > 0");
  const mpfr_prec_t prec = ctx.bits() + 32;
  BigReal xx = x.with_precision(prec);
  BigReal vv = abs(nu.with_precision(prec));

  // The integrand is analytic in the strip |Im t| < pi/4, where it is at
  // most exp(-x/sqrt 2); the trapezoid error relative to K ~ e^-x is then
  // about exp(-pi^2/(2h) + (1 - 1/sqrt 2) x).
  const double xd = x.to_double();
  const double vd = vv.to_double();
  const double budget = (ctx.working_digits() + 10) * std::log(10.0) + 10;
  const double step =
      0.9 * M_PI * M_PI / (2 * (budget + 0.3 * xd + vd * M_PI / 4));
  BigReal h = BigReal::from_double(step, prec);

  BigReal sum = exp(-xx) / 2;
  for (long k = 1;; ++k) {
    const double t = k * step;
    const double log_mag = -xd * std::cosh(t) + vd * t + xd;
    if (t > 1 && log_mag < -budget - 5 && -xd * std::sinh(t) + vd < 0) break;
    if (k > 10000000) {
      throw PrecisionError("bessel_k trapezoid did not terminate", 0);
    }
    BigReal tk = h * k;
    sum += exp(-(xx * cosh(tk))) * cosh(vv * tk);
  }
  return (sum * h).with_precision(ctx.bits());
}

}  // namespace cmperiods
