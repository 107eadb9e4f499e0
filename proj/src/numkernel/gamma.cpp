#include <cmath>
#include <numeric>

#include "cmperiods/errors.hpp"
#include "cmperiods/numkernel.hpp"

namespace cmperiods {

namespace {

constexpr mpfr_prec_t kExtraBits = 32;

BigReal log_gamma_shifted(const BigReal& x, int working_digits,
                          mpfr_prec_t prec) {
  BigReal z = x.with_precision(prec);
  const long threshold =
      static_cast<long>(std::ceil(1.2 * working_digits)) + 1;

  BigReal shift_product = BigReal::from_int(1, prec);
  bool shifted = false;
  if (z < threshold) {
    long m = threshold - z.to_long_floor();
    for (long k = 0; k < m; ++k) shift_product *= (z + k);
    z += m;
    shifted = true;
  }

  // (z - 1/2) log z - z + log(2 pi)/2 + sum B_2k / (2k(2k-1) z^(2k-1))
  BigReal two_pi = const_pi(prec) * 2;
  BigReal result = (z - BigReal::ratio(1, 2, prec)) * log(z) - z +
                   log(two_pi) / 2;

  BigReal inv_z = 1 / z;
  BigReal inv_z2 = inv_z * inv_z;
  BigReal power = inv_z;
  BigReal budget = pow10(-(working_digits + 8), prec);
  BigReal previous = BigReal::from_int(0, prec);
  for (unsigned k = 1;; ++k) {
    mpq_class coeff = bernoulli(2 * k) / mpq_class(2 * k * (2 * k - 1));
    BigReal term = BigReal::from_rational(coeff, prec) * power;
    result += term;
    // For real z > 0 the Stirling remainder is bounded by the first
    // omitted term, which is no larger than this one once terms decrease.
    if (abs(term) < budget) break;
    if (k > 2 && abs(term) > abs(previous)) {
      throw PrecisionError("Stirling series diverged before reaching budget",
                           0);
    }
    previous = term;
    power *= inv_z2;
  }
  if (shifted) result -= log(shift_product);
  return result;
}

}  // namespace

BigReal log_gamma(const BigReal& x, const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("log_gamma requires x > 0");
  return log_gamma_shifted(x, ctx.working_digits(), ctx.bits() + kExtraBits)
      .with_precision(ctx.bits());
}

BigReal log_gamma_ratio(long a, long d, const PrecisionContext& ctx) {
  if (d == 0 || (a > 0) != (d > 0) || a == 0) {
    throw DomainError("log_gamma_ratio requires a/d > 0");
  }
  return log_gamma(BigReal::ratio(a, d, ctx.bits() + kExtraBits), ctx);
}

BigReal gamma_rational(long a, long d, const PrecisionContext& ctx) {
  if (d <= 0 || a <= 0 || a >= d) {
    throw DomainError("gamma_rational requires 0 < a < d");
  }
  if (std::gcd(a, d) != 1) {
    throw DomainError("gamma_rational requires gcd(a, d) = 1");
  }
  BigReal lg = log_gamma_shifted(BigReal::ratio(a, d, ctx.bits() + kExtraBits),
                                 ctx.working_digits(),
                                 ctx.bits() + kExtraBits);
  return exp(lg).with_precision(ctx.bits());
}

BigReal gamma_real(const BigReal& x, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits() + kExtraBits;
  BigReal z = x.with_precision(prec);
  if (z > 0) {
    return exp(log_gamma_shifted(z, ctx.working_digits(), prec))
        .with_precision(ctx.bits());
  }
  if (floor(z) == z) throw PoleError("Gamma has a pole at non-positive integers");
  // Gamma(z) = Gamma(z + m) / (z (z+1) ... (z+m-1)) with z + m > 0.
  long m = -z.to_long_floor();
  BigReal denom = BigReal::from_int(1, prec);
  for (long k = 0; k < m; ++k) denom *= (z + k);
  BigReal shifted = z + m;
  BigReal g = exp(log_gamma_shifted(shifted, ctx.working_digits(), prec));
  return (g / denom).with_precision(ctx.bits());
}

BigReal log_beta(const BigReal& u, const BigReal& v,
                 const PrecisionContext& ctx) {
  if (!(u > 0) || !(v > 0)) throw DomainError("beta requires u, v > 0");
  const mpfr_prec_t prec = ctx.bits() + kExtraBits;
  BigReal uu = u.with_precision(prec);
  BigReal vv = v.with_precision(prec);
  const int wd = ctx.working_digits();
  BigReal r = log_gamma_shifted(uu, wd, prec) + log_gamma_shifted(vv, wd, prec) -
              log_gamma_shifted(uu + vv, wd, prec);
  return r.with_precision(ctx.bits());
}

BigReal beta(const BigReal& u, const BigReal& v, const PrecisionContext& ctx) {
  PrecisionContext inner(ctx.target_digits(), ctx.guard_digits() + 10);
  return exp(log_beta(u, v, inner)).with_precision(ctx.bits());
}

}  // namespace cmperiods
