#include <cmath>

#include "cmperiods/epstein.hpp"
#include "cmperiods/errors.hpp"
#include "cmperiods/modarith.hpp"

namespace cmperiods {

namespace {

PrecisionContext inner_context(const PrecisionContext& ctx) {
  return PrecisionContext(ctx.target_digits(), ctx.guard_digits() + 10);
}

// Exponential tails e^-X (times powers of X) are dropped past this point.
double tail_cutoff(const PrecisionContext& ctx, double s_abs) {
  const double base = (ctx.working_digits() + 5) * std::log(10.0);
  return base + (s_abs + 2.0) * std::log(base) + 5.0;
}

long discriminant_of(const QuadForm& f) {
  const long d = -f.discriminant();
  if (f.a <= 0 || d <= 0) {
    throw DomainError("Epstein zeta needs a positive definite form, got " +
                      f.to_string());
  }
  return d;
}

bool is_nonpositive_integer(const BigReal& s) {
  return s <= 0 && floor(s) == s;
}

}  // namespace

BigReal epstein_direct(const QuadForm& f, const BigReal& s,
                       const PrecisionContext& ctx) {
  const long d = discriminant_of(f);
  if (!(s > BigReal::ratio(11, 10, s.precision()))) {
    throw DomainError("epstein_direct needs s > 1.1");
  }
  const PrecisionContext inner = inner_context(ctx);
  const mpfr_prec_t prec = inner.bits();
  const BigReal ss = s.with_precision(prec);
  const BigReal pi = const_pi(prec);
  const BigReal a = BigReal::from_int(f.a, prec);
  const BigReal a_pow = pow(a, -ss);
  const BigReal gamma_s = gamma_real(ss, inner);
  const BigReal half = BigReal::ratio(1, 2, prec);
  const BigReal nu = ss - half;
  const BigReal root_d = sqrt(BigReal::from_int(d, prec));

  // Row y = 0.
  BigReal total = a_pow * riemann_zeta(ss * 2, inner) * 2;

  // Constant Poisson terms of the rows y != 0, summed over y in closed form.
  const BigReal beta_unit = root_d / (2 * f.a);  // beta_y = beta_unit * y
  BigReal constant = sqrt(pi) * gamma_real(nu, inner) / gamma_s;
  constant *= riemann_zeta(ss * 2 - 1, inner);
  constant *= pow(beta_unit, 1 - ss * 2);
  total += a_pow * constant * 2;

  // Oscillating Bessel terms: argument 2 pi k beta_y = pi k y sqrt(d)/a.
  const double cutoff = tail_cutoff(inner, std::abs(s.to_double()));
  const double step = M_PI * std::sqrt(static_cast<double>(d)) / f.a;
  BigReal bessel_sum(prec);
  for (long y = 1; step * y <= cutoff; ++y) {
    const BigReal beta_y = beta_unit * y;
    for (long k = 1; step * k * y <= cutoff; ++k) {
      const long m = modarith::mod(k * f.b * y, 2 * f.a);
      if (2 * m == f.a || 2 * m == 3 * f.a) continue;  // cos = 0
      const BigReal phase = cos(pi * BigReal::ratio(m, f.a, prec));
      const BigReal arg = pi * 2 * k * beta_y;
      const BigReal weight = pow(BigReal::from_int(k, prec) / beta_y, nu);
      bessel_sum += weight * phase * bessel_k(nu, arg, inner);
    }
  }
  total += a_pow * 8 * pow(pi, ss) / gamma_s * bessel_sum;
  return total.with_precision(ctx.bits());
}

BigReal epstein_continued(const QuadForm& f, const BigReal& s,
                          const PrecisionContext& ctx) {
  const long d = discriminant_of(f);
  const mpfr_prec_t out_prec = ctx.bits();
  if (s == 1) throw PoleError("Epstein zeta has a pole at s = 1");
  if (is_nonpositive_integer(s)) {
    // 1/Gamma vanishes; only the -1/s term survives, and only at s = 0.
    return BigReal::from_int(s.is_zero() ? -1 : 0, out_prec);
  }
  const PrecisionContext inner = inner_context(ctx);
  const mpfr_prec_t prec = inner.bits();
  const BigReal ss = s.with_precision(prec);
  const BigReal one_minus_s = 1 - ss;
  const BigReal scale = const_pi(prec) * 2 / sqrt(BigReal::from_int(d, prec));

  const double cutoff = tail_cutoff(inner, std::abs(s.to_double()));
  const long max_q = static_cast<long>(
      std::ceil(cutoff * std::sqrt(static_cast<double>(d)) / (2 * M_PI)));
  BigReal g(prec);
  for (const FormValue& v : form_values(f, max_q)) {
    const BigReal x = scale * v.q;
    BigReal term = pow(x, -ss) * upper_incomplete_gamma(ss, x, inner);
    term += pow(x, -one_minus_s) * upper_incomplete_gamma(one_minus_s, x, inner);
    g += term * v.count;
  }
  BigReal bracket = g + 1 / (ss - 1) - 1 / ss;
  BigReal out = pow(scale, ss) / gamma_real(ss, inner) * bracket;
  return out.with_precision(out_prec);
}

SZeroJet epstein_jet(const QuadForm& f, const PrecisionContext& ctx) {
  const long d = discriminant_of(f);
  const PrecisionContext inner = inner_context(ctx);
  const mpfr_prec_t prec = inner.bits();
  const BigReal scale = const_pi(prec) * 2 / sqrt(BigReal::from_int(d, prec));

  const double cutoff = tail_cutoff(inner, 0.0);
  const long max_q = static_cast<long>(
      std::ceil(cutoff * std::sqrt(static_cast<double>(d)) / (2 * M_PI)));
  BigReal g(prec);
  for (const FormValue& v : form_values(f, max_q)) {
    const BigReal x = scale * v.q;
    g += (exp_integral_e1(x, inner) + exp(-x) / x) * v.count;
  }
  BigReal deriv = g - 1 - const_euler(prec) - log(scale);
  return {BigReal::from_int(-1, ctx.bits()), deriv.with_precision(ctx.bits())};
}

SZeroJet epstein_jet_finite_difference(const QuadForm& f,
                                       const PrecisionContext& ctx) {
  const PrecisionContext wide(4 * ctx.target_digits(), ctx.guard_digits());
  const mpfr_prec_t prec = wide.bits();
  const BigReal h = pow10(-(ctx.target_digits() / 4), prec);
  auto z = [&](const BigReal& s) { return epstein_continued(f, s, wide); };
  const BigReal zp1 = z(h), zm1 = z(-h);
  const BigReal zp2 = z(h * 2), zm2 = z(-(h * 2));
  const BigReal d1 = (zp1 - zm1) / (h * 2);
  const BigReal d2 = (zp2 - zm2) / (h * 4);
  const BigReal v1 = (zp1 + zm1) / 2;
  const BigReal v2 = (zp2 + zm2) / 2;
  BigReal deriv = (d1 * 4 - d2) / 3;
  BigReal value = (v1 * 4 - v2) / 3;
  return {value.with_precision(ctx.bits()), deriv.with_precision(ctx.bits())};
}

}  // namespace cmperiods
