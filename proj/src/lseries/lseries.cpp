#include "cmperiods/lseries.hpp"

#include "cmperiods/errors.hpp"

namespace cmperiods {

BigReal SZeroJet::dlog() const {
  if (value.is_zero()) throw DomainError("logarithmic derivative of a zero");
  return deriv / value;
}

SZeroJet riemann_jet(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal two_pi = const_pi(prec) * 2;
  return {BigReal::ratio(-1, 2, prec), -log(two_pi) / 2};
}

mpq_class dirichlet_value_exact(const Discriminant& disc) {
  const long d = disc.d();
  mpz_class sum = 0;
  for (long a = 1; a < d; ++a) sum += kronecker_epsilon(a, disc) * a;
  mpq_class v(-sum, d);
  v.canonicalize();
  return v;
}

BigReal character_log_gamma_sum(const Discriminant& disc,
                                const PrecisionContext& ctx) {
  const long d = disc.d();
  BigReal sum(ctx.bits());
  for (long a = 1; a < d; ++a) {
    const int e = kronecker_epsilon(a, disc);
    if (e == 0) continue;
    BigReal lg = log_gamma_ratio(a, d, ctx);
    if (e > 0) {
      sum += lg;
    } else {
      sum -= lg;
    }
  }
  return sum;
}

SZeroJet dirichlet_jet(const Discriminant& disc, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  const long d = disc.d();
  BigReal value = BigReal::from_rational(dirichlet_value_exact(disc), prec);
  // H'(x, 0) = log(Gamma(x) / sqrt(2 pi)); the sqrt(2 pi) parts cancel
  // because the character sums to zero, but they are kept.
  BigReal half_log_2pi = log(const_pi(prec) * 2) / 2;
  BigReal sum(prec);
  for (long a = 1; a < d; ++a) {
    const int e = kronecker_epsilon(a, disc);
    if (e == 0) continue;
    BigReal term = log_gamma_ratio(a, d, ctx) - half_log_2pi;
    if (e > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigReal deriv = sum - log(BigReal::from_int(d, prec)) * value;
  return {std::move(value), std::move(deriv)};
}

BigReal zetak_dlog0(const Discriminant& disc, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  const long h = static_cast<long>(reduced_forms(disc).h());
  BigReal out = log(const_pi(prec) * 2) - log(BigReal::from_int(disc.d(), prec));
  out += character_log_gamma_sum(disc, ctx) * disc.w() / (2 * h);
  return out;
}

BigReal dirichlet_l(const Discriminant& disc, const BigReal& s,
                    const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  const long d = disc.d();
  BigReal sum(prec);
  for (long a = 1; a < d; ++a) {
    const int e = kronecker_epsilon(a, disc);
    if (e == 0) continue;
    BigReal hz = hurwitz_zeta(BigReal::ratio(a, d, prec), s, ctx);
    if (e > 0) {
      sum += hz;
    } else {
      sum -= hz;
    }
  }
  return sum * pow(BigReal::from_int(d, prec), -s);
}

}  // namespace cmperiods
