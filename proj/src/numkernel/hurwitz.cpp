#include <cmath>

#include "cmperiods/errors.hpp"
#include "cmperiods/numkernel.hpp"

namespace cmperiods {

namespace {

constexpr mpfr_prec_t kExtraBits = 48;

struct EulerMaclaurinResult {
  BigReal value;
  bool converged;
};

// sum_{n<N} (n+x)^-s + u^(1-s)/(s-1) + u^-s/2
//   + sum_k B_2k/(2k)! (s)_(2k-1) u^(-s-2k+1),   u = N + x.
EulerMaclaurinResult euler_maclaurin(const BigReal& x, const BigReal& s,
                                     long n_direct, int max_terms,
                                     const BigReal& budget, mpfr_prec_t prec) {
  BigReal sum(prec);
  BigReal neg_s = -s;
  for (long n = 0; n < n_direct; ++n) sum += pow(x + n, neg_s);

  BigReal u = x + n_direct;
  BigReal u_neg_s = pow(u, neg_s);
  sum += u * u_neg_s / (s - 1);
  sum += u_neg_s / 2;

  BigReal inv_u2 = 1 / (u * u);
  BigReal u_power = u_neg_s / u;  // u^(-s-1)
  BigReal rising = s;             // (s)_1
  mpz_class factorial = 2;        // (2k)!
  BigReal previous(prec);
  for (int k = 1; k <= max_terms; ++k) {
    mpq_class coeff = bernoulli(2 * k) / mpq_class(factorial);
    BigReal term = BigReal::from_rational(coeff, prec) * rising * u_power;
    sum += term;
    BigReal mag = abs(term);
    if (mag < budget) return {sum, true};
    if (k > 1 && mag > previous) return {sum, false};
    previous = mag;
    // (s)_(2k+1) = (s)_(2k-1) (s+2k-1)(s+2k)
    rising *= (s + (2 * k - 1));
    rising *= (s + 2 * k);
    u_power *= inv_u2;
    factorial *= (2 * k + 1) * (2 * k + 2);
  }
  return {sum, false};
}

}  // namespace

BigReal hurwitz_zeta(const BigReal& x, const BigReal& s,
                     const PrecisionContext& ctx) {
  if (!(x > 0) || x > 1) throw DomainError("hurwitz_zeta requires 0 < x <= 1");
  if (s == 1) throw PoleError("hurwitz_zeta has a pole at s = 1");

  const mpfr_prec_t prec = ctx.bits() + kExtraBits;
  const int wd = ctx.working_digits();
  BigReal xx = x.with_precision(prec);
  BigReal ss = s.with_precision(prec);
  BigReal budget = pow10(-(wd + 8), prec);

  // The direct-sum length grows with the exponent's negative part so the
  // correction terms still decrease.
  double sigma = s.to_double();
  long n_direct = static_cast<long>(std::ceil(wd / 3.0)) +
                  static_cast<long>(std::max(0.0, -sigma));
  int max_terms = static_cast<int>(std::ceil(wd / 3.0)) + 8;
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto r = euler_maclaurin(xx, ss, n_direct, max_terms, budget, prec);
    if (r.converged) return r.value.with_precision(ctx.bits());
    n_direct *= 2;
    max_terms += max_terms / 2;
  }
  throw PrecisionError("Euler-Maclaurin did not converge for hurwitz_zeta", 0);
}

BigReal riemann_zeta(const BigReal& s, const PrecisionContext& ctx) {
  return hurwitz_zeta(BigReal::from_int(1, ctx.bits()), s, ctx);
}

}  // namespace cmperiods
