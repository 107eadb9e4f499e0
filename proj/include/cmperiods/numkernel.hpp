#pragma once

#include <gmpxx.h>

#include "cmperiods/bigreal.hpp"
#include "cmperiods/precision.hpp"

namespace cmperiods {

/// The lattice scale * (Z + Z*tau), Im(tau) > 0.
struct Lattice {
  BigComplex tau;
  BigComplex scale;
};

/// Exact Bernoulli number B_n with B_1 = -1/2. Thread-safe, cached.
mpq_class bernoulli(unsigned n);

/// log Gamma(x) for real x > 0. The argument is shifted past 1.2 * working
/// digits before the Stirling series is applied; the series is cut once a
/// term (which bounds the tail for real arguments) drops below the budget.
BigReal log_gamma(const BigReal& x, const PrecisionContext& ctx);

/// log Gamma(a/d) for 0 < a/d; no coprimality requirement.
BigReal log_gamma_ratio(long a, long d, const PrecisionContext& ctx);

/// Gamma(a/d) for 0 < a < d, gcd(a, d) = 1.
BigReal gamma_rational(long a, long d, const PrecisionContext& ctx);

/// Gamma(x) for any real x that is not a pole.
BigReal gamma_real(const BigReal& x, const PrecisionContext& ctx);

/// Euler beta B(u, v) = Gamma(u)Gamma(v)/Gamma(u+v) for u, v > 0.
BigReal beta(const BigReal& u, const BigReal& v, const PrecisionContext& ctx);
BigReal log_beta(const BigReal& u, const BigReal& v,
                 const PrecisionContext& ctx);

/// Hurwitz zeta H(x, s) = sum_{n>=0} (n+x)^-s, analytically continued in s
/// by Euler-Maclaurin summation. Requires 0 < x <= 1 and s != 1.
BigReal hurwitz_zeta(const BigReal& x, const BigReal& s,
                     const PrecisionContext& ctx);

/// Riemann zeta as H(1, s).
BigReal riemann_zeta(const BigReal& s, const PrecisionContext& ctx);

/// Number of q-product factors needed for delta_lattice at this precision.
int delta_cutoff(const Lattice& lattice, const PrecisionContext& ctx);

/// Delta(scale*(Z + Z tau)) = scale^-12 (2 pi)^12 q prod (1 - q^n)^24 with
/// q = exp(2 pi i tau).
BigComplex delta_lattice(const Lattice& lattice, const PrecisionContext& ctx);

/// delta_lattice with an explicit number of product factors.
BigComplex delta_lattice_truncated(const Lattice& lattice, int cutoff,
                                   const PrecisionContext& ctx);

/// Upper incomplete gamma Gamma(a, x) for real a and x > 0.
BigReal upper_incomplete_gamma(const BigReal& a, const BigReal& x,
                               const PrecisionContext& ctx);

/// Exponential integral E1(x) = Gamma(0, x), x > 0.
BigReal exp_integral_e1(const BigReal& x, const PrecisionContext& ctx);

/// Modified Bessel function K_nu(x), x > 0, by the trapezoid rule on
/// int_0^inf exp(-x cosh t) cosh(nu t) dt.
BigReal bessel_k(const BigReal& nu, const BigReal& x,
                 const PrecisionContext& ctx);

}  // namespace cmperiods
