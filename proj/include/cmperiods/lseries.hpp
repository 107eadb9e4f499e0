#pragma once

#include <gmpxx.h>

#include "cmperiods/numkernel.hpp"
#include "cmperiods/quadforms.hpp"

namespace cmperiods {

/// Value and first derivative at s = 0 of an analytically continued
/// Dirichlet series.
struct SZeroJet {
  BigReal value;
  BigReal deriv;

  /// deriv / value; throws DomainError when value is zero.
  BigReal dlog() const;
};

/// zeta(0) = -1/2, zeta'(0) = -log(2 pi)/2.
SZeroJet riemann_jet(const PrecisionContext& ctx);

/// -sum_{0<a<d} eps(a) a/d, exact. Equals 2h/w.
mpq_class dirichlet_value_exact(const Discriminant& disc);

/// L(eps, s) at s = 0 through Lerch's formula for the Hurwitz zeta.
SZeroJet dirichlet_jet(const Discriminant& disc, const PrecisionContext& ctx);

/// sum_{0<a<d} eps(a) log Gamma(a/d).
BigReal character_log_gamma_sum(const Discriminant& disc,
                                const PrecisionContext& ctx);

/// log(2 pi) - log d + (w/2h) sum eps(a) log Gamma(a/d).
BigReal zetak_dlog0(const Discriminant& disc, const PrecisionContext& ctx);

/// L(eps, s) = d^-s sum eps(a) H(a/d, s), any s != 1.
BigReal dirichlet_l(const Discriminant& disc, const BigReal& s,
                    const PrecisionContext& ctx);

}  // namespace cmperiods
