#pragma once

#include <vector>

#include "cmperiods/lseries.hpp"
#include "cmperiods/numkernel.hpp"
#include "cmperiods/quadforms.hpp"

namespace cmperiods {

/// A value Q(x, y) = q attained by `count` nonzero integer pairs.
struct FormValue {
  long q;
  long count;
};

/// Values of a positive definite form on nonzero pairs with Q <= max_q,
/// ascending in q.
std::vector<FormValue> form_values(const QuadForm& f, long max_q);

/// The literal lattice sum over nonzero pairs with Q <= max_q. No tail
/// control; used only as a sanity check at low precision.
BigReal epstein_truncated(const QuadForm& f, const BigReal& s, long max_q,
                          const PrecisionContext& ctx);

/// Z_Q(s) = sum' Q(x, y)^-s for real s > 1.1, summed over x in closed form
/// (Poisson summation per row), leaving an exponentially convergent series
/// of Bessel functions.
BigReal epstein_direct(const QuadForm& f, const BigReal& s,
                       const PrecisionContext& ctx);

/// Z_Q(s) for any real s != 1, through the theta-function splitting at the
/// self-dual point t = 2/sqrt(d):
///   Z(s) = (2 pi/sqrt d)^s / Gamma(s) [G(s) + 1/(s-1) - 1/s],
///   G(s) = sum' X^-s Gamma(s, X) + X^(s-1) Gamma(1-s, X),
/// with X = 2 pi Q(x, y) / sqrt d.
BigReal epstein_continued(const QuadForm& f, const BigReal& s,
                          const PrecisionContext& ctx);

/// Z_Q(0) and Z_Q'(0), the latter in closed form from the splitting:
///   Z'(0) = sum' [E1(X) + exp(-X)/X] - 1 - gamma - log(2 pi/sqrt d).
SZeroJet epstein_jet(const QuadForm& f, const PrecisionContext& ctx);

/// The same jet from epstein_continued by central differences with step
/// 10^(-target/4) at quadrupled precision, one Richardson step.
SZeroJet epstein_jet_finite_difference(const QuadForm& f,
                                       const PrecisionContext& ctx);

}  // namespace cmperiods
