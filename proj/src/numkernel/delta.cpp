#include <cmath>

#include "cmperiods/errors.hpp"
#include "cmperiods/numkernel.hpp"

namespace cmperiods {

namespace {

constexpr mpfr_prec_t kExtraBits = 32;

void check_lattice(const Lattice& lattice) {
  if (!(lattice.tau.im > 0)) {
    throw DomainError("lattice requires Im(tau) > 0");
  }
  if (lattice.scale.re.is_zero() && lattice.scale.im.is_zero()) {
    throw DomainError("lattice scale must be nonzero");
  }
}

}  // namespace

int delta_cutoff(const Lattice& lattice, const PrecisionContext& ctx) {
  check_lattice(lattice);
  // |q|^N = exp(-2 pi N Im tau) < 10^-(working + 10)
  const double im = lattice.tau.im.to_double();
  const double needed = (ctx.working_digits() + 10) * std::log(10.0);
  return static_cast<int>(std::ceil(needed / (2 * M_PI * im))) + 1;
}

BigComplex delta_lattice_truncated(const Lattice& lattice, int cutoff,
                                   const PrecisionContext& ctx) {
  check_lattice(lattice);
  if (cutoff < 1) throw DomainError("q-product cutoff must be positive");
  const mpfr_prec_t prec = ctx.bits() + kExtraBits;

  BigReal two_pi = const_pi(prec) * 2;
  BigReal modulus = exp(-(two_pi * lattice.tau.im.with_precision(prec)));
  BigComplex q = unit_phase(two_pi * lattice.tau.re.with_precision(prec));
  q *= modulus;

  BigComplex one(BigReal::from_int(1, prec), BigReal(prec));
  BigComplex product = one;
  BigComplex q_power = q;
  for (int n = 1; n <= cutoff; ++n) {
    product *= (one - q_power);
    q_power *= q;
  }

  BigComplex scale(lattice.scale.re.with_precision(prec),
                   lattice.scale.im.with_precision(prec));
  BigComplex result = pow(product, 24) * q;
  result *= pow(two_pi, 12);
  result *= pow(scale, -12);
  return BigComplex(result.re.with_precision(ctx.bits()),
                    result.im.with_precision(ctx.bits()));
}

BigComplex delta_lattice(const Lattice& lattice, const PrecisionContext& ctx) {
  return delta_lattice_truncated(lattice, delta_cutoff(lattice, ctx), ctx);
}

}  // namespace cmperiods
