#include "properties.hpp"

#include <algorithm>
#include <random>

#include "cmperiods/numkernel.hpp"
#include "cmperiods/quadforms.hpp"
#include "oracles.hpp"

using namespace cmperiods;

namespace props {

namespace {

// Tracks min over samples of digits(err / scale) and compares to a floor.
struct Tally {
  int worst = 1 << 30;
  bool ok = true;

  void add(const BigReal& err, const BigReal& scale, int needed) {
    const int got = digits_agreed(err, scale, 1000);
    worst = std::min(worst, got);
    if (!(err < pow10(-needed, err.precision()) * scale)) ok = false;
  }
};

BigReal random_rational(std::uniform_int_distribution<long>& num, long den, mpfr_prec_t prec) {
  return BigReal::ratio(num(oracle::rng()), den, prec);
}

}  // namespace

Outcome reflection(const PrecisionContext& ctx, int samples) {
  const auto prec = ctx.bits();
  const int needed = ctx.target_digits() - 5;
  const BigReal pi = const_pi(prec);
  std::uniform_int_distribution<long> den(2, 100000);
  Tally t;
  for (int i = 0; i < samples; ++i) {
    const long q = den(oracle::rng());
    std::uniform_int_distribution<long> num(1, q - 1);
    BigReal x = random_rational(num, q, prec);
    BigReal lhs = gamma_real(x, ctx) * gamma_real(1 - x, ctx) * sin(pi * x);
    t.add(abs(lhs - pi), BigReal::from_int(1, prec), needed);
  }
  return {"reflection", t.ok, t.worst};
}

Outcome duplication(const PrecisionContext& ctx, int samples) {
  const auto prec = ctx.bits();
  const int needed = ctx.target_digits() - 5;
  const BigReal sqrt_pi = sqrt(const_pi(prec));
  std::uniform_int_distribution<long> den(3, 100000);
  Tally t;
  for (int i = 0; i < samples; ++i) {
    const long q = 2 * den(oracle::rng());
    std::uniform_int_distribution<long> num(1, q / 2 - 1);
    BigReal x = random_rational(num, q, prec);
    BigReal lhs = gamma_real(x * 2, ctx) * sqrt_pi;
    BigReal rhs = pow(BigReal::from_int(2, prec), x * 2 - 1) * gamma_real(x, ctx) *
                  gamma_real(x + BigReal::ratio(1, 2, prec), ctx);
    t.add(abs(lhs - rhs), abs(rhs) > 1 ? abs(rhs) : BigReal::from_int(1, prec), needed);
  }
  return {"duplication", t.ok, t.worst};
}

Outcome gauss_product(const PrecisionContext& ctx) {
  const auto prec = ctx.bits();
  Tally t;
  for (const long p : {7L, 11L, 19L, 23L}) {
    BigReal prod = BigReal::from_int(1, prec);
    for (long a = 1; a < p; ++a) prod *= gamma_rational(a, p, ctx);
    BigReal rhs = pow(const_pi(prec) * 2, (p - 1) / 2) / sqrt(BigReal::from_int(p, prec));
    t.add(abs(prod - rhs), rhs, ctx.target_digits() - 10);
  }
  return {"gauss_product", t.ok, t.worst};
}

Outcome hurwitz_jet(const PrecisionContext& ctx, int samples) {
  const auto prec = ctx.bits();
  const int needed = ctx.target_digits() / 2;
  const BigReal h = pow10(-(ctx.target_digits() / 3), prec);
  const BigReal half_log_two_pi = log(const_pi(prec) * 2) / 2;
  std::uniform_int_distribution<long> num(1, 9999);
  Tally t;
  for (int i = 0; i < samples; ++i) {
    BigReal x = random_rational(num, 10000, prec);
    BigReal fd = (hurwitz_zeta(x, h, ctx) - hurwitz_zeta(x, -h, ctx)) / (h * 2);
    BigReal expected = log_gamma(x, ctx) - half_log_two_pi;
    t.add(abs(fd - expected), BigReal::from_int(1, prec), needed);
  }
  return {"hurwitz_jet", t.ok, t.worst};
}

Outcome delta_truncation(const PrecisionContext& ctx) {
  Tally t;
  for (const long d : {3L, 4L, 23L, 163L, 455L}) {
    for (const QuadForm& f : reduced_forms(Discriminant::make(d)).forms) {
      const Lattice lat = form_to_lattice(f, ctx);
      const int cutoff = delta_cutoff(lat, ctx);
      BigComplex base = delta_lattice_truncated(lat, cutoff, ctx);
      BigComplex doubled = delta_lattice_truncated(lat, 2 * cutoff, ctx);
      t.add(abs(doubled - base), abs(base), ctx.target_digits());
    }
  }
  return {"delta_truncation", t.ok, t.worst};
}

std::vector<Outcome> numkernel_battery(const PrecisionContext& ctx) {
  return {reflection(ctx, 200), duplication(ctx, 200), gauss_product(ctx),
          hurwitz_jet(ctx, 20), delta_truncation(ctx)};
}

}  // namespace props
