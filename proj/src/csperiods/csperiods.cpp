#include "cmperiods/csperiods.hpp"

#include "cmperiods/epstein.hpp"
#include "cmperiods/errors.hpp"
#include "cmperiods/lseries.hpp"
#include "cmperiods/parallel.hpp"

namespace cmperiods {

namespace {

void require_prime_regime(const Discriminant& p) {
  if (!p.is_prime_3mod4()) {
    throw DomainError("-" + std::to_string(p.d()) +
                      " is not -p with p prime, p = 3 mod 4, p > 3");
  }
}

std::vector<std::pair<std::string, std::string>> d_input(const Discriminant& disc,
                                                         const char* key) {
  return {{key, std::to_string(disc.d())}};
}

}  // namespace

IdentityReport compare(std::string name,
                       std::vector<std::pair<std::string, std::string>> inputs,
                       const BigReal& lhs, const BigReal& rhs,
                       const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  IdentityReport r{std::move(name), std::move(inputs), lhs.with_precision(prec),
                   rhs.with_precision(prec), BigReal(prec), BigReal(prec), 0,
                   false};
  r.abs_err = abs(r.lhs - r.rhs);
  BigReal scale = abs(r.lhs) > abs(r.rhs) ? abs(r.lhs) : abs(r.rhs);
  r.rel_err = scale.is_zero() ? r.abs_err : r.abs_err / scale;
  BigReal one = BigReal::from_int(1, prec);
  r.digits_agreed =
      digits_agreed(r.abs_err, scale > one ? scale : one, ctx.working_digits());
  r.pass = r.rel_err < pow10(-(ctx.target_digits() - 20), prec);
  return r;
}

BigReal delta_pair(const QuadForm& f, const PrecisionContext& ctx) {
  BigComplex p = delta_lattice(form_to_lattice(f, ctx), ctx) *
                 delta_lattice(inverse_ideal_lattice(f, ctx), ctx);
  const BigReal tol = pow10(-(ctx.target_digits() - 5), ctx.bits());
  if (!(p.re > 0) || abs(p.im) > tol * p.re) {
    throw ConsistencyError("Delta(a) Delta(a^-1) is not positive real for " +
                           f.to_string());
  }
  return p.re;
}

IdentityReport cs_verify(const Discriminant& disc, const PrecisionContext& ctx,
                         unsigned threads) {
  const mpfr_prec_t prec = ctx.bits();
  const ClassGroup group = reduced_forms(disc);
  const long h = static_cast<long>(group.h());
  auto logs = parallel_map(group.h(), threads, [&](std::size_t i) {
    return log(delta_pair(group.forms[i], ctx));
  });
  BigReal lhs(prec);
  for (const BigReal& v : logs) lhs += v;
  BigReal rhs = log(const_pi(prec) * 2 / disc.d()) * (12 * h);
  rhs += character_log_gamma_sum(disc, ctx) * (6 * disc.w());
  return compare("chowla_selberg", d_input(disc, "d"), lhs, rhs, ctx);
}

IdentityReport kronecker_verify(const Discriminant& disc, const QuadForm& f,
                                const PrecisionContext& ctx) {
  if (f.discriminant() != -disc.d()) {
    throw DomainError(f.to_string() + " does not have discriminant -" +
                      std::to_string(disc.d()));
  }
  const SZeroJet jet = epstein_jet(f, ctx);
  BigReal lhs = jet.deriv / disc.w();
  BigReal rhs = -log(delta_pair(f, ctx)) / (12 * disc.w());
  return compare("kronecker_limit",
                 {{"d", std::to_string(disc.d())}, {"form", f.to_string()}},
                 lhs, rhs, ctx);
}

BigReal period_integral(const QuadForm& f, const Discriminant& p,
                        const PrecisionContext& ctx) {
  require_prime_regime(p);
  if (f.discriminant() != -p.d()) {
    throw DomainError(f.to_string() + " does not have discriminant -" +
                      std::to_string(p.d()));
  }
  const mpfr_prec_t prec = ctx.bits();
  BigReal delta_abs = abs(delta_lattice(form_to_lattice(f, ctx), ctx));
  BigReal p_real = BigReal::from_int(p.d(), prec);
  BigReal omega_sq = root(delta_abs / pow(p_real, 3), 6);
  return omega_sq * f.a * sqrt(p_real);
}

IdentityReport period_product_verify(const Discriminant& p,
                                     const PrecisionContext& ctx,
                                     unsigned threads) {
  require_prime_regime(p);
  const mpfr_prec_t prec = ctx.bits();
  const ClassGroup group = reduced_forms(p);
  auto logs = parallel_map(group.h(), threads, [&](std::size_t i) {
    return log(period_integral(group.forms[i], p, ctx));
  });
  BigReal lhs(prec);
  for (const BigReal& v : logs) lhs += v;
  BigReal rhs = log(const_pi(prec) * 2 / p.d()) * static_cast<long>(group.h());
  rhs += character_log_gamma_sum(p, ctx);
  return compare("period_product", d_input(p, "p"), lhs, rhs, ctx);
}

mpq_class m_invariant(const Discriminant& p) {
  require_prime_regime(p);
  const long d = p.d();
  mpz_class sum = 0;
  for (long a = 1; a < d; ++a) {
    if (kronecker_epsilon(a, p) == 1) sum += a;
  }
  mpq_class m(sum, d);
  m.canonicalize();
  const long h = static_cast<long>(reduced_forms(p).h());
  mpq_class closed = mpq_class(d - 1) / 4 - mpq_class(h) / 2;
  closed.canonicalize();
  if (m != closed) {
    throw ConsistencyError("m-invariant " + m.get_str() + " differs from " +
                           closed.get_str() + " for p = " + std::to_string(d));
  }
  return m;
}

BigReal faltings_height_periods(const Discriminant& p,
                                const PrecisionContext& ctx, unsigned threads) {
  require_prime_regime(p);
  const mpfr_prec_t prec = ctx.bits();
  const ClassGroup group = reduced_forms(p);
  auto logs = parallel_map(group.h(), threads, [&](std::size_t i) {
    return log(period_integral(group.forms[i], p, ctx));
  });
  BigReal sum(prec);
  for (const BigReal& v : logs) sum += v;
  const long h = static_cast<long>(group.h());
  return -sum / (2 * h) - log(BigReal::from_int(p.d(), prec)) / 4;
}

BigReal faltings_height_L(const Discriminant& p, const PrecisionContext& ctx) {
  require_prime_regime(p);
  const mpfr_prec_t prec = ctx.bits();
  BigReal out = -dirichlet_jet(p, ctx).dlog() / 2;
  out -= log(BigReal::from_int(p.d(), prec)) / 4;
  out -= log(const_pi(prec) * 2) / 2;
  return out;
}

IdentityReport faltings_verify(const Discriminant& p,
                               const PrecisionContext& ctx, unsigned threads) {
  return compare("faltings_height", d_input(p, "p"),
                 faltings_height_periods(p, ctx, threads),
                 faltings_height_L(p, ctx), ctx);
}

}  // namespace cmperiods
