#include "cmperiods/fermat.hpp"

#include <algorithm>

#include "cmperiods/csperiods.hpp"
#include "cmperiods/errors.hpp"
#include "cmperiods/modarith.hpp"
#include "cmperiods/relint.hpp"

namespace cmperiods {

namespace {

void check_prime(long p) {
  if (p <= 3 || p % 4 != 3 || !modarith::is_prime(static_cast<modarith::u64>(p))) {
    throw DomainError("p = " + std::to_string(p) +
                      " is not a prime = 3 mod 4 above 3");
  }
}

void check_triple(long p, long r, long s, long t) {
  check_prime(p);
  if (r <= 0 || s <= 0 || t <= 0 || r + s + t != p) {
    throw DomainError("(r, s, t) must be positive with r + s + t = p");
  }
}

int eps(long a, long p) {
  return modarith::legendre(a, static_cast<modarith::u64>(p));
}

std::vector<long> residues(long p) {
  std::vector<long> out;
  for (long a = 1; a < p; ++a) {
    if (eps(a, p) == 1) out.push_back(a);
  }
  return out;
}

// sum over residues a of log Gamma(a/p)
BigReal log_residue_gamma(long p, const PrecisionContext& ctx) {
  BigReal sum(ctx.bits());
  for (long a : residues(p)) sum += log_gamma_ratio(a, p, ctx);
  return sum;
}

// sum over residues a of log Gamma(<ar/p>)
BigReal log_twisted_gamma(long p, long r, const PrecisionContext& ctx) {
  BigReal sum(ctx.bits());
  for (long a : residues(p)) sum += log_gamma_ratio(a * r % p, p, ctx);
  return sum;
}

BigReal log_beta_period(long p, long r, long s, const PrecisionContext& ctx) {
  BigReal sum(ctx.bits());
  for (long a : residues(p)) {
    const long x = a * r % p, y = a * s % p;
    sum += log_gamma_ratio(x, p, ctx) + log_gamma_ratio(y, p, ctx) -
           log_gamma_ratio(x + y, p, ctx);
  }
  return sum;
}

BigReal log_two_pi(const PrecisionContext& ctx) {
  return log(const_pi(ctx.bits()) * 2);
}

PrecisionContext inner(const PrecisionContext& ctx) {
  return PrecisionContext(ctx.target_digits(), ctx.guard_digits() + 10);
}

}  // namespace

mpq_class frac(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class out = x - fl;
  out.canonicalize();
  return out;
}

CMTypeRecord cm_type(long p, long r, long s, long t) {
  check_triple(p, r, s, t);
  CMTypeRecord rec{p, r, s, t, {}, 0, 0};
  for (long a = 1; a < p; ++a) {
    mpq_class total = frac(mpq_class(a * r, p)) + frac(mpq_class(a * s, p)) +
                      frac(mpq_class(a * t, p));
    if (total != 1) continue;
    rec.phi.push_back(a);
    if (eps(a, p) == 1) {
      ++rec.u;
    } else {
      ++rec.v;
    }
  }
  return rec;
}

int epsilon_rst(long p, long r, long s, long t) {
  check_triple(p, r, s, t);
  return eps(r, p) + eps(s, p) + eps(t, p);
}

BigReal beta_period(long p, long r, long s, long t, const PrecisionContext& ctx) {
  check_triple(p, r, s, t);
  const PrecisionContext in = inner(ctx);
  return exp(log_beta_period(p, r, s, in)).with_precision(ctx.bits());
}

BigReal gamma_period(long p, long r, long s, long t, const PrecisionContext& ctx) {
  check_triple(p, r, s, t);
  const PrecisionContext in = inner(ctx);
  BigReal lg = log_twisted_gamma(p, r, in) + log_twisted_gamma(p, s, in) +
               log_twisted_gamma(p, t, in) - log_two_pi(in) * ((p - 1) / 2);
  return exp(lg).with_precision(ctx.bits());
}

mpz_class default_max_den() {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 10, 12);
  return v;
}

RatioCertificate certify_ratio(std::string name, const BigReal& ratio, long p,
                               const mpz_class& max_den,
                               const mpz_class& max_height,
                               const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  RatioCertificate cert{std::move(name), ratio.with_precision(prec), {}, false,
                        0, false};
  const BigReal tol = pow10(-(ctx.target_digits() - 20), prec) * abs(cert.ratio);
  const BigReal root_p = sqrt(BigReal::from_int(p, prec));
  mpz_class den_bound;
  mpz_ui_pow_ui(den_bound.get_mpz_t(), 10,
                static_cast<unsigned long>(std::max(1, (ctx.target_digits() - 20) / 4)));
  if (max_den < den_bound) den_bound = max_den;
  // A convergent inside the recognition window can still miss the ratio by
  // far more than the working precision; such a hit is not a recognition.
  auto accept = [&](const std::optional<mpq_class>& q, bool with_root) {
    if (!q) return false;
    BigReal exact = BigReal::from_rational(*q, prec);
    if (with_root) exact *= root_p;
    if (!(abs(cert.ratio - exact) < tol)) return false;
    cert.recognized = q;
    cert.sqrt_p = with_root;
    cert.height = height(*q);
    return true;
  };
  if (!accept(recognize_rational(cert.ratio, den_bound, ctx), false) &&
      !accept(recognize_sqrtp(cert.ratio, p, den_bound, ctx), true)) {
    return cert;
  }
  cert.pass = cert.height < max_height;
  return cert;
}

namespace {

mpz_class height_bound() {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 10, 8);
  return v;
}

}  // namespace

RatioCertificate beta_gamma_certificate(long p, long r, long s, long t,
                                        const PrecisionContext& ctx) {
  check_triple(p, r, s, t);
  const PrecisionContext in = inner(ctx);
  BigReal lg = log_beta_period(p, r, s, in) -
               (log_twisted_gamma(p, r, in) + log_twisted_gamma(p, s, in) +
                log_twisted_gamma(p, t, in) - log_two_pi(in) * ((p - 1) / 2));
  return certify_ratio("beta_over_gamma", exp(lg), p, default_max_den(),
                       height_bound(), ctx);
}

RatioCertificate residue_twist_certificate(long p, long r,
                                           const PrecisionContext& ctx) {
  check_prime(p);
  if (r <= 0 || r >= p) throw DomainError("need 0 < r < p");
  const PrecisionContext in = inner(ctx);
  BigReal lg = log_twisted_gamma(p, r, in);
  if (eps(r, p) == 1) {
    lg -= log_residue_gamma(p, in);
  } else {
    lg += log_residue_gamma(p, in) - log_two_pi(in) * ((p - 1) / 2);
  }
  return certify_ratio("residue_twist", exp(lg), p, default_max_den(),
                       height_bound(), ctx);
}

RatioCertificate tate_twist_certificate(long p, long r, long s, long t,
                                        const PrecisionContext& ctx) {
  const int e = epsilon_rst(p, r, s, t);
  if (e != 1 && e != -1) {
    throw DomainError("eps(r,s,t) = " + std::to_string(e) + ", need +1 or -1");
  }
  const PrecisionContext in = inner(ctx);
  BigReal lg = log_beta_period(p, r, s, in);
  if (e == 1) {
    lg -= log_residue_gamma(p, in);
  } else {
    lg += log_residue_gamma(p, in) - log_two_pi(in) * ((p - 1) / 2);
  }
  return certify_ratio("tate_twist", exp(lg), p, default_max_den(),
                       height_bound(), ctx);
}

RatioCertificate twisted_gamma_ratio(long p, long r, long s, long t,
                                     const PrecisionContext& ctx) {
  const int e = epsilon_rst(p, r, s, t);
  if (e != 1 && e != -1) {
    throw DomainError("eps(r,s,t) = " + std::to_string(e) + ", need +1 or -1");
  }
  const PrecisionContext in = inner(ctx);
  const mpq_class m = m_invariant(Discriminant::make(p));
  BigReal lg = log_beta_period(p, r, s, in) - log_residue_gamma(p, in);
  lg += log_two_pi(in) * m.get_num().get_si();
  return certify_ratio("beta_2pi_m_over_gamma", exp(lg), p, default_max_den(),
                       height_bound(), ctx);
}

std::vector<std::vector<long>> all_triples(long p) {
  std::vector<std::vector<long>> out;
  for (long r = 1; r < p; ++r) {
    for (long s = 1; r + s < p; ++s) out.push_back({r, s, p - r - s});
  }
  return out;
}

}  // namespace cmperiods
