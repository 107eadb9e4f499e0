#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmperiods/numkernel.hpp"

namespace cmperiods {

/// <x> = x - floor(x).
mpq_class frac(const mpq_class& x);

/// CM type of the Jacobian of y^p = x^r (1-x)^s, r + s + t = p.
struct CMTypeRecord {
  long p = 0;
  long r = 0, s = 0, t = 0;
  /// a in 1..p-1 with <ar/p> + <as/p> + <at/p> = 1, ascending.
  std::vector<long> phi;
  long u = 0;  // residues in phi
  long v = 0;  // non-residues in phi
};

/// Throws DomainError unless p is a prime = 3 mod 4, p > 3, and r, s, t are
/// positive with r + s + t = p.
CMTypeRecord cm_type(long p, long r, long s, long t);

/// eps(r) + eps(s) + eps(t) with eps the Legendre symbol mod p.
int epsilon_rst(long p, long r, long s, long t);

/// prod over residues a of B(<ar/p>, <as/p>).
BigReal beta_period(long p, long r, long s, long t, const PrecisionContext& ctx);

/// (2 pi)^-n prod over residues a of Gamma(<ar/p>) Gamma(<as/p>) Gamma(<at/p>),
/// n = (p-1)/2.
BigReal gamma_period(long p, long r, long s, long t, const PrecisionContext& ctx);

/// A real ratio that an identity "up to k*" predicts to be rational, or a
/// rational multiple of sqrt(p).
struct RatioCertificate {
  std::string name;
  BigReal ratio;
  /// q with ratio = q (or q sqrt(p) when sqrt_p is set), kept only when
  /// |ratio - recognized| < 10^(-target+20) |ratio|.
  std::optional<mpq_class> recognized;
  bool sqrt_p = false;
  mpz_class height = 0;
  /// Recognized with height below the bound.
  bool pass = false;
};

/// Tries ratio as a rational with denominator <= max_den, then as a rational
/// multiple of sqrt(p); a window hit that misses the tolerance falls through.
/// The denominator bound is capped at 10^((target-20)/4) so that a window
/// hit on an irrational ratio cannot also meet the tolerance.
RatioCertificate certify_ratio(std::string name, const BigReal& ratio, long p,
                               const mpz_class& max_den, const mpz_class& max_height,
                               const PrecisionContext& ctx);

/// Denominator bound for recognition: 10^12.
mpz_class default_max_den();

/// beta_period / gamma_period, predicted to be rational times sqrt(p).
RatioCertificate beta_gamma_certificate(long p, long r, long s, long t,
                                        const PrecisionContext& ctx);

/// prod_{eps(a)=+1} Gamma(<ar/p>) against prod_{eps(a)=+1} Gamma(a/p):
/// their quotient when eps(r) = +1, and their product over (2 pi)^n when
/// eps(r) = -1.
RatioCertificate residue_twist_certificate(long p, long r,
                                           const PrecisionContext& ctx);

/// The period of C(r, s, t) against prod_{eps(a)=+1} Gamma(a/p): for
/// eps(r,s,t) = +1 the ratio beta_period / prod Gamma(a/p), for -1 the ratio
/// beta_period prod Gamma(a/p) / (2 pi)^n. Throws DomainError unless
/// eps(r,s,t) = +-1.
RatioCertificate tate_twist_certificate(long p, long r, long s, long t,
                                        const PrecisionContext& ctx);

/// beta_period (2 pi)^m / prod_{eps(a)=+1} Gamma(a/p), m = (p-1)/4 - h/2,
/// with the same recognition as the other certificates.
RatioCertificate twisted_gamma_ratio(long p, long r, long s, long t,
                                     const PrecisionContext& ctx);

/// Every (r, s, t) with r + s + t = p, all positive, in lexicographic order.
std::vector<std::vector<long>> all_triples(long p);

}  // namespace cmperiods
