#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cmperiods/numkernel.hpp"
#include "cmperiods/quadforms.hpp"

namespace cmperiods {

/// Outcome of comparing two computed sides of an identity (usually logs).
struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  BigReal lhs;
  BigReal rhs;
  BigReal abs_err;
  BigReal rel_err;
  int digits_agreed = 0;
  /// rel_err < 10^-(target - 20)
  bool pass = false;
};

IdentityReport compare(std::string name,
                       std::vector<std::pair<std::string, std::string>> inputs,
                       const BigReal& lhs, const BigReal& rhs,
                       const PrecisionContext& ctx);

/// Delta(a) Delta(a^-1) for the ideal of f, with the inverse ideal taken as
/// conj(a)/N(a). Throws ConsistencyError unless it is real and positive to
/// within 10^(-target+5) relatively.
BigReal delta_pair(const QuadForm& f, const PrecisionContext& ctx);

/// sum_i log(Delta(a_i) Delta(a_i^-1)) against
/// 12h log(2 pi/d) + 6w sum eps(a) log Gamma(a/d).
IdentityReport cs_verify(const Discriminant& disc, const PrecisionContext& ctx,
                         unsigned threads = 1);

/// Per-class Kronecker limit formula: (1/w) Z_Q'(0) from the Epstein
/// continuation against -(1/12w) log(Delta(a) Delta(a^-1)).
IdentityReport kronecker_verify(const Discriminant& disc, const QuadForm& f,
                                const PrecisionContext& ctx);

/// (|Delta(a)|/p^3)^(1/6) N(a) sqrt(p). Needs d = p prime, p = 3 mod 4, p > 3.
BigReal period_integral(const QuadForm& f, const Discriminant& p,
                        const PrecisionContext& ctx);

/// sum_i log period_integral(a_i) against h log(2 pi/p) + sum eps(a) log Gamma(a/p).
IdentityReport period_product_verify(const Discriminant& p,
                                     const PrecisionContext& ctx,
                                     unsigned threads = 1);

/// sum over quadratic residues 0 < a < p of a/p; throws ConsistencyError
/// unless it equals (p-1)/4 - h/2.
mpq_class m_invariant(const Discriminant& p);

BigReal faltings_height_periods(const Discriminant& p,
                                const PrecisionContext& ctx,
                                unsigned threads = 1);
BigReal faltings_height_L(const Discriminant& p, const PrecisionContext& ctx);

IdentityReport faltings_verify(const Discriminant& p,
                               const PrecisionContext& ctx,
                               unsigned threads = 1);

}  // namespace cmperiods
