#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cmperiods/bigreal.hpp"
#include "cmperiods/precision.hpp"

namespace cmperiods {

/// The unique q = n/m with m <= max_den and |x - q| < 1/(2 max_den^2), if any.
/// Found among the continued-fraction convergents of x.
std::optional<mpq_class> recognize_rational(const BigReal& x,
                                            const mpz_class& max_den,
                                            const PrecisionContext& ctx);

/// b with x = b sqrt(p), recognized as recognize_rational(x / sqrt(p)).
std::optional<mpq_class> recognize_sqrtp(const BigReal& x, long p,
                                         const mpz_class& max_den,
                                         const PrecisionContext& ctx);

/// max(|numerator|, denominator).
mpz_class height(const mpq_class& q);

struct Relation {
  std::vector<mpz_class> coeffs;
  /// |sum coeffs[i] * xs[i]| at the working precision.
  BigReal residual;
};

/// PSLQ integer relation search. Returns a relation with max |coeff| <=
/// max_coeff whose residual is below 10^(-target/2) max|x| max|coeff|, or
/// none once the algorithm proves no relation of that size exists. Throws
/// PrecisionError if the working precision runs out first.
std::optional<Relation> pslq(const std::vector<BigReal>& xs,
                             const mpz_class& max_coeff,
                             const PrecisionContext& ctx);

}  // namespace cmperiods
