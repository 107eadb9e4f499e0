#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's special-function code; MPFR's own implementations and brute
// force stand in instead.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "cmperiods/bigreal.hpp"
#include "cmperiods/quadforms.hpp"

namespace oracle {

using cmperiods::BigReal;

BigReal lngamma(const BigReal& x);
BigReal gamma(const BigReal& x);
BigReal zeta(const BigReal& s);
/// Gamma(a, x) for a > 0 via mpfr_gamma_inc.
BigReal gamma_inc(const BigReal& a, const BigReal& x);
BigReal pi(mpfr_prec_t bits);

/// Legendre symbol by Euler's criterion with GMP powm.
int legendre(long a, long p);
/// Kronecker symbol (-d | a) through the prime factorization of d and
/// quadratic reciprocity-free definitions (Legendre by Euler's criterion,
/// (-d | 2) by d mod 8).
int kronecker_neg_d(long d, long a);

/// Reduced forms of discriminant -d from the raw definition |b| <= a <= c.
std::vector<cmperiods::QuadForm> scan_reduced_forms(long d);

/// All (x, y) with x^2 + d y^2 = 4n, by a box search.
std::vector<cmperiods::QuadInteger> box_norm_solutions(long d, long n);

/// int_lo^hi f(u) du by tanh-sinh quadrature at the precision of lo.
template <typename F>
BigReal tanh_sinh(F f, const BigReal& lo, const BigReal& hi, int levels);

bool is_prime(long n);

/// Deterministic generator for property tests.
std::mt19937_64& rng();

}  // namespace oracle

#include "oracles_impl.hpp"
