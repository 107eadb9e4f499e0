#include <algorithm>
#include <cmath>

#include "cmperiods/errors.hpp"
#include "cmperiods/relint.hpp"

namespace cmperiods {

namespace {

mpz_class nearest_integer(const BigReal& v) {
  mpz_class out;
  BigReal shifted = floor(v + BigReal::ratio(1, 2, v.precision()));
  mpfr_get_z(out.get_mpz_t(), shifted.raw(), MPFR_RNDN);
  return out;
}

BigReal to_real(const mpz_class& z, mpfr_prec_t prec) {
  return BigReal::from_mpz(z, prec);
}

}  // namespace

std::optional<Relation> pslq(const std::vector<BigReal>& xs,
                             const mpz_class& max_coeff,
                             const PrecisionContext& ctx) {
  const std::size_t n = xs.size();
  if (n < 2) throw DomainError("pslq needs at least two numbers");
  if (max_coeff < 1) throw DomainError("pslq needs max_coeff >= 1");
  const mpfr_prec_t prec = ctx.bits();

  BigReal x_max(prec);
  for (const BigReal& x : xs) {
    if (!x.is_finite()) throw DomainError("pslq input is not finite");
    if (abs(x) > x_max) x_max = abs(x);
  }
  if (x_max.is_zero()) throw DomainError("pslq input is all zero");
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i].is_zero()) {
      Relation r{std::vector<mpz_class>(n, 0), BigReal(prec)};
      r.coeffs[i] = 1;
      return r;
    }
  }

  // gamma > 2/sqrt(3)
  const BigReal gamma = sqrt(BigReal::ratio(4, 3, prec)) + BigReal::ratio(1, 100, prec);
  const BigReal detect = pow10(-(2 * ctx.target_digits()) / 3, prec);
  const BigReal residual_bound = pow10(-ctx.target_digits() / 2, prec) * x_max;
  const BigReal coeff_limit = to_real(max_coeff, prec) *
                              sqrt(BigReal::from_int(static_cast<long>(n), prec));
  const BigReal exhausted = pow10(ctx.working_digits() / 2, prec);
  const long max_iterations = 200L * static_cast<long>(n) * ctx.working_digits();

  std::vector<BigReal> s(n, BigReal(prec));
  {
    BigReal acc(prec);
    for (std::size_t k = n; k-- > 0;) {
      acc += xs[k].with_precision(prec) * xs[k].with_precision(prec);
      s[k] = sqrt(acc);
    }
  }
  std::vector<BigReal> y(n, BigReal(prec));
  for (std::size_t k = 0; k < n; ++k) y[k] = xs[k].with_precision(prec) / s[0];
  const BigReal s0 = s[0];
  for (auto& v : s) v /= s0;

  // H is n x (n-1), lower trapezoidal.
  std::vector<std::vector<BigReal>> h(n, std::vector<BigReal>(n - 1, BigReal(prec)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n && j <= i; ++j) {
      if (i == j) {
        h[i][j] = s[j + 1] / s[j];
      } else {
        h[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  }
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
  std::vector<std::vector<mpz_class>> b(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = b[i][i] = 1;

  auto reduce_entry = [&](std::size_t i, std::size_t j) {
    mpz_class t = nearest_integer(h[i][j] / h[j][j]);
    if (t == 0) return;
    const BigReal tr = to_real(t, prec);
    y[j] += tr * y[i];
    for (std::size_t k = 0; k <= j; ++k) h[i][k] -= tr * h[j][k];
    for (std::size_t k = 0; k < n; ++k) {
      a[i][k] -= t * a[j][k];
      b[k][j] += t * b[k][i];
    }
  };

  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j-- > 0;) reduce_entry(i, j);
  }

  for (long iter = 0; iter < max_iterations; ++iter) {
    // Bound: every relation has norm >= 1 / max |H_jj|.
    BigReal h_max(prec);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (abs(h[j][j]) > h_max) h_max = abs(h[j][j]);
    }
    if (h_max.is_zero() || 1 / h_max > coeff_limit) return std::nullopt;

    std::size_t best = 0;
    BigReal best_y = abs(y[0]);
    for (std::size_t j = 1; j < n; ++j) {
      if (abs(y[j]) < best_y) {
        best_y = abs(y[j]);
        best = j;
      }
    }
    if (best_y < detect) {
      Relation r{std::vector<mpz_class>(n), BigReal(prec)};
      mpz_class c_max = 0;
      BigReal sum(prec);
      for (std::size_t k = 0; k < n; ++k) {
        r.coeffs[k] = b[k][best];
        if (abs(r.coeffs[k]) > c_max) c_max = abs(r.coeffs[k]);
        sum += to_real(r.coeffs[k], prec) * xs[k].with_precision(prec);
      }
      r.residual = abs(sum);
      if (c_max > max_coeff) return std::nullopt;
      if (r.residual < residual_bound * to_real(c_max, prec)) return r;
      throw PrecisionError("pslq: relation candidate fails the residual bound",
                           ctx.target_digits() / 2);
    }

    // Exchange step.
    std::size_t m = 0;
    BigReal m_val(prec);
    BigReal g_pow = gamma;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      BigReal v = g_pow * abs(h[j][j]);
      if (v > m_val) {
        m_val = v;
        m = j;
      }
      g_pow *= gamma;
    }
    std::swap(y[m], y[m + 1]);
    std::swap(a[m], a[m + 1]);
    std::swap(h[m], h[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);
    if (m + 2 < n) {
      const BigReal t0 = sqrt(h[m][m] * h[m][m] + h[m][m + 1] * h[m][m + 1]);
      const BigReal t1 = h[m][m] / t0;
      const BigReal t2 = h[m][m + 1] / t0;
      for (std::size_t i = m; i < n; ++i) {
        const BigReal t3 = h[i][m];
        const BigReal t4 = h[i][m + 1];
        h[i][m] = t1 * t3 + t2 * t4;
        h[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      for (std::size_t j = std::min(i - 1, m + 1) + 1; j-- > 0;) reduce_entry(i, j);
    }

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (abs(to_real(b[i][k], prec)) > exhausted) {
          throw PrecisionError("pslq: working precision exhausted",
                               ctx.target_digits() / 2);
        }
      }
    }
  }
  throw PrecisionError("pslq: iteration cap reached", ctx.target_digits() / 2);
}

}  // namespace cmperiods
