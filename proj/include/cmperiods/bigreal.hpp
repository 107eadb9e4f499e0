#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace cmperiods {

/// Owning MPFR real. Binary operations round to the larger of the two
/// operand precisions; operations with machine integers keep the precision
/// of the BigReal operand. Rounding is always to nearest.
class BigReal {
 public:
  BigReal() : BigReal(mpfr_prec_t{64}) {}
  explicit BigReal(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  static BigReal from_int(long v, mpfr_prec_t bits);
  static BigReal from_double(double v, mpfr_prec_t bits);
  /// Decimal (or "inf"/"nan") literal; throws DomainError when malformed.
  static BigReal from_string(std::string_view text, mpfr_prec_t bits);
  static BigReal from_rational(const mpq_class& q, mpfr_prec_t bits);
  static BigReal from_mpz(const mpz_class& z, mpfr_prec_t bits);
  static BigReal ratio(long num, long den, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded to a different precision.
  BigReal with_precision(mpfr_prec_t bits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const { return mpfr_get_si(v_, MPFR_RNDD); }
  /// Base-2 exponent e with 0.5 <= |x|/2^e < 1; undefined for zero.
  long exponent2() const { return mpfr_get_exp(v_); }

  /// Scientific decimal representation with the given significant digits.
  std::string to_string(int digits) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator+=(long o);
  BigReal& operator-=(long o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

  friend BigReal operator+(BigReal a, const BigReal& b);
  friend BigReal operator-(BigReal a, const BigReal& b);
  friend BigReal operator*(BigReal a, const BigReal& b);
  friend BigReal operator/(BigReal a, const BigReal& b);
  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator+(long a, BigReal b) { return b += a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(long a, BigReal b) { return b *= a; }
  friend BigReal operator/(long a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a,
                                           const BigReal& b);
  friend bool operator==(const BigReal& a, long b) {
    return mpfr_cmp_si(a.v_, b) == 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

  friend std::ostream& operator<<(std::ostream& os, const BigReal& x);

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& e);
BigReal pow(const BigReal& base, long e);
BigReal floor(const BigReal& x);
/// Real n-th root of a non-negative number.
BigReal root(const BigReal& x, unsigned long n);
/// 10^e at the given precision.
BigReal pow10(long e, mpfr_prec_t bits);
BigReal const_pi(mpfr_prec_t bits);
BigReal const_euler(mpfr_prec_t bits);
BigReal const_log2(mpfr_prec_t bits);

/// Decimal digits of agreement: floor(-log10(err/scale)), clamped to
/// [0, cap]. A zero error reports cap.
int digits_agreed(const BigReal& err, const BigReal& scale, int cap);

/// Pair of BigReals with complex arithmetic; used only for q-series and
/// lattice data, so the surface is deliberately narrow.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const BigReal& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) {
    return a += b;
  }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) {
    return a -= b;
  }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) {
    return a *= b;
  }
  friend BigComplex operator*(BigComplex a, const BigReal& b) {
    return a *= b;
  }
};

BigReal norm(const BigComplex& z);  // |z|^2
BigReal abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex inverse(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
/// exp(i * theta).
BigComplex unit_phase(const BigReal& theta);

}  // namespace cmperiods
