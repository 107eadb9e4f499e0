#include "cmperiods/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "cmperiods/errors.hpp"

namespace cmperiods {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

void widen_to(BigReal& a, const BigReal& b) {
  if (b.precision() > a.precision()) {
    mpfr_prec_round(a.raw(), b.precision(), kRnd);
  }
}

}  // namespace

BigReal BigReal::from_int(long v, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_si(r.v_, v, kRnd);
  return r;
}

BigReal BigReal::from_double(double v, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_d(r.v_, v, kRnd);
  return r;
}

BigReal BigReal::from_string(std::string_view text, mpfr_prec_t bits) {
  BigReal r(bits);
  std::string s(text);
  if (s.empty()) throw DomainError("empty number literal");
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, kRnd);
  if (end == s.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

BigReal BigReal::from_rational(const mpq_class& q, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_q(r.v_, q.get_mpq_t(), kRnd);
  return r;
}

BigReal BigReal::from_mpz(const mpz_class& z, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_z(r.v_, z.get_mpz_t(), kRnd);
  return r;
}

BigReal BigReal::ratio(long num, long den, mpfr_prec_t bits) {
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(q, bits);
}

BigReal BigReal::with_precision(mpfr_prec_t bits) const {
  BigReal r(bits);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0),
                v_);
  return std::string(buf.data());
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  widen_to(*this, o);
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  widen_to(*this, o);
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  widen_to(*this, o);
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  widen_to(*this, o);
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}
BigReal& BigReal::operator+=(long o) {
  mpfr_add_si(v_, v_, o, kRnd);
  return *this;
}
BigReal& BigReal::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, kRnd);
  return *this;
}
BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}
BigReal& BigReal::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, kRnd);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, kRnd);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater
                        : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater
                        : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  return os << x.to_string(static_cast<int>(x.precision() * 0.30103));
}

#define CMPERIODS_UNARY(name, fn)       \
  BigReal name(const BigReal& x) {      \
    BigReal r(x.precision());           \
    fn(r.raw(), x.raw(), kRnd);         \
    return r;                           \
  }

CMPERIODS_UNARY(abs, mpfr_abs)
CMPERIODS_UNARY(sqrt, mpfr_sqrt)
CMPERIODS_UNARY(exp, mpfr_exp)
CMPERIODS_UNARY(log, mpfr_log)
CMPERIODS_UNARY(sin, mpfr_sin)
CMPERIODS_UNARY(cos, mpfr_cos)
CMPERIODS_UNARY(cosh, mpfr_cosh)

#undef CMPERIODS_UNARY

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigReal pow(const BigReal& base, const BigReal& e) {
  BigReal r(std::max(base.precision(), e.precision()));
  mpfr_pow(r.raw(), base.raw(), e.raw(), kRnd);
  return r;
}

BigReal pow(const BigReal& base, long e) {
  BigReal r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), e, kRnd);
  return r;
}

BigReal root(const BigReal& x, unsigned long n) {
  BigReal r(x.precision());
  mpfr_rootn_ui(r.raw(), x.raw(), n, kRnd);
  return r;
}

BigReal pow10(long e, mpfr_prec_t bits) {
  BigReal ten = BigReal::from_int(10, bits);
  return pow(ten, e);
}

BigReal const_pi(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_pi(r.raw(), kRnd);
  return r;
}

BigReal const_euler(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_euler(r.raw(), kRnd);
  return r;
}

BigReal const_log2(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_log2(r.raw(), kRnd);
  return r;
}

int digits_agreed(const BigReal& err, const BigReal& scale, int cap) {
  if (err.is_zero()) return cap;
  BigReal rel = abs(err);
  if (!scale.is_zero()) rel /= abs(scale);
  if (!rel.is_finite()) return 0;
  BigReal l = log(rel) / log(BigReal::from_int(10, rel.precision()));
  double d = -l.to_double();
  if (d <= 0) return 0;
  return std::min(cap, static_cast<int>(std::floor(d)));
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigReal r = re * o.re - im * o.im;
  BigReal i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
  re *= o;
  im *= o;
  return *this;
}

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) {
  BigReal r(std::max(z.re.precision(), z.im.precision()));
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), kRnd);
  return r;
}

BigComplex conj(const BigComplex& z) { return BigComplex(z.re, -z.im); }

BigComplex inverse(const BigComplex& z) {
  BigReal n = norm(z);
  if (n.is_zero()) throw DomainError("inverse of complex zero");
  return BigComplex(z.re / n, -z.im / n);
}

BigComplex pow(const BigComplex& z, long n) {
  BigComplex base = n < 0 ? inverse(z) : z;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n)
                          : static_cast<unsigned long>(n);
  BigComplex acc(BigReal::from_int(1, z.precision()),
                 BigReal(z.precision()));
  while (e != 0) {
    if (e & 1UL) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

BigComplex unit_phase(const BigReal& theta) {
  BigReal s(theta.precision());
  BigReal c(theta.precision());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), kRnd);
  return BigComplex(std::move(c), std::move(s));
}

}  // namespace cmperiods
