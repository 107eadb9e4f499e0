#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "cmperiods/errors.hpp"
#include "cmperiods/modarith.hpp"
#include "cmperiods/quadforms.hpp"

namespace cmperiods {

namespace {

using i128 = __int128;

long narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<long>::max() ||
      v < std::numeric_limits<long>::min()) {
    throw DomainError(std::string("64-bit overflow in ") + what);
  }
  return static_cast<long>(v);
}

// Floor division for i128.
i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Substitution multiply(const Substitution& m, const Substitution& n) {
  return {m.m00 * n.m00 + m.m01 * n.m10, m.m00 * n.m01 + m.m01 * n.m11,
          m.m10 * n.m00 + m.m11 * n.m10, m.m10 * n.m01 + m.m11 * n.m11};
}

// Translate x -> x + k y so that -a < b <= a.
void normalize(QuadForm& f, Substitution& sub) {
  i128 a = f.a, b = f.b, c = f.c;
  // k = floor((a - b) / (2a)) puts b + 2ak into (-a, a].
  i128 k = floor_div(a - b, 2 * a);
  if (k == 0) return;
  i128 nb = b + 2 * a * k;
  i128 nc = a * k * k + b * k + c;
  f.b = narrow(nb, "form normalization");
  f.c = narrow(nc, "form normalization");
  sub = multiply(sub, {1, narrow(k, "substitution"), 0, 1});
}

}  // namespace

bool QuadForm::is_reduced() const {
  if (a <= 0) return false;
  if (std::abs(b) > a || a > c) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

std::string QuadForm::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

ReductionResult reduce_with_substitution(const QuadForm& f) {
  if (f.a <= 0 || f.discriminant() >= 0) {
    throw DomainError("reduction needs a positive definite form, got " +
                      f.to_string());
  }
  ReductionResult r{f, {}};
  normalize(r.form, r.sub);
  while (r.form.a > r.form.c ||
         (r.form.a == r.form.c && r.form.b < 0)) {
    // (x, y) -> (-y, x): (a, b, c) -> (c, -b, a)
    r.form = {r.form.c, -r.form.b, r.form.a};
    r.sub = multiply(r.sub, {0, -1, 1, 0});
    normalize(r.form, r.sub);
  }
  return r;
}

QuadForm reduce(const QuadForm& f) { return reduce_with_substitution(f).form; }

QuadForm principal_form(const Discriminant& disc) {
  const long b = disc.d() % 2;
  return {1, b, (b * b + disc.d()) / 4};
}

std::size_t ClassGroup::index_of(const QuadForm& reduced) const {
  auto it = std::find(forms.begin(), forms.end(), reduced);
  if (it == forms.end()) {
    throw DomainError(reduced.to_string() + " is not a reduced form of -" +
                      std::to_string(disc.d()));
  }
  return static_cast<std::size_t>(it - forms.begin());
}

ClassGroup reduced_forms(const Discriminant& disc) {
  const long d = disc.d();
  ClassGroup group{disc, {}};
  const long a_max = static_cast<long>(std::sqrt(d / 3.0)) + 1;
  for (long a = 1; a <= a_max; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if (((b % 2) + 2) % 2 != d % 2) continue;
      long num = b * b + d;
      if (num % (4 * a) != 0) continue;
      QuadForm f{a, b, num / (4 * a)};
      if (f.is_reduced()) group.forms.push_back(f);
    }
  }
  std::sort(group.forms.begin(), group.forms.end(),
            [](const QuadForm& x, const QuadForm& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  return group;
}

Composition compose_unreduced(const QuadForm& f, const QuadForm& g) {
  const long disc = f.discriminant();
  if (disc != g.discriminant()) {
    throw DomainError("cannot compose " + f.to_string() + " and " +
                      g.to_string() + ": discriminants differ");
  }
  using modarith::ext_gcd;
  using modarith::i64;
  const i64 s = (f.b + g.b) / 2;
  i64 x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  const i64 g1 = ext_gcd(f.a, g.a, x1, y1);
  const i64 e = ext_gcd(g1, s, x2, y2);
  // u f.a + v g.a + w s = e
  const i128 u = static_cast<i128>(x1) * x2;
  const i128 v = static_cast<i128>(y1) * x2;
  const i128 w = y2;

  const i128 big_a = static_cast<i128>(f.a) * g.a / (static_cast<i128>(e) * e);
  const i128 num = static_cast<i128>(f.a) * g.b * u +
                   static_cast<i128>(g.a) * f.b * v +
                   w * ((static_cast<i128>(f.b) * g.b + disc) / 2);
  if (num % e != 0) throw ConsistencyError("composition: e does not divide B");
  const i128 two_a = 2 * big_a;
  i128 big_b = num / e;
  big_b %= two_a;
  if (big_b < 0) big_b += two_a;
  if (big_b > big_a) big_b -= two_a;
  const i128 c_num = big_b * big_b - disc;
  if (c_num % (4 * big_a) != 0) {
    throw ConsistencyError("composition: 4A does not divide B^2 - D");
  }
  QuadForm out{narrow(big_a, "composition"), narrow(big_b, "composition"),
               narrow(c_num / (4 * big_a), "composition")};
  return {out, static_cast<long>(e)};
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  return reduce(compose_unreduced(f, g).form);
}

QuadForm power(const QuadForm& f, long n) {
  if (n < 0) return power(inverse(f), -n);
  const long d = -f.discriminant();
  QuadForm result{1, d % 2, (d % 2 + d) / 4};
  QuadForm base = reduce(f);
  while (n != 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n != 0) base = compose(base, base);
  }
  return result;
}

QuadForm inverse(const QuadForm& f) { return reduce(f.mirrored()); }

Lattice form_to_lattice(const QuadForm& f, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  const long d = -f.discriminant();
  if (f.a <= 0 || d <= 0) {
    throw DomainError("form_to_lattice needs a positive definite form");
  }
  BigComplex tau(BigReal::ratio(-f.b, 2 * f.a, prec),
                 sqrt(BigReal::from_int(d, prec)) / (2 * f.a));
  BigComplex scale(BigReal::from_int(f.a, prec), BigReal(prec));
  return {std::move(tau), std::move(scale)};
}

Lattice inverse_ideal_lattice(const QuadForm& f, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  const long d = -f.discriminant();
  if (f.a <= 0 || d <= 0) {
    throw DomainError("inverse_ideal_lattice needs a positive definite form");
  }
  BigComplex tau(BigReal::ratio(f.b, 2 * f.a, prec),
                 sqrt(BigReal::from_int(d, prec)) / (2 * f.a));
  BigComplex scale(BigReal::from_int(1, prec), BigReal(prec));
  return {std::move(tau), std::move(scale)};
}

}  // namespace cmperiods
