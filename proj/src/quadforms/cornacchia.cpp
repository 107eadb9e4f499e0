#include <algorithm>
#include <cmath>
#include <set>

#include "cmperiods/errors.hpp"
#include "cmperiods/modarith.hpp"
#include "cmperiods/quadforms.hpp"

namespace cmperiods {

namespace {

using i128 = __int128;

// Primitive solutions of x^2 + d y^2 = 4m, one per root t of t^2 = -d mod 4m
// (t in [0, 2m)) whose form (m, t, *) is principal.
std::vector<QuadInteger> primitive_solutions(const Discriminant& disc, long m) {
  const long d = disc.d();
  const QuadForm principal = principal_form(disc);
  std::vector<QuadInteger> out;
  for (auto t_u : modarith::sqrt_mod(-d, static_cast<modarith::u64>(4 * m))) {
    const long t = static_cast<long>(t_u);
    if (t >= 2 * m) continue;
    const i128 c_num = static_cast<i128>(t) * t + d;
    const QuadForm g{m, t, static_cast<long>(c_num / (4 * m))};
    const ReductionResult r = reduce_with_substitution(g);
    if (r.form != principal) continue;
    // principal(v) = g(S v), so principal(S^-1 (1,0)) = g(1,0) = m, with
    // S^-1 (1, 0) = (m11, -m10).
    const long x = r.sub.m11;
    const long y = -r.sub.m10;
    out.push_back({2 * x + principal.b * y, y});
  }
  return out;
}

}  // namespace

mpz_class norm(const QuadInteger& z, const Discriminant& disc) {
  mpz_class x = z.x, y = z.y;
  return (x * x + disc.d() * y * y) / 4;
}

QuadInteger multiply(const QuadInteger& u, const QuadInteger& v,
                     const Discriminant& disc) {
  const i128 re = static_cast<i128>(u.x) * v.x -
                  static_cast<i128>(disc.d()) * u.y * v.y;
  const i128 im = static_cast<i128>(u.x) * v.y + static_cast<i128>(v.x) * u.y;
  if (re % 2 != 0 || im % 2 != 0) {
    throw ConsistencyError("product left the ring of integers");
  }
  const i128 x = re / 2, y = im / 2;
  if (x > INT64_MAX || x < INT64_MIN || y > INT64_MAX || y < INT64_MIN) {
    throw DomainError("64-bit overflow in quadratic integer product");
  }
  return {static_cast<long>(x), static_cast<long>(y)};
}

std::vector<QuadInteger> units(const Discriminant& disc) {
  switch (disc.d()) {
    case 3:
      return {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}};
    case 4:
      return {{2, 0}, {0, 1}, {-2, 0}, {0, -1}};
    default:
      return {{2, 0}, {-2, 0}};
  }
}

bool ideal_contains(const QuadForm& ideal, const QuadInteger& z) {
  // z = m a + n (-b + sqrt(-d))/2  <=>  n = y and (x + b y)/2 = 0 mod a.
  const i128 t = static_cast<i128>(z.x) + static_cast<i128>(ideal.b) * z.y;
  if (t % 2 != 0) return false;
  return (t / 2) % ideal.a == 0;
}

std::vector<QuadInteger> norm_equation_solutions(const Discriminant& disc,
                                                 long n) {
  if (n < 1) throw DomainError("norm must be positive");
  if (n > (1L << 60) / 4) throw DomainError("norm too large for 64-bit search");
  std::set<QuadInteger> found;
  const auto unit_list = units(disc);
  // g runs over the divisors with g^2 | n.
  std::vector<long> square_divisors{1};
  for (auto [q, e] : modarith::factor(static_cast<modarith::u64>(n))) {
    std::vector<long> next;
    for (long g : square_divisors) {
      long qk = 1;
      for (int k = 0; 2 * k <= e; ++k, qk *= static_cast<long>(q)) {
        next.push_back(g * qk);
      }
    }
    square_divisors = std::move(next);
  }
  for (long g : square_divisors) {
    for (const QuadInteger& base : primitive_solutions(disc, n / (g * g))) {
      for (const QuadInteger& u : unit_list) {
        QuadInteger z = multiply(base, u, disc);
        found.insert({z.x * g, z.y * g});
      }
    }
  }
  return {found.begin(), found.end()};
}

std::optional<QuadInteger> cornacchia(const Discriminant& disc, long n) {
  std::optional<QuadInteger> best;
  for (const QuadInteger& z : norm_equation_solutions(disc, n)) {
    if (z.x < 0 || z.y < 0) continue;
    if (!best || z.y < best->y) best = z;
  }
  return best;
}

}  // namespace cmperiods
