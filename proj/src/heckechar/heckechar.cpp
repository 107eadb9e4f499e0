#include "cmperiods/heckechar.hpp"

#include "cmperiods/errors.hpp"
#include "cmperiods/modarith.hpp"

namespace cmperiods {

namespace {

void require_prime_regime(const Discriminant& p) {
  if (!p.is_prime_3mod4()) {
    throw DomainError("psi_M needs d = p prime, p = 3 mod 4, p > 3");
  }
}

long checked_pow(long base, long e) {
  __int128 v = 1;
  for (long i = 0; i < e; ++i) {
    v *= base;
    if (v > (static_cast<__int128>(1) << 60)) {
      throw DomainError("norm of a^h exceeds the 64-bit search range");
    }
  }
  return static_cast<long>(v);
}

}  // namespace

bool is_square_mod_root(const QuadInteger& beta, long p) {
  // beta = x/2 (mod sqrt(-p))
  const auto pp = static_cast<modarith::u64>(p);
  const modarith::i64 half = modarith::inverse_mod(2, p);
  const modarith::i64 r = modarith::mod(
      static_cast<modarith::i64>(modarith::mulmod(
          static_cast<modarith::u64>(modarith::mod(beta.x, p)),
          static_cast<modarith::u64>(half), pp)),
      p);
  return modarith::legendre(r, pp) == 1;
}

QuadInteger psi_M(const QuadForm& f, const Discriminant& p) {
  require_prime_regime(p);
  if (f.discriminant() != -p.d() || f.a <= 0) {
    throw DomainError(f.to_string() + " is not a positive form of discriminant -" +
                      std::to_string(p.d()));
  }
  if (f.a % p.d() == 0) {
    throw DomainError("the ideal of " + f.to_string() + " is not prime to p");
  }
  const long h = static_cast<long>(reduced_forms(p).h());

  // a^h = scale * ideal(power), tracked without reduction.
  QuadForm power = principal_form(p);
  long scale = 1;
  for (long i = 0; i < h; ++i) {
    Composition c = compose_unreduced(power, f);
    power = c.form;
    scale *= c.scale;
  }
  if (reduce(power) != principal_form(p)) {
    throw ConsistencyError("a^h is not principal for " + f.to_string());
  }
  const long n = checked_pow(f.a, h);
  std::vector<QuadInteger> generators;
  for (const QuadInteger& z : norm_equation_solutions(p, n)) {
    if (z.x % scale != 0 || z.y % scale != 0) continue;
    if (ideal_contains(power, {z.x / scale, z.y / scale})) generators.push_back(z);
  }
  if (generators.size() != 2) {
    throw ConsistencyError("expected a generator pair +-beta of a^h for " +
                           f.to_string() + ", found " +
                           std::to_string(generators.size()));
  }
  const bool first = is_square_mod_root(generators[0], p.d());
  const bool second = is_square_mod_root(generators[1], p.d());
  if (first == second) {
    throw ConsistencyError("square-mod-sqrt(-p) sign is not unique for " +
                           f.to_string());
  }
  return first ? generators[0] : generators[1];
}

bool psi_multiplicativity_check(const Discriminant& p, const QuadForm& f,
                                const QuadForm& g) {
  require_prime_regime(p);
  const QuadInteger lhs = multiply(psi_M(f, p), psi_M(g, p), p);
  const Composition c = compose_unreduced(f, g);
  const long h = static_cast<long>(reduced_forms(p).h());
  const long e_h = checked_pow(c.scale, h);
  const int sign = modarith::legendre(c.scale, static_cast<modarith::u64>(p.d()));
  const QuadInteger scalar{2 * sign * e_h, 0};
  const QuadInteger rhs = multiply(scalar, psi_M(c.form, p), p);
  return lhs == rhs;
}

}  // namespace cmperiods
