#include <cmath>

#include "cmperiods/errors.hpp"
#include "cmperiods/modarith.hpp"
#include "cmperiods/quadforms.hpp"

namespace cmperiods {

namespace {

bool squarefree(long n) {
  for (auto [p, e] : modarith::factor(static_cast<modarith::u64>(n))) {
    if (e > 1) return false;
  }
  return true;
}

}  // namespace

bool Discriminant::is_fundamental(long d) {
  if (d <= 0) return false;
  if (d % 4 == 3) return squarefree(d);
  if (d % 4 == 0) {
    long m = d / 4;
    return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
  }
  return false;
}

Discriminant::Discriminant(long d)
    : d_(d),
      w_(d == 3 ? 6 : (d == 4 ? 4 : 2)),
      prime_3mod4_(d > 3 && d % 4 == 3 &&
                   modarith::is_prime(static_cast<modarith::u64>(d))) {}

Discriminant Discriminant::make(long d) {
  if (!is_fundamental(d)) {
    throw DomainError("-" + std::to_string(d) +
                      " is not a fundamental discriminant");
  }
  return Discriminant(d);
}

std::vector<Discriminant> fundamental_discriminants(long lo, long hi) {
  std::vector<Discriminant> out;
  for (long d = std::max(lo, 3L); d <= hi; ++d) {
    if (Discriminant::is_fundamental(d)) out.push_back(Discriminant::make(d));
  }
  return out;
}

int kronecker_epsilon(long a, const Discriminant& disc) {
  return modarith::kronecker(-disc.d(), a);
}

mpq_class class_number_dirichlet(const Discriminant& disc) {
  const long d = disc.d();
  mpz_class sum = 0;
  for (long a = 1; a < d; ++a) sum += kronecker_epsilon(a, disc) * a;
  mpq_class h(-disc.w() * sum, 2 * d);
  h.canonicalize();
  if (h.get_den() != 1 || h <= 0) {
    throw ConsistencyError("Dirichlet class number formula gave " +
                           h.get_str() + " for d = " + std::to_string(d));
  }
  return h;
}

}  // namespace cmperiods
