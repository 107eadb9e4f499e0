#include <doctest.h>

#include "cmperiods/errors.hpp"
#include "cmperiods/heckechar.hpp"
#include "cmperiods/modarith.hpp"
#include "oracles.hpp"

using namespace cmperiods;

namespace {

long ipow(long b, long e) {
  long v = 1;
  for (long i = 0; i < e; ++i) v *= b;
  return v;
}

// Whether beta lies in q^h, q the prime ideal (q, (-b + sqrt(-p))/2) with q
// prime. Maps O to Z/q^h by sqrt(-p) -> r, r odd with r^2 = -p mod 4 q^h
// and r = b mod 2q, found by search.
bool in_prime_power(const QuadInteger& beta, long p, long q, long b, long h) {
  const long qh = ipow(q, h);
  const long m = 4 * qh;
  for (long r = 1; r < m; r += 2) {
    if ((r * r + p) % m != 0) continue;
    if (((r - b) % (2 * q) + 2 * q) % (2 * q) != 0) continue;
    const long v = beta.x + beta.y * r;
    return ((v / 2) % qh + qh) % qh == 0;
  }
  FAIL("no root found");
  return false;
}

long class_number(long p) {
  return static_cast<long>(oracle::scan_reduced_forms(p).size());
}

bool x_half_is_residue(const QuadInteger& beta, long p) {
  const long half = (p + 1) / 2;
  const long r = ((beta.x % p + p) % p) * half % p;
  return oracle::legendre(r, p) == 1;
}

}  // namespace

TEST_CASE("psi_M examples") {
  const Discriminant p7 = Discriminant::make(7);
  CHECK(psi_M({1, 1, 2}, p7) == QuadInteger{2, 0});
  CHECK(psi_M({2, -1, 1}, p7) == QuadInteger{1, 1});
  CHECK(psi_M({2, 1, 1}, p7) == QuadInteger{1, -1});

  const Discriminant p23 = Discriminant::make(23);
  const QuadInteger beta = psi_M({2, 1, 3}, p23);
  CHECK(norm(beta, p23) == 8);
  CHECK(std::abs(beta.x) == 3);
  CHECK(std::abs(beta.y) == 1);
  CHECK(in_prime_power(beta, 23, 2, 1, 3));
  CHECK(x_half_is_residue(beta, 23));
  CHECK_FALSE(x_half_is_residue({-beta.x, -beta.y}, 23));
}

TEST_CASE("psi_M domain checks") {
  CHECK_THROWS_AS(psi_M({1, 1, 1}, Discriminant::make(3)), DomainError);
  CHECK_THROWS_AS(psi_M({1, 1, 4}, Discriminant::make(15)), DomainError);
  CHECK_THROWS_AS(psi_M({1, 1, 7}, Discriminant::make(23)), DomainError);
  CHECK_THROWS_AS(psi_M({23, 23, 6}, Discriminant::make(23)), DomainError);
}

TEST_CASE("norm law, sign uniqueness and membership for every class") {
  for (const long p : {7L, 23L, 31L, 47L, 71L, 199L}) {
    const Discriminant disc = Discriminant::make(p);
    const long h = class_number(p);
    for (const QuadForm& f : oracle::scan_reduced_forms(p)) {
      const QuadInteger beta = psi_M(f, disc);
      CAPTURE(p);
      CAPTURE(f.a);
      CAPTURE(f.b);
      CHECK(norm(beta, disc) == ipow(f.a, h));
      CHECK(x_half_is_residue(beta, p));
      CHECK_FALSE(x_half_is_residue({-beta.x, -beta.y}, p));
      CHECK(is_square_mod_root(beta, p));
      if (f.a > 1 && oracle::is_prime(f.a) && ipow(f.a, h) < 1000000) {
        CHECK(in_prime_power(beta, p, f.a, f.b, h));
      }
    }
  }
}

TEST_CASE("psi_M on split prime ideals against the membership oracle") {
  const long p = 23;
  const Discriminant disc = Discriminant::make(p);
  for (long q = 2; q < 200; ++q) {
    if (!oracle::is_prime(q) || q == p || oracle::kronecker_neg_d(p, q) != 1) continue;
    for (long b = 1; b < 2 * q; b += 2) {
      if ((b * b + p) % (4 * q) != 0) continue;
      const QuadForm f{q, b, (b * b + p) / (4 * q)};
      const QuadInteger beta = psi_M(f, disc);
      CAPTURE(q);
      CAPTURE(b);
      CHECK(norm(beta, disc) == ipow(q, 3));
      CHECK(in_prime_power(beta, p, q, b, 3));
      CHECK(x_half_is_residue(beta, p));
    }
  }
}

TEST_CASE("multiplicativity") {
  const Discriminant p23 = Discriminant::make(23);
  CHECK(psi_multiplicativity_check(p23, {1, 1, 6}, {1, 1, 6}));
  CHECK(psi_multiplicativity_check(p23, {2, 1, 3}, {2, -1, 3}));
  CHECK(psi_multiplicativity_check(p23, {2, 1, 3}, {2, 1, 3}));
}

TEST_CASE("multiplicativity on 100 random pairs of split prime ideals") {
  const long p = 23;
  const Discriminant disc = Discriminant::make(p);
  std::vector<QuadForm> primes;
  for (long q = 2; q < 400; ++q) {
    if (!oracle::is_prime(q) || q == p || oracle::kronecker_neg_d(p, q) != 1) continue;
    for (long b = -q + 1; b <= q; ++b) {
      if ((b * b + p) % (4 * q) == 0) primes.push_back({q, b, (b * b + p) / (4 * q)});
    }
  }
  REQUIRE(primes.size() > 20);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const QuadForm& f = primes[pick(oracle::rng())];
    const QuadForm& g = primes[pick(oracle::rng())];
    CAPTURE(f.to_string());
    CAPTURE(g.to_string());
    CHECK(psi_multiplicativity_check(disc, f, g));
  }
}
