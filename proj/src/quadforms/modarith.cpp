#include "cmperiods/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cmperiods/errors.hpp"

namespace cmperiods::modarith {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(n);
  for (;;) {
    u64 y = rng() % (n - 1) + 1;
    u64 c = rng() % (n - 1) + 1;
    u64 m = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Roots of x^2 = c mod p^e by lifting one digit (base p) at a time. Used
// when Hensel lifting does not apply (p = 2 or p | c); p is small there.
std::vector<u64> lift_roots_brute(u64 c, u64 p, int e) {
  std::vector<u64> roots;
  for (u64 r = 0; r < p; ++r) {
    if (mulmod(r, r, p) == c % p) roots.push_back(r);
  }
  u64 pk = p;
  for (int k = 1; k < e; ++k) {
    u64 next = pk * p;
    std::vector<u64> lifted;
    for (u64 r : roots) {
      for (u64 j = 0; j < p; ++j) {
        u64 cand = r + j * pk;
        if (mulmod(cand, cand, next) == c % next) lifted.push_back(cand);
      }
    }
    roots = std::move(lifted);
    pk = next;
    if (roots.empty()) break;
  }
  return roots;
}

u64 tonelli_shanks(u64 c, u64 p) {
  c %= p;
  if (c == 0) return 0;
  if (p == 2) return c;
  if (p % 4 == 3) return powmod(c, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s);
  u64 cc = powmod(z, q, p);
  u64 t = powmod(c, q, p);
  u64 r = powmod(c, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = cc;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    cc = mulmod(b, b, p);
    t = mulmod(t, cc, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::vector<u64> roots_prime_power(u64 c, u64 p, int e) {
  u64 pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  c %= pe;
  if (p == 2 || c % p == 0) return lift_roots_brute(c, p, e);
  if (legendre(static_cast<i64>(c % p), p) != 1) return {};
  // Hensel: r <- r - (r^2 - c) / (2r) mod p^k
  u64 r = tonelli_shanks(c, p);
  u64 pk = p;
  for (int k = 1; k < e; ++k) {
    u64 next = pk * p;
    i64 f = static_cast<i64>((mulmod(r, r, next) + next - c % next) % next);
    i64 inv = inverse_mod(static_cast<i64>((2 * r) % next), static_cast<i64>(next));
    i64 delta = static_cast<i64>(mulmod(static_cast<u64>(f), static_cast<u64>(inv), next));
    r = static_cast<u64>(mod(static_cast<i64>(r) - delta, static_cast<i64>(next)));
    pk = next;
  }
  return {r, (pe - r) % pe};
}

}  // namespace

std::map<u64, int> factor(u64 n) {
  std::map<u64, int> out;
  if (n == 0) throw DomainError("cannot factor 0");
  for (u64 p = 2; p < 1000000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  return out;
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

i64 inverse_mod(i64 a, i64 m) {
  i64 x = 0, y = 0;
  if (ext_gcd(mod(a, m), m, x, y) != 1) {
    throw DomainError("value not invertible modulo m");
  }
  return mod(x, m);
}

std::vector<u64> sqrt_mod(i64 c, u64 n) {
  if (n == 0) throw DomainError("modulus must be positive");
  if (n == 1) return {0};
  u64 cm = static_cast<u64>(mod(c, static_cast<i64>(n)));
  std::vector<u64> acc{0};
  u64 acc_mod = 1;
  for (auto [p, e] : factor(n)) {
    u64 pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    auto local = roots_prime_power(cm % pe, p, e);
    if (local.empty()) return {};
    // CRT merge acc (mod acc_mod) with local (mod pe).
    u64 inv = static_cast<u64>(
        inverse_mod(static_cast<i64>(acc_mod % pe), static_cast<i64>(pe)));
    std::vector<u64> merged;
    u64 new_mod = acc_mod * pe;
    for (u64 a : acc) {
      for (u64 b : local) {
        u64 diff = (b + pe - a % pe) % pe;
        u64 k = mulmod(diff, inv, pe);
        merged.push_back((a + mulmod(k, acc_mod, new_mod)) % new_mod);
      }
    }
    acc = std::move(merged);
    acc_mod = new_mod;
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

int legendre(i64 a, u64 p) {
  u64 am = static_cast<u64>(mod(a, static_cast<i64>(p)));
  if (am == 0) return 0;
  return powmod(am, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    i64 r8 = mod(a, 8);
    if ((v % 2 == 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol (a | n), n odd positive.
  i64 aa = mod(a, n);
  i64 nn = n;
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      i64 r = nn % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(aa, nn);
    if (aa % 4 == 3 && nn % 4 == 3) result = -result;
    aa %= nn;
  }
  return nn == 1 ? result : 0;
}

}  // namespace cmperiods::modarith
