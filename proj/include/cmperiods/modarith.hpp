#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace cmperiods::modarith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 e, u64 m);
i64 mod(i64 a, i64 m);  // result in [0, m)

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization: trial division to 10^6, then Pollard rho (Brent).
std::map<u64, int> factor(u64 n);

/// Extended gcd: returns g = gcd(a, b) >= 0 and x, y with a x + b y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

/// Inverse of a modulo m; throws DomainError when not invertible.
i64 inverse_mod(i64 a, i64 m);

/// All x in [0, n) with x^2 = c (mod n), sorted.
std::vector<u64> sqrt_mod(i64 c, u64 n);

/// Legendre symbol (a | p) for an odd prime p.
int legendre(i64 a, u64 p);

/// Kronecker symbol (a | n) for arbitrary integers.
int kronecker(i64 a, i64 n);

}  // namespace cmperiods::modarith
