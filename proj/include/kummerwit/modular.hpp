#pragma once
// Machine-word number theory: modular powers, primality, factorisation,
// multiplicative orders and Legendre symbols.
#include <cstdint>
#include <utility>
#include <vector>

namespace kummerwit {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 m);
u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);
// Inverse of a mod m; requires gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);
i64 mod_floor(i64 a, i64 m);

bool is_prime(u64 n);
// Prime factorisation, primes ascending.
std::vector<std::pair<u64, int>> factorize(u64 n);
std::vector<u64> divisors(u64 n);
u64 euler_phi(u64 n);
// Order of a in (Z/m)^x; requires gcd(a, m) = 1, m >= 1.
u64 mult_order(u64 a, u64 m);
// Checked integer power; throws InvalidArgument on overflow past `limit`.
u64 ipow_checked(u64 base, unsigned exp, u64 limit = ~u64{0});

// Euler's criterion. m must be an odd prime (BadModulus otherwise).
int legendre(i64 x, u64 m);

}  // namespace kummerwit
