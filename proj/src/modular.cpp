#include "kummerwit/modular.hpp"

#include <algorithm>

#include "kummerwit/error.hpp"

namespace kummerwit {

std::string_view error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::CompositeP: return "CompositeP";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::BadEll: return "BadEll";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ZetaMissing: return "ZetaMissing";
    case ErrorCode::LthPowerInput: return "LthPowerInput";
    case ErrorCode::UntrackedLabel: return "UntrackedLabel";
    case ErrorCode::PoleViolation: return "PoleViolation";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::OffCurve: return "OffCurve";
    case ErrorCode::TorsionPoint: return "TorsionPoint";
    case ErrorCode::DistinctnessFailure: return "DistinctnessFailure";
    case ErrorCode::ZeroInA: return "ZeroInA";
    case ErrorCode::UnitA: return "UnitA";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm_u64(u64 a, u64 b) { return a / gcd_u64(a, b) * b; }

u64 invmod(u64 a, u64 m) {
  i64 r0 = static_cast<i64>(m), r1 = static_cast<i64>(a % m);
  i64 t0 = 0, t1 = 1;
  while (r1) {
    i64 qt = r0 / r1;
    i64 tmp = r0 - qt * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - qt * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw Error(ErrorCode::NotCoprime, "no inverse modulo " + std::to_string(m));
  return static_cast<u64>(mod_floor(t0, static_cast<i64>(m)));
}

i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds{1};
  for (auto [pr, k] : factorize(n)) {
    std::size_t cur = ds.size();
    u64 pk = 1;
    for (int i = 1; i <= k; ++i) {
      pk *= pr;
      for (std::size_t j = 0; j < cur; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto [pr, k] : factorize(n)) r = r / pr * (pr - 1);
  return r;
}

u64 mult_order(u64 a, u64 m) {
  if (m == 1) return 1;
  if (gcd_u64(a % m, m) != 1) throw Error(ErrorCode::NotCoprime, "order of a non-unit");
  u64 ord = euler_phi(m);
  for (auto [pr, k] : factorize(ord)) {
    for (int i = 0; i < k; ++i) {
      if (powmod(a, ord / pr, m) == 1)
        ord /= pr;
      else
        break;
    }
  }
  return ord;
}

u64 ipow_checked(u64 base, unsigned exp, u64 limit) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base)
      throw Error(ErrorCode::InvalidArgument, "integer power exceeds the supported range");
    r *= base;
  }
  return r;
}

int legendre(i64 x, u64 m) {
  if (m < 3 || m % 2 == 0 || !is_prime(m))
    throw Error(ErrorCode::BadModulus, std::to_string(m) + " is not an odd prime");
  u64 xr = static_cast<u64>(mod_floor(x, static_cast<i64>(m)));
  if (xr == 0) return 0;
  u64 e = powmod(xr, (m - 1) / 2, m);
  return e == 1 ? 1 : -1;
}

}  // namespace kummerwit
