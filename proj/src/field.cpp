#include "kummerwit/field.hpp"

#include <algorithm>

#include "kummerwit/error.hpp"

namespace kummerwit {

namespace {

using Vec = std::vector<std::uint32_t>;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of f modulo g over F_p (g nonzero, trimmed).
Vec rem_p(Vec f, const Vec& g, u64 p) {
  trim(f);
  u64 inv_lc = invmod(g.back(), p);
  while (f.size() >= g.size()) {
    u64 coef = mulmod(f.back(), inv_lc, p);
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      u64 sub = mulmod(coef, g[i], p);
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Vec gcd_p(Vec f, Vec g, u64 p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Vec r = rem_p(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

Vec mulmod_p(const Vec& x, const Vec& y, const Vec& m, u64 p) {
  if (x.empty() || y.empty()) return {};
  Vec out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + mulmod(x[i], y[j], p)) % p);
  return rem_p(out, m, p);
}

// z^(p^k) mod m by repeated p-th powering.
Vec frob_power(const Vec& m, u64 p, int k) {
  Vec z{0, 1};
  z = rem_p(z, m, p);
  for (int i = 0; i < k; ++i) {
    Vec acc{1}, base = z;
    u64 e = p;
    while (e) {
      if (e & 1) acc = mulmod_p(acc, base, m, p);
      base = mulmod_p(base, base, m, p);
      e >>= 1;
    }
    z = acc;
  }
  return z;
}

}  // namespace

bool is_irreducible_over_prime_field(const Vec& monic, u64 p) {
  Vec m = monic;
  trim(m);
  int d = static_cast<int>(m.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  // Rabin: z^(p^d) = z mod m and gcd(z^(p^(d/r)) - z, m) = 1 for primes r | d.
  Vec zd = frob_power(m, p, d);
  Vec z = rem_p(Vec{0, 1}, m, p);
  if (zd != z) return false;
  for (auto [r, k] : factorize(static_cast<u64>(d))) {
    (void)k;
    Vec h = frob_power(m, p, d / static_cast<int>(r));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = static_cast<std::uint32_t>((h[1] + p - 1) % p);
    trim(h);
    Vec g = gcd_p(m, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field FieldCtx::make(u64 p, int a, std::optional<std::vector<u64>> modulus) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw Error(ErrorCode::CompositeP, std::to_string(p) + " is not an odd prime");
  if (p >= (u64{1} << 31)) throw Error(ErrorCode::InvalidArgument, "p must be below 2^31");
  if (a < 1 || a > kMaxExtDegree)
    throw Error(ErrorCode::InvalidArgument, "extension degree must lie in [1, 8]");
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->a_ = a;
  ctx->q_ = ipow_checked(p, static_cast<unsigned>(a), u64{1} << 62);
  if (modulus) {
    if (modulus->size() != static_cast<std::size_t>(a) + 1 || (*modulus)[a] % p != 1)
      throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree a");
    Vec m;
    for (u64 c : *modulus) m.push_back(static_cast<std::uint32_t>(c % p));
    if (a > 1 && !is_irreducible_over_prime_field(m, p))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
    ctx->mod_ = m;
  } else if (a == 1) {
    ctx->mod_ = {0, 1};
  } else {
    // Coefficient vectors (c0, ..., c_{a-1}) in lexicographic order, c0 first.
    u64 count = ipow_checked(p, static_cast<unsigned>(a));
    for (u64 k = 0; k < count; ++k) {
      Vec m(a + 1, 0);
      u64 t = k;
      for (int i = a - 1; i >= 0; --i) {
        m[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      m[a] = 1;
      if (is_irreducible_over_prime_field(m, p)) {
        ctx->mod_ = m;
        break;
      }
    }
  }
  // Least non-square, used by Tonelli-Shanks.
  for (u64 k = 1; k < ctx->q_; ++k) {
    FF x = ctx->from_index(k);
    if (!ctx->is_square(x)) {
      ctx->nonresidue_ = x;
      break;
    }
  }
  return ctx;
}

FF FieldCtx::one() const {
  FF r;
  r.c[0] = 1;
  return r;
}

FF FieldCtx::from_int(i64 v) const {
  FF r;
  r.c[0] = static_cast<std::uint32_t>(mod_floor(v, static_cast<i64>(p_)));
  return r;
}

FF FieldCtx::from_index(u64 k) const {
  FF r;
  for (int i = a_ - 1; i >= 0; --i) {
    r.c[i] = static_cast<std::uint32_t>(k % p_);
    k /= p_;
  }
  return r;
}

u64 FieldCtx::index(const FF& x) const {
  u64 k = 0;
  for (int i = 0; i < a_; ++i) k = k * p_ + x.c[i];
  return k;
}

FF FieldCtx::gen() const {
  FF r;
  if (a_ == 1) {
    r.c[0] = 1;
  } else {
    r.c[1] = 1;
  }
  return r;
}

bool FieldCtx::in_prime_field(const FF& x) const {
  for (int i = 1; i < a_; ++i)
    if (x.c[i]) return false;
  return true;
}

FF FieldCtx::add(const FF& x, const FF& y) const {
  FF r;
  for (int i = 0; i < a_; ++i) {
    u64 s = static_cast<u64>(x.c[i]) + y.c[i];
    r.c[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FF FieldCtx::sub(const FF& x, const FF& y) const {
  FF r;
  for (int i = 0; i < a_; ++i) {
    u64 s = static_cast<u64>(x.c[i]) + p_ - y.c[i];
    r.c[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FF FieldCtx::neg(const FF& x) const { return sub(FF{}, x); }

FF FieldCtx::scale(const FF& x, std::uint32_t k) const {
  FF r;
  for (int i = 0; i < a_; ++i) r.c[i] = static_cast<std::uint32_t>(static_cast<u64>(x.c[i]) * k % p_);
  return r;
}

FF FieldCtx::mul(const FF& x, const FF& y) const {
  FF r;
  if (a_ == 1) {
    r.c[0] = static_cast<std::uint32_t>(static_cast<u64>(x.c[0]) * y.c[0] % p_);
    return r;
  }
  std::array<u64, 2 * kMaxExtDegree> t{};
  for (int i = 0; i < a_; ++i) {
    if (!x.c[i]) continue;
    for (int j = 0; j < a_; ++j) t[i + j] = (t[i + j] + static_cast<u64>(x.c[i]) * y.c[j]) % p_;
  }
  for (int k = 2 * a_ - 2; k >= a_; --k) {
    u64 coef = t[k];
    if (!coef) continue;
    t[k] = 0;
    for (int i = 0; i < a_; ++i) t[k - a_ + i] = (t[k - a_ + i] + (p_ - coef) * mod_[i]) % p_;
  }
  for (int i = 0; i < a_; ++i) r.c[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

FF FieldCtx::pow(FF x, u64 e) const {
  FF r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

FF FieldCtx::inv(const FF& x) const {
  if (is_zero(x)) throw Error(ErrorCode::ZeroInput, "inverse of zero in F_q");
  if (a_ == 1) {
    FF r;
    r.c[0] = static_cast<std::uint32_t>(invmod(x.c[0], p_));
    return r;
  }
  return pow(x, q_ - 2);
}

bool FieldCtx::is_square(const FF& x) const {
  if (is_zero(x)) return true;
  return is_one(pow(x, (q_ - 1) / 2));
}

std::optional<FF> FieldCtx::sqrt(const FF& x) const {
  if (is_zero(x)) return FF{};
  if (!is_square(x)) return std::nullopt;
  // Tonelli-Shanks over F_q.
  u64 qm1 = q_ - 1;
  int s = 0;
  while ((qm1 & 1) == 0) {
    qm1 >>= 1;
    ++s;
  }
  FF z = pow(nonresidue_, qm1);
  FF t = pow(x, qm1);
  FF r = pow(x, (qm1 + 1) / 2);
  int m = s;
  while (!is_one(t)) {
    int i = 0;
    FF tt = t;
    while (!is_one(tt)) {
      tt = mul(tt, tt);
      ++i;
    }
    FF b = z;
    for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
    r = mul(r, b);
    z = mul(b, b);
    t = mul(t, z);
    m = i;
  }
  // Canonical choice: the lexicographically smaller root.
  FF other = neg(r);
  return std::min(r, other);
}

FF FieldCtx::pth_root(const FF& x) const { return pow(x, q_ / p_); }

bool FieldCtx::is_lth_power(const FF& x, u64 ell) const {
  if (is_zero(x)) return true;
  u64 g = gcd_u64(ell, q_ - 1);
  return is_one(pow(x, (q_ - 1) / g));
}

std::string FieldCtx::to_string(const FF& x) const {
  if (a_ == 1) return std::to_string(x.c[0]);
  std::string s = "[";
  for (int i = 0; i < a_; ++i) {
    if (i) s += ",";
    s += std::to_string(x.c[i]);
  }
  return s + "]";
}

}  // namespace kummerwit
