#include "kummerwit/poly.hpp"

#include <algorithm>

#include "kummerwit/error.hpp"

namespace kummerwit {

Poly::Poly(Field F, std::vector<FF> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == FF{}) c_.pop_back();
}

Poly Poly::constant(const Field& F, const FF& c) { return Poly(F, {c}); }
Poly Poly::from_int(const Field& F, i64 v) { return Poly(F, {F->from_int(v)}); }

Poly Poly::monomial(const Field& F, const FF& c, int k) {
  std::vector<FF> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return Poly(F, std::move(v));
}

bool Poly::is_one() const { return c_.size() == 1 && F_->is_one(c_[0]); }
bool Poly::is_monic() const { return !c_.empty() && F_->is_one(c_.back()); }

bool Poly::operator<(const Poly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  return c_ < o.c_;
}

namespace {

const Field& pick(const Poly& f, const Poly& g) { return f.field() ? f.field() : g.field(); }

}  // namespace

Poly operator+(const Poly& f, const Poly& g) {
  const Field& F = pick(f, g);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<FF> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i >= a.size())
      out[i] = b[i];
    else if (i >= b.size())
      out[i] = a[i];
    else
      out[i] = F->add(a[i], b[i]);
  }
  return Poly(F, std::move(out));
}

Poly operator-(const Poly& f) {
  std::vector<FF> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.ctx().neg(f.coeffs()[i]);
  return Poly(f.field(), std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) {
  const Field& F = pick(f, g);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<FF> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    FF x = i < a.size() ? a[i] : FF{};
    FF y = i < b.size() ? b[i] : FF{};
    out[i] = F->sub(x, y);
  }
  return Poly(F, std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) {
  const Field& F = pick(f, g);
  if (f.is_zero() || g.is_zero()) return Poly(F);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::size_t n = a.size() + b.size() - 1;
  std::vector<FF> out(n);
  if (F->a() == 1) {
    u64 p = F->p();
    std::vector<u64> acc(n, 0);
    if (p < (u64{1} << 16)) {
      // Products stay below 2^32, so up to 2^32 of them fit in a word.
      for (std::size_t i = 0; i < a.size(); ++i) {
        u64 ai = a[i].c[0];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j].c[0];
      }
      for (std::size_t k = 0; k < n; ++k) out[k].c[0] = static_cast<std::uint32_t>(acc[k] % p);
    } else {
      for (std::size_t i = 0; i < a.size(); ++i) {
        u64 ai = a[i].c[0];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + ai * b[j].c[0]) % p;
      }
      for (std::size_t k = 0; k < n; ++k) out[k].c[0] = static_cast<std::uint32_t>(acc[k]);
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == FF{}) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F->add(out[i + j], F->mul(a[i], b[j]));
    }
  }
  return Poly(F, std::move(out));
}

Poly scale(const Poly& f, const FF& c) {
  std::vector<FF> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.ctx().mul(f.coeffs()[i], c);
  return Poly(f.field(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
  const Field& F = g.field();
  if (f.deg() < g.deg()) return {Poly(F), f};
  std::vector<FF> r = f.coeffs();
  const auto& gc = g.coeffs();
  std::size_t dg = gc.size() - 1;
  std::vector<FF> qv(r.size() - dg);
  FF inv_lc = F->inv(g.lc());
  bool monic_g = F->is_one(g.lc());
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k] == FF{}) continue;
    FF coef = monic_g ? r[k] : F->mul(r[k], inv_lc);
    qv[k - dg] = coef;
    for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] = F->sub(r[k - dg + i], F->mul(coef, gc[i]));
  }
  r.resize(dg);
  return {Poly(F, std::move(qv)), Poly(F, std::move(r))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

bool divides(const Poly& d, const Poly& f) {
  if (d.is_zero()) return f.is_zero();
  return (f % d).is_zero();
}

Poly monic(const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f, f.ctx().inv(f.lc()));
}

Poly derivative(const Poly& f) {
  if (f.deg() <= 0) return Poly(f.field());
  std::vector<FF> out(f.coeffs().size() - 1);
  u64 p = f.ctx().p();
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    out[i - 1] = f.ctx().scale(f.coeffs()[i], static_cast<std::uint32_t>(i % p));
  return Poly(f.field(), std::move(out));
}

FF eval(const Poly& f, const FF& x) {
  FF acc{};
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = f.ctx().add(f.ctx().mul(acc, x), c[k]);
  return acc;
}

Poly pow(const Poly& f, u64 e) {
  Poly r = Poly::one(f.field());
  Poly b = f;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& m) { return (f * g) % m; }

Poly powmod(const Poly& f, u64 e, const Poly& m) {
  Poly r = Poly::one(m.field()) % m;
  Poly b = f % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

Poly compose_power(const Poly& f, u64 k) {
  if (f.is_zero() || k == 1) return f;
  if (k == 0) {
    FF s{};
    for (const FF& c : f.coeffs()) s = f.ctx().add(s, c);
    return Poly::constant(f.field(), s);
  }
  std::vector<FF> out(static_cast<std::size_t>(f.deg()) * k + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i * k] = f.coeffs()[i];
  return Poly(f.field(), std::move(out));
}

Poly compose(const Poly& f, const Poly& g) {
  Poly acc(g.field());
  for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * g + Poly::constant(g.field(), f.coeffs()[k]);
  return acc;
}

ExtGcd poly_ext_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  const Field& F = pick(f, g);
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::one(F), s1(F);
  Poly t0(F), t1 = Poly::one(F);
  while (!r1.is_zero()) {
    auto [qt, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - qt * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - qt * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  FF inv_lc = F->inv(r0.lc());
  return {scale(r0, inv_lc), scale(s0, inv_lc), scale(t0, inv_lc)};
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return f;
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly(pick(f, g));
  return monic((f / gcd(f, g)) * g);
}

bool coprime(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return false;
  return gcd(f, g).is_one();
}

Poly invmod(const Poly& f, const Poly& m) {
  ExtGcd e = poly_ext_gcd(f % m, m);
  if (!e.d.is_one()) throw Error(ErrorCode::NotCoprime, "no inverse modulo the given polynomial");
  return e.u % m;
}

Poly crt(const std::vector<std::pair<Poly, Poly>>& pairs) {
  if (pairs.empty()) throw Error(ErrorCode::InvalidArgument, "crt needs at least one congruence");
  const Field& F = pairs.front().second.field();
  for (const auto& pr : pairs)
    if (pr.second.deg() < 1) throw Error(ErrorCode::InvalidArgument, "crt moduli must be nonconstant");
  Poly x = pairs[0].first % pairs[0].second;
  Poly M = pairs[0].second;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const Poly& m = pairs[i].second;
    ExtGcd e = poly_ext_gcd(M % m, m);
    if (!e.d.is_one()) throw Error(ErrorCode::NotCoprime, "crt moduli share a factor");
    // x + M * ((r - x) * M^{-1} mod m)
    Poly t = mulmod(pairs[i].first - x, e.u, m);
    x = x + M * t;
    M = M * m;
    x = x % M;
  }
  (void)F;
  return x;
}

u64 count_polys_upto(const FieldCtx& F, int max_deg) {
  if (max_deg < 0) return 1;
  return ipow_checked(F.q(), static_cast<unsigned>(max_deg + 1));
}

u64 count_monic(const FieldCtx& F, int d) { return ipow_checked(F.q(), static_cast<unsigned>(d)); }

Poly monic_at(const Field& F, int d, u64 index) {
  std::vector<FF> c(static_cast<std::size_t>(d) + 1);
  c[d] = F->one();
  u64 q = F->q();
  for (int i = d - 1; i >= 0; --i) {
    c[i] = F->from_index(index % q);
    index /= q;
  }
  return Poly(F, std::move(c));
}

Poly poly_at(const Field& F, u64 index) {
  if (index == 0) return Poly(F);
  --index;
  u64 q = F->q();
  for (int d = 0;; ++d) {
    u64 block = (q - 1) * ipow_checked(q, static_cast<unsigned>(d));
    if (index < block) {
      // Digits (c0, ..., c_{d-1}, c_d) with c0 most significant; c_d ranges over nonzero.
      std::vector<FF> c(static_cast<std::size_t>(d) + 1);
      u64 lead = index % (q - 1);
      u64 rest = index / (q - 1);
      c[d] = F->from_index(lead + 1);
      for (int i = d - 1; i >= 0; --i) {
        c[i] = F->from_index(rest % q);
        rest /= q;
      }
      return Poly(F, std::move(c));
    }
    index -= block;
  }
}

std::size_t PolyHash::operator()(const Poly& f) const {
  std::size_t h = 1469598103934665603ULL;
  for (const FF& c : f.coeffs())
    for (std::uint32_t w : c.c) h = (h ^ w) * 1099511628211ULL;
  return h;
}

}  // namespace kummerwit
