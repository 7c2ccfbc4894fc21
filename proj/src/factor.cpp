#include "kummerwit/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "kummerwit/error.hpp"

namespace kummerwit {

namespace {

Poly pth_root_poly(const Poly& f) {
  u64 p = f.ctx().p();
  std::vector<FF> out(static_cast<std::size_t>(f.deg()) / p + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.ctx().pth_root(f.coeff(static_cast<int>(i * p)));
  return Poly(f.field(), std::move(out));
}

void sqfree_rec(const Poly& f, int mult, std::map<int, Poly>& acc) {
  if (f.deg() < 1) return;
  auto push = [&](const Poly& g, int m) {
    auto it = acc.find(m);
    if (it == acc.end())
      acc.emplace(m, g);
    else
      it->second = it->second * g;
  };
  Poly df = derivative(f);
  if (df.is_zero()) {
    sqfree_rec(pth_root_poly(f), mult * static_cast<int>(f.ctx().p()), acc);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.deg() > 0) push(monic(z), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.deg() > 0) sqfree_rec(pth_root_poly(monic(c)), mult * static_cast<int>(f.ctx().p()), acc);
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  std::map<int, Poly> acc;
  sqfree_rec(monic(f), 1, acc);
  std::vector<std::pair<Poly, int>> out;
  for (auto& [m, g] : acc) out.emplace_back(g, m);
  return out;
}

Poly frobenius_power(const Poly& h, int k, const Poly& m) {
  Poly r = h % m;
  u64 q = m.ctx().q();
  for (int i = 0; i < k; ++i) r = powmod(r, q, m);
  return r;
}

Poly half_norm_power(const Poly& b, int d, const Poly& m) {
  // (q^d - 1)/2 = (q - 1)/2 * (1 + q + ... + q^{d-1}).
  u64 q = m.ctx().q();
  Poly y = b % m;
  Poly acc = y;
  for (int i = 1; i < d; ++i) {
    y = powmod(y, q, m);
    acc = mulmod(acc, y, m);
  }
  return powmod(acc, (q - 1) / 2, m);
}

std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  const Field& F = f.field();
  Poly rest = monic(f);
  Poly x = Poly::s(F);
  Poly h = x % rest;
  u64 q = F->q();
  for (int i = 1; rest.deg() >= 2 * i; ++i) {
    h = powmod(h, q, rest);
    Poly g = gcd(h - x, rest);
    if (g.deg() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.deg() > 0) out.emplace_back(rest, rest.deg());
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f, int d, u64 seed) {
  std::vector<Poly> out;
  std::vector<Poly> work{monic(f)};
  std::mt19937_64 rng(seed);
  const Field& F = f.field();
  while (!work.empty()) {
    Poly g = std::move(work.back());
    work.pop_back();
    if (g.deg() <= d) {
      if (g.deg() > 0) out.push_back(g);
      continue;
    }
    for (;;) {
      std::vector<FF> coeffs(static_cast<std::size_t>(g.deg()));
      for (auto& c : coeffs) c = F->from_index(rng() % F->q());
      Poly a(F, std::move(coeffs));
      if (a.deg() < 1) continue;
      Poly b = half_norm_power(a, d, g) - Poly::one(F);
      Poly h = gcd(b, g);
      if (h.deg() > 0 && h.deg() < g.deg()) {
        work.push_back(h);
        work.push_back(g / h);
        break;
      }
    }
  }
  return out;
}

Factorization factor(const Poly& f, u64 seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "factorisation of zero");
  Factorization res{f.lc(), {}};
  for (const auto& [sq, m] : squarefree_decomposition(f)) {
    for (const auto& [g, d] : distinct_degree_factorization(sq)) {
      for (Poly& h : equal_degree_factorization(g, d, seed)) res.factors.emplace_back(std::move(h), m);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return res;
}

bool is_irreducible(const Poly& f) {
  int d = f.deg();
  if (d < 1) return false;
  if (d == 1) return true;
  Poly m = monic(f);
  Poly x = Poly::s(f.field());
  if (!(frobenius_power(x, d, m) == x % m)) return false;
  for (auto [r, k] : factorize(static_cast<u64>(d))) {
    (void)k;
    Poly h = frobenius_power(x, d / static_cast<int>(r), m) - x;
    if (!gcd(h, m).is_one()) return false;
  }
  return true;
}

IrreducibleStream::IrreducibleStream(Field F, int deg)
    : F_(std::move(F)), deg_(deg), total_(count_monic(*F_, deg)) {
  if (deg < 1) throw Error(ErrorCode::InvalidArgument, "irreducibles need degree >= 1");
}

std::optional<Poly> IrreducibleStream::next() {
  while (idx_ < total_) {
    Poly f = monic_at(F_, deg_, idx_++);
    if (is_irreducible(f)) return f;
  }
  return std::nullopt;
}

std::vector<Poly> irreducibles(const Field& F, int deg) {
  std::vector<Poly> out;
  IrreducibleStream st(F, deg);
  while (auto f = st.next()) out.push_back(std::move(*f));
  return out;
}

}  // namespace kummerwit
