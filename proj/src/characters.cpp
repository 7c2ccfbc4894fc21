#include "kummerwit/characters.hpp"

#include <omp.h>

#include <numeric>

#include "kummerwit/error.hpp"
#include "kummerwit/parallel.hpp"

namespace kummerwit {

namespace {

// Primitive root mod p^k for odd p.
u64 primitive_root_odd(u64 p, u64 pk) {
  u64 phi = pk / p * (p - 1);
  auto fs = factorize(phi);
  for (u64 g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto [r, e] : fs) {
      (void)e;
      if (powmod(g, phi / r, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorCode::InvalidArgument, "no primitive root found");
}

// Lift g mod pk to a unit mod m that is 1 modulo m / pk.
u64 lift(u64 g, u64 pk, u64 m) {
  u64 rest = m / pk;
  if (rest == 1) return g % m;
  // x = g (mod pk), x = 1 (mod rest)
  u64 t = mulmod((g + pk - 1) % pk, invmod(rest % pk, pk), pk);
  return (1 + mulmod(t, rest, m)) % m;
}

}  // namespace

UnitGroup::UnitGroup(u64 m) : m_(m) {
  if (m < 3) throw Error(ErrorCode::BadModulus, "character modulus must be >= 3");
  phi_ = euler_phi(m);
  for (auto [p, k] : factorize(m)) {
    u64 pk = ipow_checked(p, static_cast<unsigned>(k));
    if (p == 2) {
      if (k == 2) {
        gens_.push_back(lift(pk - 1, pk, m));
        ords_.push_back(2);
      } else if (k >= 3) {
        gens_.push_back(lift(pk - 1, pk, m));
        ords_.push_back(2);
        gens_.push_back(lift(5, pk, m));
        ords_.push_back(pk / 4);
      }
    } else {
      gens_.push_back(lift(primitive_root_odd(p, pk), pk, m));
      ords_.push_back(pk / p * (p - 1));
    }
  }
  lambda_ = 1;
  for (u64 o : ords_) lambda_ = lcm_u64(lambda_, o);
  u64 prod = 1;
  for (u64 o : ords_) prod *= o;
  if (prod != phi_) throw Error(ErrorCode::InvalidArgument, "generator orders do not multiply to phi(m)");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (mult_order(gens_[i], m) != ords_[i]) throw Error(ErrorCode::InvalidArgument, "generator order mismatch");

  // Walk all exponent tuples; each unit must be reached exactly once.
  std::size_t r = gens_.size();
  logs_.assign(m * r, -1);
  std::vector<int> e(r, 0);
  std::vector<char> seen(m, 0);
  u64 reached = 0;
  for (u64 idx = 0; idx < phi_; ++idx) {
    u64 val = 1;
    for (std::size_t i = 0; i < r; ++i) val = mulmod(val, powmod(gens_[i], static_cast<u64>(e[i]), m), m);
    if (seen[val]) throw Error(ErrorCode::InvalidArgument, "generators are not independent");
    seen[val] = 1;
    ++reached;
    for (std::size_t i = 0; i < r; ++i) logs_[val * r + i] = e[i];
    for (std::size_t i = 0; i < r; ++i) {
      if (++e[i] < static_cast<int>(ords_[i])) break;
      e[i] = 0;
    }
  }
  if (reached != phi_) throw Error(ErrorCode::InvalidArgument, "generators do not cover the unit group");
}

const int* UnitGroup::dlog(u64 k) const {
  k %= m_;
  if (gens_.empty()) return gcd_u64(k, m_) == 1 ? logs_.data() : nullptr;
  const int* row = logs_.data() + k * gens_.size();
  return row[0] < 0 ? nullptr : row;
}

Character::Character(std::shared_ptr<const UnitGroup> G, std::vector<int> exps)
    : G_(std::move(G)), exps_(std::move(exps)) {
  if (exps_.size() != G_->generators().size()) throw Error(ErrorCode::InvalidArgument, "exponent vector length");
}

std::optional<u64> Character::value_exp(i64 k) const {
  u64 m = G_->modulus();
  u64 kk = static_cast<u64>(mod_floor(k, static_cast<i64>(m)));
  if (gcd_u64(kk, m) != 1) return std::nullopt;
  const int* lg = G_->dlog(kk);
  u64 lam = G_->exponent();
  u64 acc = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    u64 step = lam / G_->orders()[i];
    acc = (acc + static_cast<u64>(exps_[i]) * step % lam * static_cast<u64>(lg[i])) % lam;
  }
  return acc;
}

bool Character::is_principal() const {
  for (int e : exps_)
    if (e) return false;
  return true;
}

bool Character::is_odd() const { return *value_exp(-1) == G_->exponent() / 2; }

namespace {

std::vector<Character> enumerate(const std::shared_ptr<const UnitGroup>& G) {
  std::vector<Character> out;
  out.reserve(G->order());
  std::size_t r = G->orders().size();
  std::vector<int> e(r, 0);
  for (u64 idx = 0; idx < G->order(); ++idx) {
    out.emplace_back(G, e);
    for (std::size_t i = 0; i < r; ++i) {
      if (++e[i] < static_cast<int>(G->orders()[i])) break;
      e[i] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<Character> characters_enum(u64 m) { return enumerate(std::make_shared<const UnitGroup>(m)); }

CharProps char_props(const Character& chi, const std::shared_ptr<const CyclotomicRing>& ring) {
  std::vector<i64> counts(chi.lambda(), 0);
  u64 m = chi.modulus();
  for (u64 k = 1; 2 * k < m; ++k)
    if (auto e = chi.value_exp(static_cast<i64>(k))) ++counts[*e];
  return {chi.is_odd(), Cyclotomic::from_exponent_counts(ring, counts)};
}

CharProps char_props(const Character& chi) {
  return char_props(chi, std::make_shared<const CyclotomicRing>(chi.lambda()));
}

BalanceTable BalanceTable::build(u64 m, int workers) {
  BalanceTable t;
  t.G_ = std::make_shared<const UnitGroup>(m);
  t.chars_ = enumerate(t.G_);
  auto ring = std::make_shared<const CyclotomicRing>(t.G_->exponent());
  std::size_t n = t.chars_.size();
  t.odd_.assign(n, 0);
  t.nonzero_.assign(n, 0);
  const u64 lam = t.G_->exponent();
  const std::size_t deg = ring->degree();
  // Per character: bucket the half-interval values by exponent, then fold the
  // buckets through the power table of zeta. Only odd characters matter.
#pragma omp parallel for schedule(dynamic, 8) num_threads(resolve_workers(workers))
  for (std::size_t i = 0; i < n; ++i) {
    const Character& chi = t.chars_[i];
    if (!chi.is_odd()) continue;
    t.odd_[i] = 1;
    std::vector<i64> counts(lam, 0);
    for (u64 k = 1; 2 * k < m; ++k)
      if (auto e = chi.value_exp(static_cast<i64>(k))) ++counts[*e];
    std::vector<i64> acc(deg, 0);
    for (u64 j = 0; j < lam; ++j) {
      if (!counts[j]) continue;
      const auto& pw = ring->power(j);
      for (std::size_t c = 0; c < deg; ++c) acc[c] += counts[j] * pw[c];
    }
    bool nz = false;
    for (i64 v : acc) nz = nz || v != 0;
    t.nonzero_[i] = nz;
  }
  return t;
}

BalanceTable BalanceTable::build_serial(u64 m) {
  // Reference path: exact Cyclotomic sums, one zeta power at a time.
  BalanceTable t;
  t.G_ = std::make_shared<const UnitGroup>(m);
  t.chars_ = enumerate(t.G_);
  auto ring = std::make_shared<const CyclotomicRing>(t.G_->exponent());
  for (const Character& chi : t.chars_) {
    bool odd = chi.is_odd();
    Cyclotomic s = Cyclotomic::zero(ring);
    if (odd)
      for (u64 k = 1; 2 * k < m; ++k)
        if (auto e = chi.value_exp(static_cast<i64>(k))) s = s + Cyclotomic::zeta_power(ring, static_cast<i64>(*e));
    t.odd_.push_back(odd);
    t.nonzero_.push_back(odd && !s.is_zero());
  }
  return t;
}

BalanceVerdict BalanceTable::query(i64 x) const {
  u64 m = modulus();
  u64 xr = static_cast<u64>(mod_floor(x, static_cast<i64>(m)));
  if (gcd_u64(xr, m) != 1) throw Error(ErrorCode::NotCoprime, "x and m are not coprime");
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    if (!odd_[i] || !nonzero_[i]) continue;
    if (*chars_[i].value_exp(static_cast<i64>(xr)) == 0) return {false, chars_[i].exps()};
  }
  return {true, std::nullopt};
}

BalanceVerdict is_balanced_verdict(i64 x, u64 m, int workers) {
  if (m < 3) throw Error(ErrorCode::BadModulus, "modulus must be >= 3");
  if (gcd_u64(static_cast<u64>(mod_floor(x, static_cast<i64>(m))), m) != 1)
    throw Error(ErrorCode::NotCoprime, "x and m are not coprime");
  return BalanceTable::build(m, workers).query(x);
}

bool is_balanced(i64 x, u64 m, int workers) { return is_balanced_verdict(x, m, workers).balanced; }

std::optional<bool> is_balanced_fast(i64 x, u64 m, const BalanceLookup& lookup) {
  if (m < 3) throw Error(ErrorCode::BadModulus, "modulus must be >= 3");
  u64 xr = static_cast<u64>(mod_floor(x, static_cast<i64>(m)));
  if (gcd_u64(xr, m) != 1) throw Error(ErrorCode::NotCoprime, "x and m are not coprime");
  if (m % 2 == 1 && is_prime(m)) {
    int l = legendre(static_cast<i64>(xr), m);
    if (l == -1) return true;
    if (m % 4 == 3) return false;
    return std::nullopt;
  }
  if (m % 2 == 0) return std::nullopt;
  // Going up: m = y z, y an odd prime dividing z, x not balanced mod z.
  for (auto [y, k] : factorize(m)) {
    if (k < 2) continue;
    u64 z = m / y;
    std::optional<bool> below = lookup ? lookup(x, z) : is_balanced_fast(x, z, lookup);
    if (below && !*below) return false;
  }
  return std::nullopt;
}

}  // namespace kummerwit
