#include "kummerwit/place.hpp"

#include <algorithm>
#include <functional>

#include "kummerwit/error.hpp"
#include "kummerwit/factor.hpp"
#include "kummerwit/literal.hpp"

namespace kummerwit {

Place Place::finite(const Poly& pi) {
  if (!pi.is_monic() || !is_irreducible(pi))
    throw Error(ErrorCode::InvalidArgument, "place polynomial must be monic irreducible: " + to_string(pi));
  return Place(Kind::Finite, pi);
}

Place Place::infinity(const Field& F) { return Place(Kind::Infinity, Poly::s(F)); }

u64 Place::residue_size() const {
  return ipow_checked(field()->q(), static_cast<unsigned>(degree()), u64{1} << 62);
}

bool Place::operator<(const Place& o) const {
  if (kind_ != o.kind_) return kind_ == Kind::Finite;
  return pi_ < o.pi_;
}

std::string to_string(const Place& P) { return P.is_infinity() ? "inf" : to_string(P.poly()); }

Place parse_place(const Field& F, std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t == "inf" || t == "infinity" || t == "oo") return Place::infinity(F);
  return Place::finite(parse_poly(F, t));
}

ResidueField::ResidueField(const Place& P) : m_(P.poly()), Q_(P.residue_size()) {}

bool ResidueField::is_lth_power(const Poly& x, u64 ell) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "l-th power test of zero residue");
  u64 g = gcd_u64(ell, Q_ - 1);
  return pow(x, (Q_ - 1) / g).is_one();
}

i64 valuation(const Poly& f, const Place& P) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  if (P.is_infinity()) return -static_cast<i64>(f.deg());
  i64 v = 0;
  Poly g = f;
  for (;;) {
    auto [qt, r] = divmod(g, P.poly());
    if (!r.is_zero()) break;
    g = std::move(qt);
    ++v;
  }
  return v;
}

i64 valuation(const RatFunc& x, const Place& P) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  return valuation(x.num(), P) - valuation(x.den(), P);
}

namespace {

std::pair<i64, Poly> strip(const Poly& f, const Poly& pi) {
  i64 v = 0;
  Poly g = f;
  for (;;) {
    auto [qt, r] = divmod(g, pi);
    if (!r.is_zero()) break;
    g = std::move(qt);
    ++v;
  }
  return {v, g};
}

}  // namespace

std::pair<i64, Poly> unit_residue(const RatFunc& x, const Place& P) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "residue of zero");
  const Field& F = x.field();
  if (P.is_infinity()) {
    i64 v = static_cast<i64>(x.den().deg()) - x.num().deg();
    return {v, Poly::constant(F, F->div(x.num().lc(), x.den().lc()))};
  }
  auto [vn, n] = strip(x.num(), P.poly());
  auto [vd, d] = strip(x.den(), P.poly());
  return {vn - vd, mulmod(n, invmod(d, P.poly()), P.poly())};
}

PlaceData place_data(const RatFunc& x, const Place& P, u64 ell) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "place_data of zero");
  if (ell < 2 || ell % x.field()->p() == 0) throw Error(ErrorCode::BadEll, "l must be >= 2 and prime to p");
  auto [v, res] = unit_residue(x, P);
  if (v != 0) return {v, std::nullopt, std::nullopt};
  ResidueField RF(P);
  return {v, res, RF.is_lth_power(res, ell)};
}

std::vector<TowerPlace> factor_place_in_tower(const Place& P, u64 r, unsigned n, u64 seed) {
  const Field& F = P.field();
  if (!is_prime(r) || r == F->p()) throw Error(ErrorCode::InvalidArgument, "r must be a prime different from p");
  u64 rn = ipow_checked(r, n, u64{1} << 40);
  if (n == 0) return {{P, 1, 1}};
  if (P.is_infinity()) return {{P, rn, 1}};
  Factorization fac = factor(compose_power(P.poly(), rn), seed);
  std::vector<TowerPlace> out;
  for (const auto& [g, m] : fac.factors)
    out.push_back({Place::finite(g), static_cast<u64>(m), static_cast<u64>(g.deg() / P.degree())});
  return out;
}

BoundednessResult boundedness_chain(const Place& P, u64 r, u64 ell, unsigned n_max) {
  u64 p = P.field()->p();
  if (!is_prime(ell) || ell == p || ell == r)
    throw Error(ErrorCode::BadEll, "l must be a prime different from p and r");
  BoundednessResult res{false, {P}, {}};
  std::function<bool(const Place&, unsigned)> dfs = [&](const Place& cur, unsigned level) -> bool {
    if (level == n_max) return true;
    auto kids = factor_place_in_tower(cur, r, 1);
    std::stable_sort(kids.begin(), kids.end(),
                     [](const TowerPlace& x, const TowerPlace& y) { return x.above.degree() < y.above.degree(); });
    for (const auto& k : kids) {
      u64 d = k.e * k.f;
      if (d % ell == 0) continue;
      res.chain.push_back(k.above);
      res.step_degrees.push_back(d);
      if (dfs(k.above, level + 1)) return true;
      res.chain.pop_back();
      res.step_degrees.pop_back();
    }
    return false;
  };
  res.bounded = dfs(P, 0);
  return res;
}

bool boundedness_probe(const Place& P, u64 r, u64 ell, unsigned n_max) {
  return boundedness_chain(P, r, ell, n_max).bounded;
}

}  // namespace kummerwit
