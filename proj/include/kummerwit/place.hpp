#pragma once
// Places of F_q(s), valuations, residue fields and the s -> s^(r^n) tower.
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kummerwit/ratfunc.hpp"

namespace kummerwit {

class Place {
 public:
  enum class Kind { Finite, Infinity };

  // pi must be monic irreducible (InvalidArgument otherwise).
  static Place finite(const Poly& pi);
  static Place infinity(const Field& F);

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  // The place polynomial; for infinity this is s (a stand-in for the residue map).
  const Poly& poly() const { return pi_; }
  const Field& field() const { return pi_.field(); }
  int degree() const { return is_infinity() ? 1 : pi_.deg(); }
  // q^degree; InvalidArgument past 2^62.
  u64 residue_size() const;

  bool operator==(const Place& o) const { return kind_ == o.kind_ && pi_ == o.pi_; }
  bool operator<(const Place& o) const;

 private:
  Place(Kind k, Poly pi) : kind_(k), pi_(std::move(pi)) {}
  Kind kind_;
  Poly pi_;
};

std::string to_string(const Place& P);
Place parse_place(const Field& F, std::string_view text);

// F_q[s]/(pi): elements are reduced polynomials.
class ResidueField {
 public:
  explicit ResidueField(const Place& P);
  const Poly& modulus() const { return m_; }
  u64 size() const { return Q_; }
  Poly reduce(const Poly& f) const { return f % m_; }
  Poly mul(const Poly& x, const Poly& y) const { return mulmod(x, y, m_); }
  Poly inv(const Poly& x) const { return invmod(x, m_); }
  Poly pow(const Poly& x, u64 e) const { return powmod(x, e, m_); }
  bool is_one(const Poly& x) const { return x.is_one(); }
  // x nonzero is an l-th power in the multiplicative group.
  bool is_lth_power(const Poly& x, u64 ell) const;

 private:
  Poly m_;
  u64 Q_;
};

// v_P(f) for nonzero f.
i64 valuation(const Poly& f, const Place& P);
i64 valuation(const RatFunc& x, const Place& P);
// (v_P(x), residue of x * pi^{-v}) for nonzero x.
std::pair<i64, Poly> unit_residue(const RatFunc& x, const Place& P);

struct PlaceData {
  i64 v;
  std::optional<Poly> residue;
  std::optional<bool> is_lth_power;
};
PlaceData place_data(const RatFunc& x, const Place& P, u64 ell);

struct TowerPlace {
  Place above;
  u64 e;
  u64 f;
};
// Places above P in F_q(s) over F_q(t), t = s^(r^n).
std::vector<TowerPlace> factor_place_in_tower(const Place& P, u64 r, unsigned n, u64 seed = 0x5eed5eedULL);

struct BoundednessResult {
  bool bounded;
  // The chain found (P_0, ..., P_{n_max}) with the step degrees e*f.
  std::vector<Place> chain;
  std::vector<u64> step_degrees;
};
BoundednessResult boundedness_chain(const Place& P, u64 r, u64 ell, unsigned n_max);
bool boundedness_probe(const Place& P, u64 r, u64 ell, unsigned n_max);

}  // namespace kummerwit
