#pragma once
// Dirichlet characters mod m with values zeta_lambda^e, lambda the exponent
// of (Z/m)^x, and the balance predicate.
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "kummerwit/cyclotomic.hpp"

namespace kummerwit {

// (Z/m)^x as a product of cyclic groups <g_i> of order n_i.
class UnitGroup {
 public:
  // BadModulus for m < 3.
  explicit UnitGroup(u64 m);
  u64 modulus() const { return m_; }
  u64 order() const { return phi_; }
  u64 exponent() const { return lambda_; }
  const std::vector<u64>& generators() const { return gens_; }
  const std::vector<u64>& orders() const { return ords_; }
  // Exponents of k w.r.t. the generators, or nullptr when gcd(k, m) > 1.
  const int* dlog(u64 k) const;

 private:
  u64 m_, phi_, lambda_;
  std::vector<u64> gens_, ords_;
  std::vector<int> logs_;  // m rows of gens_.size() entries; -1 marks non-units
};

class Character {
 public:
  Character(std::shared_ptr<const UnitGroup> G, std::vector<int> exps);
  u64 modulus() const { return G_->modulus(); }
  u64 lambda() const { return G_->exponent(); }
  const std::vector<int>& exps() const { return exps_; }
  const UnitGroup& group() const { return *G_; }
  // chi(k) = zeta^e; nullopt when chi(k) = 0.
  std::optional<u64> value_exp(i64 k) const;
  bool is_principal() const;
  bool is_odd() const;

 private:
  std::shared_ptr<const UnitGroup> G_;
  std::vector<int> exps_;
};

// All phi(m) characters, principal first (mixed-radix order on exponents).
std::vector<Character> characters_enum(u64 m);

struct CharProps {
  bool odd;
  Cyclotomic half_sum;  // sum_{0<k<m/2} chi(k)
};
CharProps char_props(const Character& chi, const std::shared_ptr<const CyclotomicRing>& ring);
CharProps char_props(const Character& chi);

struct BalanceVerdict {
  bool balanced;
  std::optional<std::vector<int>> witness;  // odd chi with chi(x) = 1 and nonzero half sum
};

// Per-modulus table: for each character, oddness and whether its half sum is
// nonzero. Built by an OpenMP kernel; `build_serial` is the reference.
class BalanceTable {
 public:
  static BalanceTable build(u64 m, int workers = 0);
  static BalanceTable build_serial(u64 m);

  u64 modulus() const { return G_->modulus(); }
  std::size_t size() const { return chars_.size(); }
  const Character& character(std::size_t i) const { return chars_[i]; }
  bool odd(std::size_t i) const { return odd_[i]; }
  bool half_sum_nonzero(std::size_t i) const { return nonzero_[i]; }
  // NotCoprime when gcd(x, m) > 1.
  BalanceVerdict query(i64 x) const;

 private:
  std::shared_ptr<const UnitGroup> G_;
  std::vector<Character> chars_;
  std::vector<char> odd_, nonzero_;
};

BalanceVerdict is_balanced_verdict(i64 x, u64 m, int workers = 0);
bool is_balanced(i64 x, u64 m, int workers = 0);

// Answers "is x known balanced mod z" for the going-up rule; nullopt = unknown.
using BalanceLookup = std::function<std::optional<bool>(i64 x, u64 z)>;
// Legendre shortcuts and going-up; nullopt when no rule applies. Without a
// lookup, the rule recurses on z through this function.
std::optional<bool> is_balanced_fast(i64 x, u64 m, const BalanceLookup& lookup = {});

}  // namespace kummerwit
