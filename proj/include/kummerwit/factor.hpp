#pragma once
// Squarefree, distinct-degree and equal-degree factorisation over F_q.
#include <optional>
#include <utility>
#include <vector>

#include "kummerwit/poly.hpp"

namespace kummerwit {

inline constexpr u64 kDefaultFactorSeed = 0x5eed5eedULL;

// Pairs (g, m), g squarefree monic and pairwise coprime, f = lc * prod g^m.
// Sorted by multiplicity.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// For squarefree monic f: (g_d, d) where g_d is the product of the degree-d
// irreducible factors.
std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f);

// Splits a product of degree-d irreducibles (Cantor-Zassenhaus, odd q).
std::vector<Poly> equal_degree_factorization(const Poly& f, int d, u64 seed = kDefaultFactorSeed);

struct Factorization {
  FF unit;
  // Monic irreducibles in canonical order, with multiplicities.
  std::vector<std::pair<Poly, int>> factors;
};
Factorization factor(const Poly& f, u64 seed = kDefaultFactorSeed);

bool is_irreducible(const Poly& f);

// h^(q^k) mod m.
Poly frobenius_power(const Poly& h, int k, const Poly& m);
// b^((q^d - 1)/2) mod m, evaluated through Frobenius so that q^d may exceed 64 bits.
Poly half_norm_power(const Poly& b, int d, const Poly& m);

// Monic irreducibles of exactly one degree, in canonical order. Restartable
// by copying; each instance holds only its cursor.
class IrreducibleStream {
 public:
  IrreducibleStream(Field F, int deg);
  std::optional<Poly> next();

 private:
  Field F_;
  int deg_;
  u64 idx_ = 0;
  u64 total_;
};

std::vector<Poly> irreducibles(const Field& F, int deg);

}  // namespace kummerwit
