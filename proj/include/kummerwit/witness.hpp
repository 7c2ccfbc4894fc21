#pragma once
// Finite-set witnesses over F_q[s]: coprime elements, comaximal shifts, the
// injection tuple (g, m, c, d, u, g', m'), Gamma(+), Gamma(x) and instances of
// the axioms of theory R.
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kummerwit/poly.hpp"

namespace kummerwit {

using PolySet = std::vector<Poly>;

// Sorted, duplicates removed.
PolySet normalize_set(PolySet A);
bool set_contains(const PolySet& sorted, const Poly& x);

// Neither zero nor a unit: deg >= 1.
bool nzu(const Poly& f);
// (f) + (g) = F_q[s], certified by the Bezout identity u f + v g = 1.
bool comaximal(const Poly& f, const Poly& g);

// First monic irreducible (degree, then canonical order) coprime to every
// nonzero element of A.
Poly coprime_element(const PolySet& A, const Field& F);

// g = a * s^D * c, c = prod_{i != j} (a_i - a_j)^2. Throws ZeroInA, UnitA.
Poly comaximal_shift(const PolySet& A, const Poly& a);

struct ShiftCertificate {
  bool nzu_all = true;      // 1 + a_i g
  bool cm_with_a = true;    // CM(a, 1 + a_i g)
  bool cm_pairwise = true;  // CM(1 + a_i g, 1 + a_j g), i != j
  bool ok() const { return nzu_all && cm_with_a && cm_pairwise; }
};
ShiftCertificate certify_shift(const PolySet& A, const Poly& a, const Poly& g);

struct InjectionWitness {
  // Accepted through A subset of B; the tuple below is then unused.
  bool via_subset = false;
  Poly g, m, c, d, u, g2, m2;  // g2 = g', m2 = m'
};

// SizeMismatch when |A| > |B| and A is not a subset of B. With
// allow_subset = false the tuple is built even when A is a subset of B.
InjectionWitness injection_witness(const PolySet& A, const PolySet& B, const Field& F, bool allow_subset = true);

struct InjectionCheck {
  bool ok = false;
  std::string failure;                      // first failing condition
  std::vector<std::pair<Poly, Poly>> f;     // x -> f(x)
};
// Re-checks every condition of Psi_0 (or the subset disjunct) and rebuilds f.
InjectionCheck verify_injection(const InjectionWitness& w, const PolySet& A, const PolySet& B);

struct GammaPlusResult {
  bool holds = false;  // |F1| + |F2| = |F3|
  Poly shift;          // s^k with F1 and F2 + shift disjoint
  int shift_exponent = 0;
};
GammaPlusResult gamma_plus_check(const PolySet& F1, const PolySet& F2, const PolySet& F3, const Field& F);

struct GammaTimesWitness {
  Poly alpha, beta;
  PolySet product_set;  // { beta y + alpha x : x in F1, y in F2 }, sorted
};
GammaTimesWitness gamma_times_witness(const PolySet& F1, const PolySet& F2, const Field& F);
// NZU, CM(alpha, beta), CM with intra-set differences, and the product set.
bool verify_gamma_times(const GammaTimesWitness& w, const PolySet& F1, const PolySet& F2);

struct AxiomInstance {
  std::string axiom;   // "Omega1".."Omega5"
  std::string detail;
  bool pass = false;
};
struct AxiomReport {
  u64 n = 0, m = 0;
  std::vector<AxiomInstance> instances;
  bool all_pass() const;
};
// Delta_k is modeled by the first k polynomials in canonical order; the
// variable x of Omega4/Omega5 ranges over {s, ..., s^k} for k <= max(n, m) + 2.
AxiomReport axiom_instance_check(u64 n, u64 m, const Field& F);

// The k-element representative of Delta_k.
PolySet delta_set(const Field& F, u64 k);

// `size` distinct polynomials of degree <= max_deg, uniform over that range.
PolySet random_poly_set(const Field& F, std::mt19937_64& rng, std::size_t size, int max_deg);

}  // namespace kummerwit
