#pragma once
// Shared helpers for the test binaries.
#include <random>
#include <string>
#include <vector>

#include "kummerwit/factor.hpp"
#include "kummerwit/literal.hpp"
#include "kummerwit/place.hpp"
#include "kummerwit/poly.hpp"
#include "kummerwit/ratfunc.hpp"

namespace kwtest {

using namespace kummerwit;

inline Field GF(u64 p, int a = 1) { return FieldCtx::make(p, a); }
inline Poly P(const Field& F, const std::string& s) { return parse_poly(F, s); }
inline RatFunc R(const Field& F, const std::string& s) { return parse_ratfunc(F, s); }

inline FF random_ff(const Field& F, std::mt19937_64& rng) { return F->from_index(rng() % F->q()); }

inline Poly random_poly(const Field& F, std::mt19937_64& rng, int max_deg) {
  std::vector<FF> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& x : c) x = random_ff(F, rng);
  return Poly(F, std::move(c));
}

inline Poly random_nonzero(const Field& F, std::mt19937_64& rng, int max_deg) {
  for (;;) {
    Poly f = random_poly(F, rng, max_deg);
    if (!f.is_zero()) return f;
  }
}

inline Poly random_monic(const Field& F, std::mt19937_64& rng, int deg) {
  std::vector<FF> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[i] = random_ff(F, rng);
  c[deg] = F->one();
  return Poly(F, std::move(c));
}

inline RatFunc random_ratfunc(const Field& F, std::mt19937_64& rng, int max_deg) {
  return RatFunc(random_poly(F, rng, max_deg), random_nonzero(F, rng, max_deg));
}

inline RatFunc random_nonzero_ratfunc(const Field& F, std::mt19937_64& rng, int max_deg) {
  return RatFunc(random_nonzero(F, rng, max_deg), random_nonzero(F, rng, max_deg));
}

// Every monic polynomial of degree d, by brute force over coefficient tuples.
inline std::vector<Poly> all_monic(const Field& F, int d) {
  std::vector<Poly> out;
  u64 q = F->q(), total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (u64 k = 0; k < total; ++k) {
    std::vector<FF> c(static_cast<std::size_t>(d) + 1);
    u64 t = k;
    for (int i = 0; i < d; ++i) {
      c[i] = F->from_index(t % q);
      t /= q;
    }
    c[d] = F->one();
    out.emplace_back(F, std::move(c));
  }
  return out;
}

// Irreducibility by trial division through every monic of degree <= d/2.
inline bool brute_irreducible(const Poly& f) {
  if (f.deg() < 1) return false;
  for (int d = 1; 2 * d <= f.deg(); ++d)
    for (const Poly& g : all_monic(f.field(), d))
      if ((f % g).is_zero()) return false;
  return true;
}

// Infinity first, then finite places by degree.
inline std::vector<Place> places_upto(const Field& F, int deg) {
  std::vector<Place> out{Place::infinity(F)};
  for (int d = 1; d <= deg; ++d)
    for (const Poly& g : irreducibles(F, d)) out.push_back(Place::finite(g));
  return out;
}

// An element of valuation exactly k at P.
inline RatFunc pi_pow(const Place& Pl, i64 k) {
  if (Pl.is_infinity()) return pow(RatFunc(Poly::s(Pl.field())), -k);
  return pow(RatFunc(Pl.poly()), k);
}

// A random element of valuation 0 at P.
inline RatFunc random_unit(const Place& Pl, std::mt19937_64& rng, int max_deg) {
  const Field& F = Pl.field();
  for (;;) {
    if (Pl.is_infinity()) {
      int d = static_cast<int>(rng() % (max_deg + 1));
      Poly a = random_nonzero(F, rng, d), b = random_nonzero(F, rng, d);
      if (a.deg() == d && b.deg() == d) return RatFunc(a, b);
      continue;
    }
    Poly a = random_nonzero(F, rng, max_deg), b = random_nonzero(F, rng, max_deg);
    if (coprime(a, Pl.poly()) && coprime(b, Pl.poly())) return RatFunc(a, b);
  }
}

// A unit whose residue is not an l-th power.
inline RatFunc non_power_unit(const Place& Pl, u64 ell, std::mt19937_64& rng) {
  ResidueField RF(Pl);
  for (;;) {
    RatFunc u = random_unit(Pl, rng, 2);
    if (!RF.is_lth_power(unit_residue(u, Pl).second, ell)) return u;
  }
}

}  // namespace kwtest
