#pragma once
// C_lambda = { x : exists y, y^2 lambda = x (x + lambda)(x + lambda s^N) }.
#include <optional>
#include <vector>

#include "kummerwit/curve.hpp"

namespace kummerwit {

struct FamilyMember {
  Poly x, y;
};

struct FamilyResult {
  Poly lambda;
  u64 N;
  int deg_bound;
  std::vector<FamilyMember> members;  // sorted by x
  bool exhaustive;
};

// y with y^2 lambda = x (x + lambda)(x + lambda s^N), y a polynomial; none otherwise.
std::optional<Poly> family_witness(const Poly& lambda, const Curve& E, const Poly& x);

// Every x with deg x <= deg_bound. Candidates are restricted to multiples of
// kappa = prod g^ceil(m/3) over lambda = prod g^m, which every member must be
// (the cubic is x^3 mod lambda). OpenMP kernel.
FamilyResult family_members(const Poly& lambda, const Curve& E, int deg_bound, int workers = 0,
                            u64 limit = kDefaultSearchLimit);
// Reference: tests every x of degree <= deg_bound.
FamilyResult family_members_serial(const Poly& lambda, const Curve& E, int deg_bound,
                                   u64 limit = kDefaultSearchLimit);

struct GrowResult {
  Poly lambda;
  std::vector<ECPoint> multiples;  // P, 2P, ..., N_target P
  std::vector<Poly> scaled_x;      // lambda x(iP)
  FamilyResult result;
};
// TorsionPoint for torsion P; DistinctnessFailure when lambda x(iP) collide.
GrowResult family_grow(const ECPoint& P, const Curve& E, u64 N_target, int workers = 0,
                       u64 limit = kDefaultSearchLimit);

// fbar != 0 with f * fbar in F[s^n].
Poly polynomial_in_powers(const Poly& f, u64 n);

}  // namespace kummerwit
