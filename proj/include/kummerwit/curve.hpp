#pragma once
// E_N : y^2 = x (x + 1) (x + s^N) over F_q(s).
#include <string>
#include <string_view>
#include <vector>

#include "kummerwit/ratfunc.hpp"

namespace kummerwit {

class Curve {
 public:
  // BadN when N = 0 or p | N.
  static Curve make(const Field& F, u64 N);
  const Field& field() const { return F_; }
  u64 N() const { return N_; }
  const RatFunc& a2() const { return a2_; }
  const RatFunc& a4() const { return a4_; }
  // x^3 + a2 x^2 + a4 x
  RatFunc rhs(const RatFunc& x) const;

 private:
  Curve(Field F, u64 N, RatFunc a2, RatFunc a4) : F_(std::move(F)), N_(N), a2_(std::move(a2)), a4_(std::move(a4)) {}
  Field F_;
  u64 N_;
  RatFunc a2_, a4_;
};

// From the b-invariants of the Weierstrass model.
RatFunc j_invariant(const Curve& E);
// 256 (s^2 - s + 1)^3 / (s^2 (s - 1)^2) over F.
RatFunc j_invariant_closed_form_E1(const Field& F);

struct ECPoint {
  bool inf = true;
  RatFunc x, y;
  static ECPoint infinity() { return {}; }
  static ECPoint affine(RatFunc x, RatFunc y) { return {false, std::move(x), std::move(y)}; }
  bool operator==(const ECPoint& o) const { return inf == o.inf && (inf || (x == o.x && y == o.y)); }
  bool operator<(const ECPoint& o) const;
};

std::string to_string(const ECPoint& P);
// "inf" or "(x; y)".
ECPoint parse_point(const Field& F, std::string_view text);

bool on_curve(const ECPoint& P, const Curve& E);
ECPoint ec_neg(const ECPoint& P);
// OffCurve if an input is not on E.
ECPoint ec_add(const ECPoint& P, const ECPoint& Q, const Curve& E);
ECPoint ec_mul(i64 k, const ECPoint& P, const Curve& E);

std::vector<ECPoint> two_torsion(const Curve& E);
// Full torsion subgroup: (Z/2)^2 for odd N; for even N also the four points
// with x = +-s^(N/2), giving Z/2 x Z/4.
std::vector<ECPoint> torsion_points(const Curve& E);
bool is_torsion(const ECPoint& P, const Curve& E);

inline constexpr u64 kDefaultSearchLimit = 20'000'000;

// Affine points with x = u/w, gcd(u, w) = 1, w monic, deg u <= num_deg,
// deg w <= den_deg, sorted. SearchTooLarge past `limit` candidate pairs.
std::vector<ECPoint> point_search(const Curve& E, int num_deg, int den_deg, int workers = 0,
                                  u64 limit = kDefaultSearchLimit);
// Reference: plain double loop, squareness through ratfunc_sqrt only.
std::vector<ECPoint> point_search_serial(const Curve& E, int num_deg, int den_deg, u64 limit = kDefaultSearchLimit);

struct ProbeLevel {
  u64 n, N;
  int num_deg, den_deg;
  std::vector<ECPoint> points;
  std::vector<ECPoint> new_points;  // not images of level n - 1 points
};
struct ProbeResult {
  u64 n_stable;  // heuristic: last level that produced new points (0 if none)
  std::vector<ProbeLevel> levels;
};
// P(s) at level n maps to P(s^r) at level n + 1.
ECPoint lift_point(const ECPoint& P, u64 r);
ProbeResult stabilization_probe(u64 p, int a, u64 q, u64 r, u64 n_max, int num_deg, int den_deg, int workers = 0,
                                u64 limit = kDefaultSearchLimit);

}  // namespace kummerwit
