#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "kummerwit/curve.hpp"
#include "kummerwit/error.hpp"
#include "support.hpp"

using namespace kummerwit;
using namespace kwtest;

namespace {

// Chord-tangent law written out directly for y^2 = x^3 + a2 x^2 + a4 x.
ECPoint oracle_add(const ECPoint& P, const ECPoint& Q, const Curve& E) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  const Field& F = E.field();
  RatFunc lam;
  if (P.x == Q.x) {
    if ((P.y + Q.y).is_zero()) return ECPoint::infinity();
    RatFunc three = RatFunc::from_int(F, 3), two = RatFunc::from_int(F, 2);
    lam = (three * P.x * P.x + two * E.a2() * P.x + E.a4()) / (two * P.y);
  } else {
    lam = (Q.y - P.y) / (Q.x - P.x);
  }
  RatFunc x3 = lam * lam - E.a2() - P.x - Q.x;
  RatFunc y3 = -(P.y + lam * (x3 - P.x));
  return ECPoint::affine(x3, y3);
}

ECPoint oracle_mul(int k, const ECPoint& P, const Curve& E) {
  ECPoint acc = ECPoint::infinity();
  for (int i = 0; i < k; ++i) acc = oracle_add(acc, P, E);
  return acc;
}

// j from c4 and the discriminant: c4 = 16 a2^2 - 48 a4, D = 16 a4^2 (a2^2 - 4 a4).
RatFunc oracle_j(const Curve& E) {
  const Field& F = E.field();
  auto k = [&](i64 v) { return RatFunc::from_int(F, v); };
  RatFunc a2 = E.a2(), a4 = E.a4();
  RatFunc c4 = k(16) * a2 * a2 - k(48) * a4;
  RatFunc D = k(16) * a4 * a4 * (a2 * a2 - k(4) * a4);
  return c4 * c4 * c4 / D;
}

// Points with polynomial x, deg x <= d, found by trying every y of the right degree.
std::set<ECPoint> oracle_integral_points(const Curve& E, int d) {
  const Field& F = E.field();
  std::set<ECPoint> out;
  u64 nx = count_polys_upto(*F, d);
  for (u64 i = 0; i < nx; ++i) {
    Poly x = poly_at(F, i);
    RatFunc rhs = E.rhs(RatFunc(x));
    if (rhs.is_zero()) {
      out.insert(ECPoint::affine(RatFunc(x), RatFunc(F)));
      continue;
    }
    int dy = rhs.num().deg();
    if (dy % 2) continue;
    u64 ny = count_polys_upto(*F, dy / 2);
    for (u64 j = count_polys_upto(*F, dy / 2 - 1); j < ny; ++j) {
      Poly y = poly_at(F, j);
      if (y * y == rhs.num()) out.insert(ECPoint::affine(RatFunc(x), RatFunc(y)));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("j-invariant") {
  for (u64 p : {3, 5, 7}) {
    Field F = GF(p);
    Curve E1 = Curve::make(F, 1);
    RatFunc closed = R(F, "256*(s^2-s+1)^3/(s^2*(s-1)^2)");
    CHECK(j_invariant(E1) == closed);
    CHECK(j_invariant_closed_form_E1(F) == closed);
    CHECK(oracle_j(E1) == closed);
    for (u64 N : {2, 4, 11})
      if (N % p) CHECK(j_invariant(Curve::make(F, N)) == oracle_j(Curve::make(F, N)));
  }
  Field F3 = GF(3);
  CHECK(to_string(j_invariant(Curve::make(F3, 1))) == "s^6+2*s^3+1 / s^4+s^3+s^2");
  RatFunc j72 = j_invariant(Curve::make(GF(7), 2));
  CHECK((j72.num().deg() > 0 || j72.den().deg() > 0));
  CHECK_THROWS_AS(Curve::make(F3, 3), Error);
  CHECK_THROWS_AS(Curve::make(F3, 0), Error);
}

TEST_CASE("point literals") {
  Field F = GF(3);
  ECPoint P = parse_point(F, "(s; s^2+s)");
  CHECK_FALSE(P.inf);
  CHECK(to_string(P) == "(s; s^2+s)");
  CHECK(parse_point(F, "inf").inf);
  CHECK(to_string(ECPoint::infinity()) == "inf");
  CHECK_THROWS_AS(parse_point(F, "(s, s)"), Error);
}

TEST_CASE("group law examples") {
  Field F = GF(3);
  Curve E2 = Curve::make(F, 2);
  ECPoint O = ECPoint::affine(RatFunc(F), RatFunc(F));
  CHECK(ec_add(O, O, E2).inf);
  ECPoint P = parse_point(F, "(s; s^2+s)");
  CHECK(on_curve(P, E2));
  CHECK(ec_add(P, ECPoint::infinity(), E2) == P);
  CHECK(ec_add(P, ec_neg(P), E2).inf);
  // duplication by the oracle, frozen
  CHECK(oracle_mul(2, P, E2) == O);
  CHECK(ec_mul(2, P, E2) == O);
  CHECK(ec_mul(4, P, E2).inf);
  CHECK(ec_mul(-1, P, E2) == ec_neg(P));
  CHECK(ec_mul(0, P, E2).inf);
  ECPoint off = parse_point(F, "(s; s)");
  CHECK_FALSE(on_curve(off, E2));
  CHECK_THROWS_AS(ec_add(off, P, E2), Error);
  CHECK_THROWS_AS(is_torsion(off, E2), Error);

  Curve E4 = Curve::make(F, 4);
  ECPoint Q = parse_point(F, "(s; s^3+2*s^2+s)");
  CHECK(to_string(ec_mul(2, Q, E4)) == "(s^4+s^3+s^2 / s^2+2*s+1; 2*s^7+s^6+2*s^3+s^2 / s^3+1)");
  for (int k = 1; k <= 16; ++k) CHECK(ec_mul(k, Q, E4) == oracle_mul(k, Q, E4));
}

TEST_CASE("group law properties") {
  std::mt19937_64 rng(61);
  for (auto [p, N] : {std::pair<u64, u64>{3, 4}, {5, 2}, {7, 3}}) {
    Field F = GF(p);
    Curve E = Curve::make(F, N);
    std::vector<ECPoint> pool = two_torsion(E);
    for (const ECPoint& P : point_search(E, 1, 0)) pool.push_back(P);
    std::size_t base = pool.size();
    for (std::size_t i = 0; i < base; ++i)
      if (!is_torsion(pool[i], E)) {
        pool.push_back(ec_mul(2, pool[i], E));
        pool.push_back(ec_mul(3, pool[i], E));
      }
    REQUIRE(pool.size() >= 5);
    for (int t = 0; t < 120; ++t) {
      const ECPoint& A = pool[rng() % pool.size()];
      const ECPoint& B = pool[rng() % pool.size()];
      const ECPoint& C = pool[rng() % pool.size()];
      ECPoint ab = ec_add(A, B, E);
      CHECK(ab == ec_add(B, A, E));
      CHECK(ab == oracle_add(A, B, E));
      CHECK(ec_add(ab, C, E) == ec_add(A, ec_add(B, C, E), E));
      CHECK(on_curve(ab, E));
      CHECK(ec_add(A, ec_neg(A), E).inf);
    }
  }
}

TEST_CASE("torsion") {
  for (u64 p : {3, 5, 7})
    for (u64 N : {1, 2, 4, 5}) {
      if (N % p == 0) continue;
      Field F = GF(p);
      Curve E = Curve::make(F, N);
      auto tt = two_torsion(E);
      CHECK(tt.size() == 4);
      for (const ECPoint& T : tt) {
        CHECK(on_curve(T, E));
        CHECK(oracle_add(T, T, E).inf);
        CHECK(is_torsion(T, E));
      }
      auto all = torsion_points(E);
      CHECK(all.size() == (N % 2 ? 4u : 8u));
      for (const ECPoint& T : all) CHECK(oracle_mul(4, T, E).inf);
    }
  Field F = GF(3);
  Curve E2 = Curve::make(F, 2);
  // (s, s(s+1)) has order 4 on E_2: it is torsion
  CHECK(is_torsion(parse_point(F, "(s; s^2+s)"), E2));
  CHECK(is_torsion(parse_point(F, "(-1; 0)"), E2));
  Curve E4 = Curve::make(F, 4);
  ECPoint Q = parse_point(F, "(s; s^3+2*s^2+s)");
  CHECK_FALSE(is_torsion(Q, E4));
  ECPoint acc = ECPoint::infinity();
  for (int k = 1; k <= 16; ++k) {
    acc = oracle_add(acc, Q, E4);
    CHECK_FALSE(acc.inf);
  }
}

TEST_CASE("point search") {
  Field F3 = GF(3);
  Curve E2 = Curve::make(F3, 2);
  auto pts = point_search(E2, 1, 0);
  std::set<ECPoint> got(pts.begin(), pts.end());
  for (const char* lit : {"(0; 0)", "(-1; 0)", "(s; s^2+s)", "(s; -s^2-s)"}) CHECK(got.count(parse_point(F3, lit)));
  // E_1 with constant x: only the two constant 2-torsion points
  auto e1 = point_search(Curve::make(F3, 1), 0, 0);
  REQUIRE(e1.size() == 2);
  for (const ECPoint& P : e1) CHECK(P.y.is_zero());
  for (u64 N : {1, 2, 3, 4}) CHECK(point_search(Curve::make(GF(7), N), 0, 0).size() <= 8);

  for (auto [p, N] : {std::pair<u64, u64>{3, 2}, {3, 4}, {5, 3}, {7, 2}}) {
    Field F = GF(p);
    Curve E = Curve::make(F, N);
    for (int nd = 0; nd <= 2; ++nd) {
      if (p > 3 && nd > 1) break;
      auto par = point_search(E, nd, 0);
      std::set<ECPoint> lib(par.begin(), par.end());
      CHECK(lib == oracle_integral_points(E, nd));
    }
    for (auto [nd, dd] : {std::pair<int, int>{1, 1}, {2, 1}, {2, 2}}) {
      if (p > 3 && nd + dd > 3) break;
      auto par = point_search(E, nd, dd, 2);
      auto ser = point_search_serial(E, nd, dd);
      CHECK(par == ser);
      CHECK(std::is_sorted(par.begin(), par.end()));
      for (const ECPoint& P : par) CHECK(on_curve(P, E));
      // monotone in the bounds
      auto small = point_search(E, nd - 1, dd - 1);
      std::set<ECPoint> big(par.begin(), par.end());
      for (const ECPoint& P : small) CHECK(big.count(P));
    }
  }
  CHECK_THROWS_AS(point_search(E2, 6, 6, 0, 1000), Error);
}

TEST_CASE("stabilisation probe") {
  CHECK(stabilization_probe(3, 1, 7, 11, 0, 1, 0).n_stable == 0);
  ProbeResult r = stabilization_probe(3, 1, 7, 11, 1, 0, 0);
  CHECK(r.n_stable == 0);
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[1].N == 77);
  CHECK(r.levels[1].new_points.empty());
  // a level-0 point lifts to level 1 through s -> s^r
  Field F = GF(5);
  ECPoint P = parse_point(F, "(s; s^2+s)");
  REQUIRE(on_curve(P, Curve::make(F, 2)));
  ECPoint L = lift_point(P, 3);
  CHECK(to_string(L) == "(s^3; s^6+s^3)");
  CHECK(on_curve(L, Curve::make(F, 6)));
}
