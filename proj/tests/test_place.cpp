#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "kummerwit/error.hpp"
#include "kummerwit/factor.hpp"
#include "kummerwit/place.hpp"
#include "support.hpp"

using namespace kummerwit;
using namespace kwtest;

TEST_CASE("places and residue sizes") {
  Field F = GF(3);
  CHECK(Place::infinity(F).residue_size() == 3);
  CHECK(Place::finite(P(F, "s^2+1")).residue_size() == 9);
  CHECK(to_string(Place::infinity(F)) == "inf");
  CHECK(parse_place(F, "inf").is_infinity());
  CHECK(parse_place(F, "s+2") == Place::finite(P(F, "s+2")));
  CHECK_THROWS_AS(Place::finite(P(F, "s^2+2")), Error);  // (s+1)(s+2)
  CHECK_THROWS_AS(Place::finite(P(F, "2*s+1")), Error);  // not monic
  CHECK(GF(3, 2)->q() == 9);
  CHECK(Place::infinity(GF(3, 2)).residue_size() == 9);
}

TEST_CASE("place data") {
  Field F7 = GF(7);
  Place t = Place::finite(P(F7, "s"));
  PlaceData a = place_data(R(F7, "s"), t, 3);
  CHECK(a.v == 1);
  CHECK_FALSE(a.residue);
  CHECK_FALSE(a.is_lth_power);
  PlaceData b = place_data(R(F7, "s+1"), t, 3);
  CHECK(b.v == 0);
  REQUIRE(b.residue);
  CHECK(b.residue->is_one());
  REQUIRE(b.is_lth_power);
  CHECK(*b.is_lth_power);
  Field F3 = GF(3);
  CHECK(place_data(R(F3, "s"), Place::infinity(F3), 2).v == -1);
  CHECK_THROWS_AS(place_data(R(F3, "0"), Place::infinity(F3), 2), Error);
  CHECK_THROWS_AS(place_data(R(F3, "s"), Place::infinity(F3), 3), Error);  // p | l

  // 3 is not a cube mod 7
  PlaceData c = place_data(R(F7, "3"), t, 3);
  CHECK(c.v == 0);
  CHECK_FALSE(*c.is_lth_power);
}

TEST_CASE("valuations are additive") {
  std::mt19937_64 rng(31);
  for (Field F : {GF(3), GF(5)}) {
    auto pl = places_upto(F, 2);
    for (int t = 0; t < 200; ++t) {
      RatFunc x = random_nonzero_ratfunc(F, rng, 4), y = random_nonzero_ratfunc(F, rng, 4);
      for (const Place& Pl : pl) CHECK(valuation(x * y, Pl) == valuation(x, Pl) + valuation(y, Pl));
    }
  }
  Field F = GF(3);
  CHECK(valuation(R(F, "1/s^2"), Place::infinity(F)) == 2);
  CHECK(valuation(R(F, "(s+1)^3*s/(s+2)"), Place::finite(P(F, "s+1"))) == 3);
  CHECK(valuation(R(F, "(s+1)^3*s/(s+2)"), Place::finite(P(F, "s+2"))) == -1);
}

TEST_CASE("residue l-th powers against brute force") {
  Field F = GF(7);
  Place Pl = Place::finite(P(F, "s^2+1"));  // irreducible since -1 is a non-square mod 7
  ResidueField k(Pl);
  CHECK(k.size() == 49);
  std::set<Poly> cubes;
  for (u64 i = 1; i < 49; ++i) {
    Poly x = poly_at(F, i);
    cubes.insert(k.pow(x, 3));
  }
  for (u64 i = 1; i < 49; ++i) {
    Poly x = poly_at(F, i);
    CHECK(k.is_lth_power(x, 3) == (cubes.count(x) == 1));
  }
}

TEST_CASE("factoring places in the tower") {
  Field F = GF(3);
  auto above = factor_place_in_tower(Place::finite(P(F, "s-1")), 11, 1);
  REQUIRE(above.size() == 3);
  CHECK(above[0].above == Place::finite(P(F, "s+2")));
  CHECK(above[0].e == 1);
  CHECK(above[0].f == 1);
  Poly prod = Poly::one(F);
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(above[i].e == 1);
    CHECK(above[i].f == 5);
    prod = prod * above[i].above.poly();
  }
  // q1 q2 = Phi_11 over F_3
  CHECK(prod == P(F, "s^10+s^9+s^8+s^7+s^6+s^5+s^4+s^3+s^2+s+1"));

  auto inf = factor_place_in_tower(Place::infinity(F), 11, 2);
  REQUIRE(inf.size() == 1);
  CHECK(inf[0].above.is_infinity());
  CHECK(inf[0].e == 121);
  CHECK(inf[0].f == 1);

  auto triv = factor_place_in_tower(Place::finite(P(F, "s^2+1")), 11, 0);
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].e == 1);
  CHECK(triv[0].f == 1);
}

TEST_CASE("sum of e f equals the tower degree") {
  for (Field F : {GF(3), GF(5)})
    for (u64 r : {u64{2}, u64{7}})
      for (const Place& Pl : places_upto(F, 2)) {
        if (r == F->p()) continue;
        u64 rn = 1;
        for (unsigned n = 0; n <= 3; ++n, rn *= r) {
          if (rn * static_cast<u64>(Pl.degree()) > 350) break;
          u64 sum = 0;
          for (const auto& tp : factor_place_in_tower(Pl, r, n)) {
            if (!tp.above.is_infinity()) CHECK(is_irreducible(tp.above.poly()));
            sum += tp.e * tp.f;
          }
          CHECK(sum == rn);
        }
      }
}

TEST_CASE("boundedness probe") {
  Field F = GF(3);
  CHECK(boundedness_probe(Place::finite(P(F, "s-1")), 11, 5, 3));
  CHECK(boundedness_probe(Place::infinity(F), 11, 5, 3));
  CHECK_THROWS_AS(boundedness_probe(Place::finite(P(F, "s")), 11, 11, 2), Error);
  CHECK_THROWS_AS(boundedness_probe(Place::finite(P(F, "s")), 11, 3, 2), Error);
  CHECK_THROWS_AS(boundedness_probe(Place::finite(P(F, "s")), 11, 4, 2), Error);
  BoundednessResult b = boundedness_chain(Place::finite(P(F, "s-1")), 11, 5, 3);
  REQUIRE(b.bounded);
  CHECK(b.chain.size() == 4);
  for (u64 d : b.step_degrees) CHECK(d % 5 != 0);
  // every link lies over the previous one: P_k(s^11) is divisible by P_{k+1}
  for (std::size_t i = 0; i + 1 < b.chain.size(); ++i)
    CHECK(divides(b.chain[i + 1].poly(), compose_power(b.chain[i].poly(), 11)));
}
