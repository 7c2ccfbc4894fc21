#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kummerwit/factor.hpp"
#include "support.hpp"

using namespace kummerwit;
using namespace kwtest;

namespace {

// Number of monic irreducibles of degree n over F_q (Moebius inversion).
u64 gauss_count(u64 q, int n) {
  auto mobius = [](int k) {
    int res = 1;
    for (int d = 2; d * d <= k; ++d)
      if (k % d == 0) {
        k /= d;
        if (k % d == 0) return 0;
        res = -res;
      }
    return k > 1 ? -res : res;
  };
  i64 s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      i64 qd = 1;
      for (int i = 0; i < n / d; ++i) qd *= static_cast<i64>(q);
      s += mobius(d) * qd;
    }
  return static_cast<u64>(s / n);
}

}  // namespace

TEST_CASE("irreducible streams") {
  Field F3 = GF(3);
  auto lin = irreducibles(F3, 1);
  REQUIRE(lin.size() == 3);
  CHECK(lin[0] == P(F3, "s"));
  CHECK(lin[1] == P(F3, "s+1"));
  CHECK(lin[2] == P(F3, "s+2"));
  CHECK(irreducibles(F3, 2).size() == 3);
  CHECK(irreducibles(GF(7), 1).size() == 7);
  for (Field F : {GF(3), GF(5), GF(3, 2)})
    for (int d = 1; d <= (F->q() > 5 ? 3 : 4); ++d) {
      auto list = irreducibles(F, d);
      CHECK(list.size() == gauss_count(F->q(), d));
      for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(list[i].is_monic());
        if (i) CHECK(list[i - 1] < list[i]);
      }
      if (d <= 3)
        for (const auto& g : list) CHECK(brute_irreducible(g));
    }
  // a copied stream restarts from the copy point
  IrreducibleStream a(F3, 2);
  a.next();
  IrreducibleStream b = a;
  CHECK(*a.next() == *b.next());
}

TEST_CASE("factorisation reconstructs its input") {
  std::mt19937_64 rng(21);
  for (Field F : {GF(3), GF(5), GF(7), GF(3, 2)})
    for (int t = 0; t < 80; ++t) {
      Poly f = random_nonzero(F, rng, 1 + static_cast<int>(rng() % 9));
      if (rng() % 3 == 0) f = f * f * random_nonzero(F, rng, 2);
      Factorization fac = factor(f);
      Poly prod = Poly::constant(F, fac.unit);
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        auto& [g, e] = fac.factors[i];
        CHECK(g.is_monic());
        CHECK(is_irreducible(g));
        if (g.deg() <= 4) CHECK(brute_irreducible(g));
        if (i) CHECK(fac.factors[i - 1].first < g);
        prod = prod * pow(g, static_cast<u64>(e));
      }
      CHECK(prod == f);
    }
}

TEST_CASE("squarefree and distinct degree pieces") {
  Field F = GF(3);
  // (s+1)^3 (s^2+1)^2 s : note the p-th power part
  Poly f = P(F, "(s+1)^3*(s^2+1)^2*s");
  auto sq = squarefree_decomposition(f);
  Poly prod = Poly::one(F);
  for (auto& [g, m] : sq) prod = prod * pow(g, static_cast<u64>(m));
  CHECK(prod == monic(f));
  auto ddf = distinct_degree_factorization(P(F, "s*(s+1)*(s^2+1)*(s^2+s+2)"));
  REQUIRE(ddf.size() == 2);
  CHECK(ddf[0].second == 1);
  CHECK(ddf[0].first == P(F, "s*(s+1)"));
  CHECK(ddf[1].second == 2);
  auto edf = equal_degree_factorization(ddf[1].first, 2);
  CHECK(edf.size() == 2);
}

TEST_CASE("irreducibility agrees with brute force") {
  std::mt19937_64 rng(23);
  for (Field F : {GF(3), GF(5)})
    for (int t = 0; t < 200; ++t) {
      Poly f = random_monic(F, rng, 1 + static_cast<int>(rng() % 5));
      CHECK(is_irreducible(f) == brute_irreducible(f));
    }
}

TEST_CASE("half norm power matches direct exponentiation") {
  Field F = GF(3);
  Poly m = P(F, "s^3+2*s+1");
  REQUIRE(is_irreducible(m));
  // (27 - 1)/2 = 13
  for (const char* b : {"s", "s+1", "2*s^2+1"}) CHECK(half_norm_power(P(F, b), 3, m) == powmod(P(F, b), 13, m));
}
