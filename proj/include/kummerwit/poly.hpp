#pragma once
// Dense univariate polynomials over F_q in the indeterminate s.
#include <climits>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "kummerwit/field.hpp"

namespace kummerwit {

// deg(0): compares below every genuine degree.
inline constexpr int kDegNegInf = INT_MIN;

class Poly {
 public:
  Poly() = default;
  explicit Poly(Field F) : F_(std::move(F)) {}
  Poly(Field F, std::vector<FF> coeffs);

  static Poly constant(const Field& F, const FF& c);
  static Poly from_int(const Field& F, i64 v);
  static Poly one(const Field& F) { return constant(F, F->one()); }
  static Poly s(const Field& F) { return monomial(F, F->one(), 1); }
  static Poly monomial(const Field& F, const FF& c, int k);

  const Field& field() const { return F_; }
  const FieldCtx& ctx() const { return *F_; }
  const std::vector<FF>& coeffs() const { return c_; }
  int deg() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;
  bool is_monic() const;
  FF lc() const { return c_.empty() ? FF{} : c_.back(); }
  FF coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : FF{}; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  // Canonical order: degree first, then coefficients low to high.
  bool operator<(const Poly& o) const;

 private:
  void trim();
  Field F_;
  std::vector<FF> c_;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const Poly& f, const Poly& g);
Poly scale(const Poly& f, const FF& c);
// Throws ZeroInput on division by zero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
bool divides(const Poly& d, const Poly& f);

Poly monic(const Poly& f);
Poly derivative(const Poly& f);
FF eval(const Poly& f, const FF& x);
Poly pow(const Poly& f, u64 e);
Poly mulmod(const Poly& f, const Poly& g, const Poly& m);
Poly powmod(const Poly& f, u64 e, const Poly& m);
// f(s^k).
Poly compose_power(const Poly& f, u64 k);
// f(g).
Poly compose(const Poly& f, const Poly& g);

struct ExtGcd {
  Poly d, u, v;
};
// d = gcd(f, g) monic, u f + v g = d. BothZero when f = g = 0.
ExtGcd poly_ext_gcd(const Poly& f, const Poly& g);
Poly gcd(const Poly& f, const Poly& g);
Poly lcm(const Poly& f, const Poly& g);
bool coprime(const Poly& f, const Poly& g);
// Inverse of f modulo m (NotCoprime if gcd != 1).
Poly invmod(const Poly& f, const Poly& m);

// Chinese remainders; moduli pairwise coprime and nonconstant.
Poly crt(const std::vector<std::pair<Poly, Poly>>& pairs);

// Canonical enumeration of F_q[s]: by degree, then coefficient vector
// lexicographic with c0 most significant. poly_at(0) = 0.
u64 count_polys_upto(const FieldCtx& F, int max_deg);  // polys of degree <= max_deg, including 0
Poly poly_at(const Field& F, u64 index);
// Monic polynomials of degree exactly d in the same order.
u64 count_monic(const FieldCtx& F, int d);
Poly monic_at(const Field& F, int d, u64 index);

struct PolyHash {
  std::size_t operator()(const Poly& f) const;
};

}  // namespace kummerwit
