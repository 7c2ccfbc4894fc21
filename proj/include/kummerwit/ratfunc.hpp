#pragma once
// Elements of F_q(s) kept in lowest terms with a monic denominator.
#include <optional>

#include "kummerwit/poly.hpp"

namespace kummerwit {

class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Field F) : num_(F), den_(Poly::one(F)) {}
  explicit RatFunc(const Poly& p) : num_(p), den_(Poly::one(p.field())) {}
  // Reduces; ZeroInput if den = 0.
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc from_int(const Field& F, i64 v) { return RatFunc(Poly::from_int(F, v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return den_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  // Order by denominator, then numerator.
  bool operator<(const RatFunc& o) const;

 private:
  Poly num_, den_;
};

RatFunc operator+(const RatFunc& x, const RatFunc& y);
RatFunc operator-(const RatFunc& x, const RatFunc& y);
RatFunc operator-(const RatFunc& x);
RatFunc operator*(const RatFunc& x, const RatFunc& y);
RatFunc operator/(const RatFunc& x, const RatFunc& y);
RatFunc inverse(const RatFunc& x);
RatFunc pow(const RatFunc& x, i64 e);

// g with g^2 = f, or none. Of the two roots, the one whose numerator has the
// smaller leading coefficient is returned.
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f);
std::optional<Poly> poly_sqrt(const Poly& f);

}  // namespace kummerwit
