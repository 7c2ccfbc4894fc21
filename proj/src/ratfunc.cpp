#include "kummerwit/ratfunc.hpp"

#include "kummerwit/error.hpp"
#include "kummerwit/factor.hpp"

namespace kummerwit {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroInput, "rational function with zero denominator");
  const Field& F = den.field();
  if (num.is_zero()) {
    num_ = Poly(F);
    den_ = Poly::one(F);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = num / g, d = den / g;
  FF inv_lc = F->inv(d.lc());
  num_ = scale(n, inv_lc);
  den_ = scale(d, inv_lc);
}

bool RatFunc::operator<(const RatFunc& o) const {
  if (!(den_ == o.den_)) return den_ < o.den_;
  return num_ < o.num_;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.den() == y.den()) return RatFunc(x.num() + y.num(), x.den());
  return RatFunc(x.num() * y.den() + y.num() * x.den(), x.den() * y.den());
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) {
  if (x.den() == y.den()) return RatFunc(x.num() - y.num(), x.den());
  return RatFunc(x.num() * y.den() - y.num() * x.den(), x.den() * y.den());
}

RatFunc operator-(const RatFunc& x) { return RatFunc(-x.num(), x.den()); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  // Cross-cancel first to keep intermediate degrees small.
  if (x.is_zero() || y.is_zero()) return RatFunc(x.field());
  Poly g1 = gcd(x.num(), y.den());
  Poly g2 = gcd(y.num(), x.den());
  return RatFunc((x.num() / g1) * (y.num() / g2), (x.den() / g2) * (y.den() / g1));
}

RatFunc inverse(const RatFunc& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of zero rational function");
  return RatFunc(x.den(), x.num());
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * inverse(y); }

RatFunc pow(const RatFunc& x, i64 e) {
  if (e < 0) return pow(inverse(x), -e);
  return RatFunc(pow(x.num(), static_cast<u64>(e)), pow(x.den(), static_cast<u64>(e)));
}

std::optional<Poly> poly_sqrt(const Poly& f) {
  const Field& F = f.field();
  if (f.is_zero()) return f;
  auto lc_root = F->sqrt(f.lc());
  if (!lc_root) return std::nullopt;
  Poly root = Poly::constant(F, *lc_root);
  for (const auto& [g, m] : squarefree_decomposition(monic(f))) {
    if (m % 2) return std::nullopt;
    root = root * pow(g, static_cast<u64>(m / 2));
  }
  // Prefer the root with the smaller leading coefficient.
  Poly other = -root;
  if (other.lc() < root.lc()) root = other;
  return root;
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f) {
  auto n = poly_sqrt(f.num());
  if (!n) return std::nullopt;
  auto d = poly_sqrt(f.den());
  if (!d) return std::nullopt;
  // den is monic, so its root is chosen monic up to sign; fold the sign into num.
  Poly dn = *d, nn = *n;
  if (!dn.is_monic()) {
    dn = -dn;
    nn = -nn;
  }
  RatFunc g(nn, dn);
  RatFunc other = -g;
  if (other.num().lc() < g.num().lc()) return other;
  return g;
}

}  // namespace kummerwit
