#include "kummerwit/cyclotomic.hpp"

#include <map>

#include "kummerwit/error.hpp"

namespace kummerwit {

namespace {

// Exact quotient of f by a monic g over Z.
std::vector<BigInt> div_exact(std::vector<BigInt> f, const std::vector<BigInt>& g) {
  std::size_t dg = g.size() - 1;
  std::vector<BigInt> qt(f.size() - dg);
  for (std::size_t k = f.size(); k-- > dg;) {
    BigInt c = f[k];
    qt[k - dg] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dg; ++i) f[k - dg + i] -= c * g[i];
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (f[i] != 0) throw Error(ErrorCode::InvalidArgument, "inexact cyclotomic division");
  return qt;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(u64 n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Phi_0 is undefined");
  std::map<u64, std::vector<BigInt>> memo;
  for (u64 d : divisors(n)) {
    std::vector<BigInt> f(d + 1);
    f[0] = -1;
    f[d] = 1;
    for (const auto& [e, phi_e] : memo)
      if (d % e == 0) f = div_exact(std::move(f), phi_e);
    memo.emplace(d, std::move(f));
  }
  return memo.at(n);
}

CyclotomicRing::CyclotomicRing(u64 lambda) : lambda_(lambda), phi_(cyclotomic_polynomial(lambda)) {
  std::size_t deg = degree();
  std::vector<i64> phi_small(phi_.size());
  for (std::size_t i = 0; i < phi_.size(); ++i) phi_small[i] = static_cast<i64>(phi_[i]);
  powers_.assign(lambda, std::vector<i64>(deg, 0));
  std::vector<i64> cur(deg, 0);
  if (deg == 0) return;  // lambda = 1 never arises for moduli >= 3
  cur[0] = 1;
  for (u64 j = 0; j < lambda; ++j) {
    powers_[j] = cur;
    // multiply by x and reduce with the monic Phi
    i64 top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1] - top * phi_small[i];
    cur[0] = -top * phi_small[0];
  }
}

std::vector<BigInt> CyclotomicRing::reduce(std::vector<BigInt> f) const {
  std::size_t deg = degree();
  for (std::size_t k = f.size(); k-- > deg;) {
    BigInt c = f[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) f[k - deg + i] -= c * phi_[i];
  }
  f.resize(deg);
  return f;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicRing> ring, std::vector<BigInt> coeffs)
    : ring_(std::move(ring)), c_(ring_->reduce(std::move(coeffs))) {}

Cyclotomic Cyclotomic::zero(std::shared_ptr<const CyclotomicRing> ring) {
  std::size_t d = ring->degree();
  return Cyclotomic(std::move(ring), std::vector<BigInt>(d));
}

Cyclotomic Cyclotomic::zeta_power(std::shared_ptr<const CyclotomicRing> ring, i64 j) {
  u64 jj = static_cast<u64>(mod_floor(j, static_cast<i64>(ring->lambda())));
  const auto& pw = ring->power(jj);
  std::vector<BigInt> c(pw.begin(), pw.end());
  return Cyclotomic(std::move(ring), std::move(c));
}

Cyclotomic Cyclotomic::from_exponent_counts(std::shared_ptr<const CyclotomicRing> ring,
                                            const std::vector<i64>& counts) {
  std::size_t d = ring->degree();
  std::vector<BigInt> acc(d);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (!counts[j]) continue;
    const auto& pw = ring->power(j);
    for (std::size_t i = 0; i < d; ++i)
      if (pw[i]) acc[i] += BigInt(counts[j]) * pw[i];
  }
  return Cyclotomic(std::move(ring), std::move(acc));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::optional<BigInt> Cyclotomic::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_.empty() ? BigInt(0) : c_[0];
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    BigInt c = c_[i];
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    if (c < 0) c = -c;
    bool show = c != 1 || i == 0;
    if (show) out += c.str();
    if (i > 0) {
      if (show) out += "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.lambda() != y.lambda()) throw Error(ErrorCode::InvalidArgument, "cyclotomic rings differ");
  std::vector<BigInt> c = x.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.c_[i];
  return Cyclotomic(x.ring_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.lambda() != y.lambda()) throw Error(ErrorCode::InvalidArgument, "cyclotomic rings differ");
  if (x.c_.empty()) return x;
  std::vector<BigInt> c(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
  }
  return Cyclotomic(x.ring_, std::move(c));
}

}  // namespace kummerwit
