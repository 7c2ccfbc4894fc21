#pragma once
// Exact arithmetic in Z[zeta_lambda] = Z[x]/(Phi_lambda).
#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kummerwit/modular.hpp"

namespace kummerwit {

using BigInt = boost::multiprecision::cpp_int;

// Integer coefficients of Phi_n, low to high.
std::vector<BigInt> cyclotomic_polynomial(u64 n);

class CyclotomicRing {
 public:
  explicit CyclotomicRing(u64 lambda);
  u64 lambda() const { return lambda_; }
  std::size_t degree() const { return phi_.size() - 1; }
  const std::vector<BigInt>& phi() const { return phi_; }
  // Power-basis coordinates of zeta^j, 0 <= j < lambda.
  const std::vector<i64>& power(u64 j) const { return powers_[j]; }
  // Reduce an arbitrary integer polynomial modulo Phi_lambda.
  std::vector<BigInt> reduce(std::vector<BigInt> f) const;

 private:
  u64 lambda_;
  std::vector<BigInt> phi_;
  std::vector<std::vector<i64>> powers_;
};

class Cyclotomic {
 public:
  Cyclotomic(std::shared_ptr<const CyclotomicRing> ring, std::vector<BigInt> coeffs);
  static Cyclotomic zero(std::shared_ptr<const CyclotomicRing> ring);
  static Cyclotomic zeta_power(std::shared_ptr<const CyclotomicRing> ring, i64 j);
  // sum_j counts[j] zeta^j.
  static Cyclotomic from_exponent_counts(std::shared_ptr<const CyclotomicRing> ring, const std::vector<i64>& counts);

  u64 lambda() const { return ring_->lambda(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const;
  // The value when the element lies in Z.
  std::optional<BigInt> as_integer() const;
  std::string to_string() const;

  bool operator==(const Cyclotomic& o) const { return lambda() == o.lambda() && c_ == o.c_; }
  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);

 private:
  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<BigInt> c_;
};

}  // namespace kummerwit
