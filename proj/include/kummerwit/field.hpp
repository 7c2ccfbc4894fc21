#pragma once
// The finite field F_{p^a} = F_p[z]/(modulus) with small-word coefficients.
#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kummerwit/modular.hpp"

namespace kummerwit {

inline constexpr int kMaxExtDegree = 8;

// Element of F_{p^a}: coordinates c[0..a) in the basis 1, z, ..., z^{a-1}.
// Unused slots are always zero so that equality can be structural.
struct FF {
  std::array<std::uint32_t, kMaxExtDegree> c{};
  bool operator==(const FF&) const = default;
  // Lexicographic, low coordinate first.
  auto operator<=>(const FF&) const = default;
};

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  // Validates p (CompositeP) and the modulus (ReducibleModulus). Without a
  // modulus the lexicographically least monic irreducible of degree a is used.
  static Field make(u64 p, int a, std::optional<std::vector<u64>> modulus = std::nullopt);

  u64 p() const { return p_; }
  int a() const { return a_; }
  u64 q() const { return q_; }
  // Monic modulus coefficients over F_p, low to high, length a + 1.
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  FF zero() const { return FF{}; }
  FF one() const;
  FF from_int(i64 v) const;
  // Enumeration order matches FF ordering: index = sum c_i p^{a-1-i}.
  FF from_index(u64 k) const;
  u64 index(const FF& x) const;
  // Generator z of the extension (or 1 when a = 1 there is nothing to adjoin).
  FF gen() const;

  bool is_zero(const FF& x) const { return x == FF{}; }
  bool is_one(const FF& x) const { return x == one(); }
  // Element lies in the prime field; value() returns it.
  bool in_prime_field(const FF& x) const;
  std::uint32_t value(const FF& x) const { return x.c[0]; }

  FF add(const FF& x, const FF& y) const;
  FF sub(const FF& x, const FF& y) const;
  FF neg(const FF& x) const;
  FF mul(const FF& x, const FF& y) const;
  FF scale(const FF& x, std::uint32_t k) const;
  FF inv(const FF& x) const;  // ZeroInput on 0
  FF div(const FF& x, const FF& y) const { return mul(x, inv(y)); }
  FF pow(FF x, u64 e) const;

  bool is_square(const FF& x) const;
  std::optional<FF> sqrt(const FF& x) const;
  // x^(1/p); Frobenius is bijective on a finite field.
  FF pth_root(const FF& x) const;
  // x is an l-th power in F_q^x (x nonzero).
  bool is_lth_power(const FF& x, u64 ell) const;

  std::string to_string(const FF& x) const;
  bool same_as(const FieldCtx& o) const { return p_ == o.p_ && a_ == o.a_ && mod_ == o.mod_; }

 private:
  FieldCtx() = default;
  u64 p_ = 0;
  int a_ = 0;
  u64 q_ = 0;
  std::vector<std::uint32_t> mod_;
  FF nonresidue_{};
};

// Brute-force irreducibility over F_p for a monic coefficient vector (low to
// high); exposed for tests and modulus generation.
bool is_irreducible_over_prime_field(const std::vector<std::uint32_t>& monic, u64 p);

}  // namespace kummerwit
