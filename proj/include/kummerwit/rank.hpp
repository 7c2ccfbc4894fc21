#pragma once
// Prime search for (r, q) and the rank sum over divisors of q r^n.
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "kummerwit/characters.hpp"

namespace kummerwit {

// First `count` primes r != p with r = 3 mod 4 and (p/r) = 1.
std::vector<u64> find_r(u64 p, std::size_t count);
// Least odd prime q not in {p, r} with (p/q) = -1 and (q/r) = -1.
u64 find_q(u64 p, u64 r, u64 ceiling = 10000);
// Both Legendre conditions for a user-supplied q.
bool valid_q(u64 p, u64 r, u64 q);

enum class BalanceMode { Auto, Oracle, Fast };

// Thread-safe memo of balance verdicts keyed by (x, e). Auto tries the
// Legendre/going-up rules (consulting the memo for going-up) and falls back
// to the character scan.
class BalanceEngine {
 public:
  explicit BalanceEngine(BalanceMode mode = BalanceMode::Auto, int workers = 0) : mode_(mode), workers_(workers) {}
  struct Answer {
    bool balanced;
    std::string route;  // "fast" | "oracle" | "cache"
  };
  Answer decide(i64 x, u64 e);
  std::size_t oracle_calls() const;

 private:
  std::optional<bool> cached(i64 x, u64 e) const;
  BalanceMode mode_;
  int workers_;
  mutable std::mutex mu_;
  std::map<std::pair<i64, u64>, bool> memo_;
  std::size_t oracle_calls_ = 0;
};

struct DivisorEntry {
  u64 e;
  bool excluded;  // e <= 2
  bool balanced;
  u64 index;      // phi(e) / ord(p^a mod e)
  std::string route;
};

struct RankReport {
  u64 p, a, q, r, n;
  std::vector<DivisorEntry> divisors;
  u64 rank;
};

RankReport rank_formula(u64 p, u64 a, u64 q, u64 r, u64 n, BalanceEngine& engine);
RankReport rank_formula(u64 p, u64 a, u64 q, u64 r, u64 n, BalanceMode mode = BalanceMode::Auto);

struct RankConstancy {
  u64 C;
  bool ok_constant;
  bool ok_bound;
  std::vector<u64> ranks;  // n = 0..n_max
};
RankConstancy rank_constancy_check(u64 p, u64 a, u64 q, u64 r, u64 n_max, BalanceEngine& engine);
RankConstancy rank_constancy_check(u64 p, u64 a, u64 q, u64 r, u64 n_max);

}  // namespace kummerwit
