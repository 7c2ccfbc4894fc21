#include "kummerwit/rank.hpp"

#include "kummerwit/error.hpp"

namespace kummerwit {

std::vector<u64> find_r(u64 p, std::size_t count) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw Error(ErrorCode::CompositeP, "p must be an odd prime");
  std::vector<u64> out;
  for (u64 r = 3; out.size() < count; r += 4) {
    if (r == p || !is_prime(r)) continue;
    if (legendre(static_cast<i64>(p), r) == 1) out.push_back(r);
  }
  return out;
}

bool valid_q(u64 p, u64 r, u64 q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q) || q == p || q == r) return false;
  return legendre(static_cast<i64>(p), q) == -1 && legendre(static_cast<i64>(q), r) == -1;
}

u64 find_q(u64 p, u64 r, u64 ceiling) {
  for (u64 q = 3; q <= ceiling; q += 2)
    if (valid_q(p, r, q)) return q;
  throw Error(ErrorCode::SearchExhausted, "no q below " + std::to_string(ceiling));
}

std::optional<bool> BalanceEngine::cached(i64 x, u64 e) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = memo_.find({x, e});
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

BalanceEngine::Answer BalanceEngine::decide(i64 x, u64 e) {
  if (auto c = cached(x, e)) return {*c, "cache"};
  std::optional<bool> v;
  std::string route;
  if (mode_ != BalanceMode::Oracle) {
    // Going-up consults what is already settled; unknown moduli are decided
    // recursively through this engine so that the chain stays cached.
    BalanceLookup lookup = [this](i64 xx, u64 z) -> std::optional<bool> {
      if (auto c = cached(xx, z)) return c;
      if (mode_ == BalanceMode::Fast) return is_balanced_fast(xx, z, [this](i64 a, u64 b) { return cached(a, b); });
      return decide(xx, z).balanced;
    };
    v = is_balanced_fast(x, e, lookup);
    route = "fast";
  }
  if (!v) {
    if (mode_ == BalanceMode::Fast) throw Error(ErrorCode::InvalidArgument, "no shortcut applies and oracle disabled");
    v = is_balanced(x, e, workers_);
    route = "oracle";
    std::lock_guard<std::mutex> lk(mu_);
    ++oracle_calls_;
  }
  std::lock_guard<std::mutex> lk(mu_);
  memo_[{x, e}] = *v;
  return {*v, route};
}

std::size_t BalanceEngine::oracle_calls() const {
  std::lock_guard<std::mutex> lk(mu_);
  return oracle_calls_;
}

namespace {

void validate(u64 p, u64 a, u64 q, u64 r) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw Error(ErrorCode::CompositeP, "p must be an odd prime");
  if (a < 1) throw Error(ErrorCode::InvalidArgument, "a must be >= 1");
  if (q == r || q % 2 == 0 || r % 2 == 0 || !is_prime(q) || !is_prime(r))
    throw Error(ErrorCode::InvalidArgument, "q and r must be distinct odd primes");
  if (q == p || r == p) throw Error(ErrorCode::NotCoprime, "p divides q r^n");
}

}  // namespace

RankReport rank_formula(u64 p, u64 a, u64 q, u64 r, u64 n, BalanceEngine& engine) {
  validate(p, a, q, r);
  u64 d = q * ipow_checked(r, static_cast<unsigned>(n), u64{1} << 40);
  RankReport rep{p, a, q, r, n, {}, 0};
  for (u64 e : divisors(d)) {
    if (e <= 2) {
      rep.divisors.push_back({e, true, false, 0, "excluded"});
      continue;
    }
    auto ans = engine.decide(static_cast<i64>(p), e);
    u64 index = euler_phi(e) / mult_order(powmod(p, a, e), e);
    rep.divisors.push_back({e, false, ans.balanced, index, ans.route});
    if (ans.balanced) rep.rank += index;
  }
  return rep;
}

RankReport rank_formula(u64 p, u64 a, u64 q, u64 r, u64 n, BalanceMode mode) {
  BalanceEngine eng(mode);
  return rank_formula(p, a, q, r, n, eng);
}

RankConstancy rank_constancy_check(u64 p, u64 a, u64 q, u64 r, u64 n_max, BalanceEngine& engine) {
  RankConstancy out{0, true, false, {}};
  for (u64 n = 0; n <= n_max; ++n) out.ranks.push_back(rank_formula(p, a, q, r, n, engine).rank);
  out.C = out.ranks.front();
  for (u64 v : out.ranks) out.ok_constant = out.ok_constant && v == out.C;
  out.ok_bound = out.C <= q - 1;
  return out;
}

RankConstancy rank_constancy_check(u64 p, u64 a, u64 q, u64 r, u64 n_max) {
  BalanceEngine eng;
  return rank_constancy_check(p, a, q, r, n_max, eng);
}

}  // namespace kummerwit
