#include "kummerwit/family.hpp"

#include <omp.h>

#include <algorithm>

#include "kummerwit/error.hpp"
#include "kummerwit/factor.hpp"
#include "kummerwit/parallel.hpp"

namespace kummerwit {

namespace {

Poly cubic(const Poly& lambda, const Curve& E, const Poly& x) {
  Poly sN = Poly::monomial(E.field(), E.field()->one(), static_cast<int>(E.N()));
  return x * (x + lambda) * (x + lambda * sN);
}

FamilyResult zero_lambda(const Poly& lambda, const Curve& E, int deg_bound) {
  // y^2 * 0 = x^3 forces x = 0.
  return {lambda, E.N(), deg_bound, {{Poly(E.field()), Poly(E.field())}}, true};
}

}  // namespace

std::optional<Poly> family_witness(const Poly& lambda, const Curve& E, const Poly& x) {
  if (lambda.is_zero()) {
    if (x.is_zero()) return Poly(E.field());
    return std::nullopt;
  }
  auto y = ratfunc_sqrt(RatFunc(cubic(lambda, E, x), lambda));
  if (!y || !y->is_poly()) return std::nullopt;
  return y->num();
}

FamilyResult family_members(const Poly& lambda, const Curve& E, int deg_bound, int workers, u64 limit) {
  if (lambda.is_zero()) return zero_lambda(lambda, E, deg_bound);
  const Field& F = E.field();
  Poly kappa = Poly::one(F);
  for (const auto& [g, m] : factor(lambda).factors) kappa = kappa * pow(g, static_cast<u64>((m + 2) / 3));
  FamilyResult res{lambda, E.N(), deg_bound, {}, true};
  int free_deg = deg_bound - kappa.deg();
  if (deg_bound < 0) return res;
  if (free_deg < 0) {
    res.members.push_back({Poly(F), Poly(F)});
    return res;
  }
  u64 total = count_polys_upto(*F, free_deg);
  if (total > limit) throw Error(ErrorCode::SearchTooLarge, "family enumeration exceeds the candidate limit");

  const int n_eval = static_cast<int>(std::min<u64>(F->q(), 64));
  std::vector<FF> pts, lam_vals, sN_vals;
  for (int i = 0; i < n_eval; ++i) {
    FF c = F->from_index(static_cast<u64>(i));
    FF lc = eval(lambda, c);
    if (F->is_zero(lc)) continue;
    pts.push_back(c);
    lam_vals.push_back(lc);
    sN_vals.push_back(F->pow(c, E.N()));
  }
  std::vector<FF> kappa_vals;
  for (const FF& c : pts) kappa_vals.push_back(eval(kappa, c));

  std::vector<std::vector<FamilyMember>> found(resolve_workers(workers));
#pragma omp parallel for schedule(dynamic, 256) num_threads(resolve_workers(workers))
  for (u64 idx = 0; idx < total; ++idx) {
    Poly xp = poly_at(F, idx);
    bool pass = true;
    for (std::size_t i = 0; i < pts.size() && pass; ++i) {
      FF xc = F->mul(kappa_vals[i], eval(xp, pts[i]));
      FF v = F->mul(F->mul(xc, F->add(xc, lam_vals[i])), F->add(xc, F->mul(lam_vals[i], sN_vals[i])));
      pass = F->is_square(F->div(v, lam_vals[i]));
    }
    if (!pass) continue;
    Poly x = kappa * xp;
    if (auto y = family_witness(lambda, E, x)) found[omp_get_thread_num()].push_back({x, *y});
  }
  for (auto& v : found) res.members.insert(res.members.end(), v.begin(), v.end());
  std::sort(res.members.begin(), res.members.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  return res;
}

FamilyResult family_members_serial(const Poly& lambda, const Curve& E, int deg_bound, u64 limit) {
  if (lambda.is_zero()) return zero_lambda(lambda, E, deg_bound);
  const Field& F = E.field();
  FamilyResult res{lambda, E.N(), deg_bound, {}, true};
  if (deg_bound < 0) return res;
  u64 total = count_polys_upto(*F, deg_bound);
  if (total > limit) throw Error(ErrorCode::SearchTooLarge, "family enumeration exceeds the candidate limit");
  for (u64 idx = 0; idx < total; ++idx) {
    Poly x = poly_at(F, idx);
    if (auto y = family_witness(lambda, E, x)) res.members.push_back({x, *y});
  }
  return res;
}

GrowResult family_grow(const ECPoint& P, const Curve& E, u64 N_target, int workers, u64 limit) {
  if (N_target < 1) throw Error(ErrorCode::InvalidArgument, "N_target must be >= 1");
  if (is_torsion(P, E)) throw Error(ErrorCode::TorsionPoint, "family growth needs a point of infinite order");
  const Field& F = E.field();
  GrowResult g{Poly::one(F), {}, {}, {}};
  ECPoint Q = P;
  for (u64 i = 1; i <= N_target; ++i) {
    if (i > 1) Q = ec_add(Q, P, E);
    if (Q.inf) throw Error(ErrorCode::DistinctnessFailure, "a multiple of P is the identity");
    g.multiples.push_back(Q);
    g.lambda = lcm(lcm(g.lambda, Q.x.den()), Q.y.den());
  }
  int bound = 0;
  RatFunc lam(g.lambda);
  for (const ECPoint& M : g.multiples) {
    RatFunc sx = lam * M.x;
    if (!sx.is_poly()) throw Error(ErrorCode::DistinctnessFailure, "lambda does not clear a denominator");
    for (const Poly& prev : g.scaled_x)
      if (prev == sx.num()) throw Error(ErrorCode::DistinctnessFailure, "two multiples share an x-coordinate");
    g.scaled_x.push_back(sx.num());
    bound = std::max(bound, sx.num().deg());
  }
  g.result = family_members(g.lambda, E, bound, workers, limit);
  return g;
}

namespace {

// Minimal polynomial over F_q of beta in F_q[z]/(g), via its Frobenius orbit.
Poly minimal_polynomial(const Poly& beta, const Poly& g) {
  const Field& F = g.field();
  u64 q = F->q();
  std::vector<Poly> orbit{beta % g};
  for (;;) {
    Poly nxt = powmod(orbit.back(), q, g);
    if (nxt == orbit.front()) break;
    orbit.push_back(nxt);
  }
  // prod (y - c) with coefficients in F_q[z]/(g); they must be constants.
  std::vector<Poly> coeffs{Poly::one(F)};
  for (const Poly& c : orbit) {
    std::vector<Poly> next(coeffs.size() + 1, Poly(F));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - mulmod(coeffs[i], c, g);
    }
    coeffs = std::move(next);
  }
  std::vector<FF> out;
  for (const Poly& c : coeffs) {
    if (c.deg() > 0) throw Error(ErrorCode::InvalidArgument, "minimal polynomial has non-constant coefficients");
    out.push_back(c.coeff(0));
  }
  return Poly(F, std::move(out));
}

}  // namespace

Poly polynomial_in_powers(const Poly& f, u64 n) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "polynomial_in_powers of zero");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const Field& F = f.field();
  Poly prod = Poly::one(F);
  for (const auto& [g, m] : factor(f).factors) {
    Poly beta = powmod(Poly::s(F), n, g);
    Poly qg = compose_power(minimal_polynomial(beta, g), n);
    int mu = 0;
    for (Poly t = qg; divides(g, t); t = t / g) ++mu;
    int k = (m + mu - 1) / mu;
    prod = prod * pow(qg, static_cast<u64>(k));
  }
  auto [fbar, rem] = divmod(prod, monic(f));
  if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact division in polynomial_in_powers");
  return fbar;
}

}  // namespace kummerwit
