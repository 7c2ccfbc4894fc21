#include "kummerwit/curve.hpp"

#include <omp.h>

#include <algorithm>
#include <set>

#include "kummerwit/error.hpp"
#include "kummerwit/literal.hpp"
#include "kummerwit/parallel.hpp"

namespace kummerwit {

Curve Curve::make(const Field& F, u64 N) {
  if (N == 0 || N % F->p() == 0) throw Error(ErrorCode::BadN, "N must be positive and prime to p");
  Poly sN = Poly::monomial(F, F->one(), static_cast<int>(N));
  return Curve(F, N, RatFunc(Poly::one(F) + sN), RatFunc(sN));
}

RatFunc Curve::rhs(const RatFunc& x) const { return x * (x * (x + a2_) + a4_); }

RatFunc j_invariant(const Curve& E) {
  // a1 = a3 = a6 = 0.
  const Field& F = E.field();
  auto k = [&](i64 v) { return RatFunc::from_int(F, v); };
  RatFunc b2 = k(4) * E.a2();
  RatFunc b4 = k(2) * E.a4();
  RatFunc b8 = -(E.a4() * E.a4());
  RatFunc c4 = b2 * b2 - k(24) * b4;
  RatFunc disc = -(b2 * b2 * b8) - k(8) * b4 * b4 * b4;
  return c4 * c4 * c4 / disc;
}

RatFunc j_invariant_closed_form_E1(const Field& F) {
  Poly s = Poly::s(F);
  Poly one = Poly::one(F);
  Poly num = Poly::from_int(F, 256) * pow(s * s - s + one, 3);
  Poly den = s * s * pow(s - one, 2);
  return RatFunc(num, den);
}

bool ECPoint::operator<(const ECPoint& o) const {
  if (inf != o.inf) return inf;
  if (inf) return false;
  if (!(x == o.x)) return x < o.x;
  return y < o.y;
}

std::string to_string(const ECPoint& P) {
  if (P.inf) return "inf";
  return "(" + to_string(P.x) + "; " + to_string(P.y) + ")";
}

ECPoint parse_point(const Field& F, std::string_view text) {
  std::string t(text);
  auto b = t.find_first_not_of(' ');
  auto e = t.find_last_not_of(' ');
  if (b == std::string::npos) throw Error(ErrorCode::ParseError, "empty point literal");
  t = t.substr(b, e - b + 1);
  if (t == "inf") return ECPoint::infinity();
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw Error(ErrorCode::ParseError, "point literal must be 'inf' or '(x; y)'");
  auto semi = t.find(';');
  if (semi == std::string::npos) throw Error(ErrorCode::ParseError, "point literal needs ';'");
  return ECPoint::affine(parse_ratfunc(F, t.substr(1, semi - 1)), parse_ratfunc(F, t.substr(semi + 1, t.size() - semi - 2)));
}

bool on_curve(const ECPoint& P, const Curve& E) { return P.inf || P.y * P.y == E.rhs(P.x); }

ECPoint ec_neg(const ECPoint& P) { return P.inf ? P : ECPoint::affine(P.x, -P.y); }

namespace {

ECPoint add_unchecked(const ECPoint& P, const ECPoint& Q, const Curve& E) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  const Field& F = E.field();
  RatFunc lam;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return ECPoint::infinity();  // includes 2-torsion doubling
    RatFunc three = RatFunc::from_int(F, 3), two = RatFunc::from_int(F, 2);
    lam = (three * P.x * P.x + two * E.a2() * P.x + E.a4()) / (two * P.y);
  } else {
    lam = (Q.y - P.y) / (Q.x - P.x);
  }
  RatFunc x3 = lam * lam - E.a2() - P.x - Q.x;
  RatFunc y3 = lam * (P.x - x3) - P.y;
  return ECPoint::affine(std::move(x3), std::move(y3));
}

}  // namespace

ECPoint ec_add(const ECPoint& P, const ECPoint& Q, const Curve& E) {
  if (!on_curve(P, E) || !on_curve(Q, E)) throw Error(ErrorCode::OffCurve, "point is not on the curve");
  return add_unchecked(P, Q, E);
}

ECPoint ec_mul(i64 k, const ECPoint& P, const Curve& E) {
  if (!on_curve(P, E)) throw Error(ErrorCode::OffCurve, "point is not on the curve");
  ECPoint base = k < 0 ? ec_neg(P) : P;
  u64 m = static_cast<u64>(k < 0 ? -k : k);
  ECPoint acc = ECPoint::infinity();
  while (m) {
    if (m & 1) acc = add_unchecked(acc, base, E);
    m >>= 1;
    if (m) base = add_unchecked(base, base, E);
  }
  return acc;
}

std::vector<ECPoint> two_torsion(const Curve& E) {
  const Field& F = E.field();
  RatFunc zero(F);
  return {ECPoint::infinity(), ECPoint::affine(zero, zero), ECPoint::affine(RatFunc::from_int(F, -1), zero),
          ECPoint::affine(-E.a4(), zero)};
}

std::vector<ECPoint> torsion_points(const Curve& E) {
  std::vector<ECPoint> out = two_torsion(E);
  if (E.N() % 2 == 0) {
    // x^2 = s^N makes 2P = (0, 0); y comes from the square root of the cubic.
    const Field& F = E.field();
    Poly h = Poly::monomial(F, F->one(), static_cast<int>(E.N() / 2));
    for (const Poly& x : {h, -h}) {
      RatFunc xr(x);
      auto y = ratfunc_sqrt(E.rhs(xr));
      if (!y) continue;
      out.push_back(ECPoint::affine(xr, *y));
      out.push_back(ECPoint::affine(xr, -*y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_torsion(const ECPoint& P, const Curve& E) {
  if (!on_curve(P, E)) throw Error(ErrorCode::OffCurve, "point is not on the curve");
  for (const ECPoint& T : torsion_points(E))
    if (T == P) return true;
  return false;
}

namespace {

struct SearchSpace {
  std::vector<Poly> ws;  // monic denominators
  u64 n_num;             // numerators: poly_at(0 .. n_num)
};

SearchSpace make_space(const Curve& E, int num_deg, int den_deg, u64 limit) {
  if (num_deg < 0 || den_deg < 0) throw Error(ErrorCode::InvalidArgument, "degree bounds must be >= 0");
  const Field& F = E.field();
  SearchSpace sp;
  u64 n_den = 0;
  for (int d = 0; d <= den_deg; ++d) n_den += count_monic(*F, d);
  sp.n_num = count_polys_upto(*F, num_deg);
  if (n_den > limit || sp.n_num > limit / n_den)
    throw Error(ErrorCode::SearchTooLarge, "point search space exceeds " + std::to_string(limit) + " candidates");
  for (int d = 0; d <= den_deg; ++d)
    for (u64 i = 0; i < count_monic(*F, d); ++i) sp.ws.push_back(monic_at(F, d, i));
  return sp;
}

void emit(std::vector<ECPoint>& out, const RatFunc& x, const RatFunc& y) {
  out.push_back(ECPoint::affine(x, y));
  if (!y.is_zero()) out.push_back(ECPoint::affine(x, -y));
}

}  // namespace

std::vector<ECPoint> point_search(const Curve& E, int num_deg, int den_deg, int workers, u64 limit) {
  const Field& F = E.field();
  SearchSpace sp = make_space(E, num_deg, den_deg, limit);
  const u64 q = F->q();
  // Square table on F_q and the evaluation points used by the sieve.
  const int n_eval = static_cast<int>(std::min<u64>(q, 64));
  std::vector<FF> pts(n_eval), ptsN(n_eval);
  for (int i = 0; i < n_eval; ++i) {
    pts[i] = F->from_index(static_cast<u64>(i));
    ptsN[i] = F->pow(pts[i], E.N());
  }
  Poly sN = Poly::monomial(F, F->one(), static_cast<int>(E.N()));
  const u64 total = sp.ws.size() * sp.n_num;
  std::vector<std::vector<ECPoint>> found(resolve_workers(workers));

#pragma omp parallel for schedule(dynamic, 256) num_threads(resolve_workers(workers))
  for (u64 idx = 0; idx < total; ++idx) {
    const Poly& w = sp.ws[idx / sp.n_num];
    Poly u = poly_at(F, idx % sp.n_num);
    if (!coprime(u, w)) continue;
    // f(u/w) * w^4 = u (u + w)(u + w s^N) w must be a square.
    bool pass = true;
    for (int i = 0; i < n_eval && pass; ++i) {
      FF uc = eval(u, pts[i]), wc = eval(w, pts[i]);
      FF v = F->mul(F->mul(uc, F->add(uc, wc)), F->mul(F->add(uc, F->mul(wc, ptsN[i])), wc));
      pass = F->is_square(v);
    }
    if (!pass) continue;
    Poly big = u * (u + w) * (u + w * sN) * w;
    auto g = poly_sqrt(big);
    if (!g) continue;
    RatFunc x(u, w);
    RatFunc y(*g, w * w);
    emit(found[omp_get_thread_num()], x, y);
  }
  std::vector<ECPoint> out;
  for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ECPoint> point_search_serial(const Curve& E, int num_deg, int den_deg, u64 limit) {
  const Field& F = E.field();
  SearchSpace sp = make_space(E, num_deg, den_deg, limit);
  std::vector<ECPoint> out;
  for (const Poly& w : sp.ws) {
    for (u64 i = 0; i < sp.n_num; ++i) {
      Poly u = poly_at(F, i);
      if (!coprime(u, w)) continue;
      RatFunc x(u, w);
      auto y = ratfunc_sqrt(E.rhs(x));
      if (y) emit(out, x, *y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ECPoint lift_point(const ECPoint& P, u64 r) {
  if (P.inf) return P;
  auto up = [r](const RatFunc& f) { return RatFunc(compose_power(f.num(), r), compose_power(f.den(), r)); };
  return ECPoint::affine(up(P.x), up(P.y));
}

ProbeResult stabilization_probe(u64 p, int a, u64 q, u64 r, u64 n_max, int num_deg, int den_deg, int workers,
                                u64 limit) {
  Field F = FieldCtx::make(p, a);
  ProbeResult res{0, {}};
  u64 rn = 1;
  for (u64 n = 0; n <= n_max; ++n) {
    if (n > 0) rn *= r;
    Curve E = Curve::make(F, q * rn);
    ProbeLevel lvl{n, q * rn, static_cast<int>(num_deg * rn), static_cast<int>(den_deg * rn), {}, {}};
    lvl.points = point_search(E, lvl.num_deg, lvl.den_deg, workers, limit);
    if (n == 0) {
      lvl.new_points = lvl.points;
    } else {
      std::set<ECPoint> image;
      for (const ECPoint& P : res.levels.back().points) image.insert(lift_point(P, r));
      for (const ECPoint& P : lvl.points)
        if (!image.count(P)) lvl.new_points.push_back(P);
      if (!lvl.new_points.empty()) res.n_stable = n;
    }
    res.levels.push_back(std::move(lvl));
  }
  return res;
}

}  // namespace kummerwit
