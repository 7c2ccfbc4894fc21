#include "kummerwit/witness.hpp"

#include <algorithm>

#include "kummerwit/error.hpp"
#include "kummerwit/factor.hpp"

namespace kummerwit {

PolySet normalize_set(PolySet A) {
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  return A;
}

bool set_contains(const PolySet& sorted, const Poly& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool nzu(const Poly& f) { return f.deg() >= 1; }

bool comaximal(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return false;
  ExtGcd e = poly_ext_gcd(f, g);
  if (!e.d.is_one()) return false;
  return (e.u * f + e.v * g).is_one();
}

Poly coprime_element(const PolySet& A, const Field& F) {
  for (int d = 1;; ++d) {
    IrreducibleStream st(F, d);
    while (auto pi = st.next()) {
      bool ok = true;
      for (const Poly& a : A)
        if (!a.is_zero() && !comaximal(*pi, a)) {
          ok = false;
          break;
        }
      if (ok) return *pi;
    }
  }
}

Poly comaximal_shift(const PolySet& A_in, const Poly& a) {
  if (a.is_zero() || a.is_constant()) throw Error(ErrorCode::UnitA, "comaximal_shift: a must be neither zero nor a unit");
  PolySet A = normalize_set(A_in);
  for (const Poly& x : A)
    if (x.is_zero()) throw Error(ErrorCode::ZeroInA, "comaximal_shift: 0 in A");
  const Field& F = a.field();
  Poly c = Poly::one(F);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j)
      if (i != j) {
        Poly d = A[i] - A[j];
        c = c * d * d;
      }
  Poly base = a * c;
  for (int D = 0;; ++D) {
    Poly g = base * Poly::monomial(F, F->one(), D);
    bool ok = true;
    for (const Poly& x : A)
      if ((Poly::one(F) + x * g).deg() < 1) ok = false;
    if (ok) return g;
  }
}

ShiftCertificate certify_shift(const PolySet& A_in, const Poly& a, const Poly& g) {
  PolySet A = normalize_set(A_in);
  ShiftCertificate cert;
  std::vector<Poly> t;
  for (const Poly& x : A) t.push_back(Poly::one(g.field()) + x * g);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!nzu(t[i])) cert.nzu_all = false;
    if (!comaximal(a, t[i])) cert.cm_with_a = false;
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!comaximal(t[i], t[j])) cert.cm_pairwise = false;
  }
  return cert;
}

namespace {

bool is_subset(const PolySet& A, const PolySet& B) {
  for (const Poly& x : A)
    if (!set_contains(B, x)) return false;
  return true;
}

Poly first_outside(const PolySet& S, const Field& F) {
  for (u64 i = 0;; ++i) {
    Poly x = poly_at(F, i);
    if (!set_contains(S, x)) return x;
  }
}

}  // namespace

InjectionWitness injection_witness(const PolySet& A_in, const PolySet& B_in, const Field& F, bool allow_subset) {
  PolySet A = normalize_set(A_in), B = normalize_set(B_in);
  InjectionWitness w;
  if (allow_subset && is_subset(A, B)) {
    w.via_subset = true;
    return w;
  }
  if (A.size() > B.size()) throw Error(ErrorCode::SizeMismatch, "injection_witness: |A| > |B|");
  const Poly one = Poly::one(F);
  w.c = first_outside(A, F);
  w.d = first_outside(B, F);
  // u before g': g' is forced comaximal with u.
  w.u = one;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j) w.u = w.u * (A[i] - A[j]);
  if (w.u.deg() < 1) w.u = w.u * Poly::s(F);

  PolySet B0(B.begin(), B.begin() + static_cast<std::ptrdiff_t>(A.size()));
  PolySet shiftedA, shiftedB;
  for (const Poly& x : A) shiftedA.push_back(x - w.c);
  for (const Poly& y : B0) shiftedB.push_back(y - w.d);
  w.g = comaximal_shift(shiftedA, Poly::s(F));
  w.g2 = comaximal_shift(shiftedB, w.u);

  std::vector<std::pair<Poly, Poly>> cm, cm2;
  for (std::size_t i = 0; i < A.size(); ++i) {
    cm.emplace_back(B0[i], one + w.g * (A[i] - w.c));
    cm2.emplace_back(A[i], one + w.g2 * (B0[i] - w.d));
  }
  w.m = cm.empty() ? Poly(F) : crt(cm);
  w.m2 = cm2.empty() ? Poly(F) : crt(cm2);
  return w;
}

InjectionCheck verify_injection(const InjectionWitness& w, const PolySet& A_in, const PolySet& B_in) {
  PolySet A = normalize_set(A_in), B = normalize_set(B_in);
  InjectionCheck r;
  auto fail = [&](std::string why) {
    r.ok = false;
    r.failure = std::move(why);
    r.f.clear();
    return r;
  };
  if (w.via_subset) {
    if (!is_subset(A, B)) return fail("A is not a subset of B");
    for (const Poly& x : A) r.f.emplace_back(x, x);
    r.ok = true;
    return r;
  }
  if (w.u.is_zero()) return fail("u = 0");
  if (set_contains(A, w.c)) return fail("c in A");
  if (set_contains(B, w.d)) return fail("d in B");
  Poly one = Poly::one(w.u.field());
  std::vector<Poly> t;
  for (const Poly& x : A) {
    t.push_back(one + w.g * (x - w.c));
    if (!nzu(t.back())) return fail("1+g(x-c) is zero or a unit");
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!comaximal(t[i], t[j])) return fail("1+g(x-c) not pairwise comaximal");
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j)
      if (i != j && !divides(A[i] - A[j], w.u)) return fail("difference does not divide u");
  for (std::size_t i = 0; i < A.size(); ++i) {
    std::optional<Poly> hit;
    for (const Poly& y : B) {
      if (!divides(t[i], w.m - y)) continue;
      Poly t2 = one + w.g2 * (y - w.d);
      if (!nzu(t2) || !divides(t2, w.m2 - A[i]) || divides(t2, w.u)) continue;
      hit = y;
      break;
    }
    if (!hit) return fail("no image for " + std::to_string(i) + "-th element of A");
    r.f.emplace_back(A[i], *hit);
  }
  PolySet image;
  for (const auto& pr : r.f) image.push_back(pr.second);
  if (normalize_set(image).size() != r.f.size()) return fail("f is not injective");
  r.ok = true;
  return r;
}

GammaPlusResult gamma_plus_check(const PolySet& F1_in, const PolySet& F2_in, const PolySet& F3_in,
                                 const Field& F) {
  PolySet F1 = normalize_set(F1_in), F2 = normalize_set(F2_in), F3 = normalize_set(F3_in);
  GammaPlusResult r;
  r.holds = F1.size() + F2.size() == F3.size();
  for (int k = 1;; ++k) {
    Poly x = Poly::monomial(F, F->one(), k);
    bool disjoint = true;
    for (const Poly& y : F2)
      if (set_contains(F1, y + x)) {
        disjoint = false;
        break;
      }
    if (disjoint) {
      r.shift = x;
      r.shift_exponent = k;
      return r;
    }
  }
}

namespace {

PolySet differences(const PolySet& S) {
  PolySet out;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) out.push_back(S[i] - S[j]);
  return out;
}

PolySet product_set(const Poly& alpha, const Poly& beta, const PolySet& F1, const PolySet& F2) {
  PolySet out;
  for (const Poly& x : F1)
    for (const Poly& y : F2) out.push_back(beta * y + alpha * x);
  return normalize_set(std::move(out));
}

}  // namespace

GammaTimesWitness gamma_times_witness(const PolySet& F1_in, const PolySet& F2_in, const Field& F) {
  PolySet F1 = normalize_set(F1_in), F2 = normalize_set(F2_in);
  PolySet diffs = differences(F1);
  for (Poly& d : differences(F2)) diffs.push_back(std::move(d));
  GammaTimesWitness w;
  w.alpha = coprime_element(diffs, F);
  diffs.push_back(w.alpha);
  w.beta = coprime_element(diffs, F);
  w.product_set = product_set(w.alpha, w.beta, F1, F2);
  if (w.product_set.size() != F1.size() * F2.size())
    throw Error(ErrorCode::DistinctnessFailure, "gamma_times_witness: product set collapsed");
  return w;
}

bool verify_gamma_times(const GammaTimesWitness& w, const PolySet& F1_in, const PolySet& F2_in) {
  PolySet F1 = normalize_set(F1_in), F2 = normalize_set(F2_in);
  if (!nzu(w.alpha) || !nzu(w.beta) || !comaximal(w.alpha, w.beta)) return false;
  for (const PolySet* S : {&F1, &F2})
    for (const Poly& d : differences(*S))
      if (!comaximal(w.alpha, d) || !comaximal(w.beta, d)) return false;
  PolySet expect;
  for (const Poly& x : F1)
    for (const Poly& y : F2) expect.push_back(w.beta * y + w.alpha * x);
  std::sort(expect.begin(), expect.end());
  if (std::adjacent_find(expect.begin(), expect.end()) != expect.end()) return false;
  return expect == w.product_set;
}

PolySet delta_set(const Field& F, u64 k) {
  PolySet out;
  for (u64 i = 0; i < k; ++i) out.push_back(poly_at(F, i));
  return out;
}

PolySet random_poly_set(const Field& F, std::mt19937_64& rng, std::size_t size, int max_deg) {
  u64 total = count_polys_upto(*F, max_deg);
  if (size > total) throw Error(ErrorCode::InvalidArgument, "random_poly_set: not enough polynomials");
  std::uniform_int_distribution<u64> pick(0, total - 1);
  PolySet out;
  while (out.size() < size) {
    Poly f = poly_at(F, pick(rng));
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  return normalize_set(std::move(out));
}

bool AxiomReport::all_pass() const {
  for (const auto& a : instances)
    if (!a.pass) return false;
  return true;
}

namespace {

// X <= Y read through Psi on finite sets.
bool psi_le(const PolySet& X, const PolySet& Y, const Field& F) {
  try {
    return verify_injection(injection_witness(X, Y, F), X, Y).ok;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeMismatch) return false;
    throw;
  }
}

PolySet monomial_set(const Field& F, u64 k) {
  PolySet out;
  for (u64 i = 1; i <= k; ++i) out.push_back(Poly::monomial(F, F->one(), static_cast<int>(i)));
  return out;
}

std::string num(u64 v) { return std::to_string(v); }

}  // namespace

AxiomReport axiom_instance_check(u64 n, u64 m, const Field& F) {
  AxiomReport rep;
  rep.n = n;
  rep.m = m;
  PolySet Dn = delta_set(F, n), Dm = delta_set(F, m);

  GammaPlusResult gp = gamma_plus_check(Dn, Dm, delta_set(F, n + m), F);
  rep.instances.push_back({"Omega1", num(n) + "+" + num(m) + "=" + num(n + m), gp.holds});

  bool o2;
  if (n == 0 || m == 0) {
    o2 = true;  // empty product set is Delta_0
  } else {
    GammaTimesWitness gt = gamma_times_witness(Dn, Dm, F);
    o2 = verify_gamma_times(gt, Dn, Dm) && gt.product_set.size() == delta_set(F, n * m).size();
  }
  rep.instances.push_back({"Omega2", num(n) + "*" + num(m) + "=" + num(n * m), o2});

  if (n == m) {
    rep.instances.push_back({"Omega3", "vacuous (n = m)", true});
  } else {
    bool equip = psi_le(Dn, Dm, F) && psi_le(Dm, Dn, F);
    rep.instances.push_back({"Omega3", "Delta_" + num(n) + " != Delta_" + num(m), !equip});
  }

  u64 kmax = std::max(n, m) + 2;
  for (u64 target : {n, m}) {
    PolySet Dt = delta_set(F, target);
    bool o4 = true, o5 = true;
    for (u64 k = 0; k <= kmax; ++k) {
      PolySet X = monomial_set(F, k);
      bool le = psi_le(X, Dt, F);
      if (le && k > target) o4 = false;
      if (!le && !psi_le(Dt, X, F)) o5 = false;
    }
    rep.instances.push_back({"Omega4", "x <= Delta_" + num(target) + " => x in {Delta_0..Delta_" + num(target) + "}", o4});
    rep.instances.push_back({"Omega5", "x <= Delta_" + num(target) + " or Delta_" + num(target) + " <= x", o5});
    if (n == m) break;
  }
  return rep;
}

}  // namespace kummerwit
