#include "kummerwit/kummer.hpp"

#include "kummerwit/error.hpp"
#include "kummerwit/factor.hpp"

namespace kummerwit {

std::string to_string(KummerCase c) {
  switch (c) {
    case KummerCase::TotallyRamified: return "TotallyRamified";
    case KummerCase::InertDegreeL: return "InertDegreeL";
    case KummerCase::Split: return "Split";
  }
  return "?";
}

std::string norm_group_description(KummerCase c) {
  switch (c) {
    case KummerCase::TotallyRamified: return "generated by b and l-th powers";
    case KummerCase::InertDegreeL: return "{x : v(x) = 0 mod l}";
    case KummerCase::Split: return "all of K_P^x";
  }
  return "?";
}

namespace {

bool lth_power_poly(const Poly& f, u64 ell) {
  Factorization fz = factor(f);
  for (const auto& [g, m] : fz.factors)
    if (m % static_cast<int>(ell)) return false;
  return f.ctx().is_lth_power(fz.unit, ell);
}

void check_ell(const Field& F, u64 ell) {
  if (!is_prime(ell) || ell == F->p()) throw Error(ErrorCode::BadEll, "l must be a prime different from p");
  if ((F->q() - 1) % ell) throw Error(ErrorCode::ZetaMissing, "l does not divide q - 1");
}

i64 mod_l(i64 v, u64 ell) { return mod_floor(v, static_cast<i64>(ell)); }

}  // namespace

bool is_global_lth_power(const RatFunc& b, u64 ell) {
  if (b.is_zero()) return true;
  return lth_power_poly(b.num(), ell) && lth_power_poly(b.den(), ell);
}

KummerCase kummer_case(const RatFunc& b, const Place& P, u64 ell) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "radicand is zero");
  check_ell(b.field(), ell);
  if (is_global_lth_power(b, ell)) throw Error(ErrorCode::LthPowerInput, "radicand is an l-th power in K");
  auto [v, res] = unit_residue(b, P);
  if (mod_l(v, ell) != 0) return KummerCase::TotallyRamified;
  return ResidueField(P).is_lth_power(res, ell) ? KummerCase::Split : KummerCase::InertDegreeL;
}

u64 PlaceState::Q() const { return ipow_checked(Q0, static_cast<unsigned>(f_total), u64{1} << 62); }

PlaceState make_state(const Place& P, const std::map<std::string, RatFunc>& tracked) {
  PlaceState st{P, P.residue_size(), 1, 1, 1, {}, {}, {}};
  for (const auto& [label, x] : tracked) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "tracked element '" + label + "' is zero");
    auto [v, res] = unit_residue(x, P);
    st.vals[label] = v;
    st.residues.emplace(label, res);
  }
  return st;
}

bool residue_is_lth_power(const PlaceState& st, const Poly& r, u64 ell) {
  // r lies in F_{Q0}; test r^((Q0^f - 1)/g) = 1 with the exponent reduced
  // mod Q0 - 1, so Q0^f never has to be formed.
  ResidueField RF(st.base);
  u64 Q0 = st.Q0;
  u64 g = gcd_u64(ell, (powmod(Q0 % ell, st.f_total, ell) + ell - 1) % ell);
  if (g == 0) g = ell;  // Q0^f = 1 mod l
  u64 modulus = g * (Q0 - 1);
  u64 R = (powmod(Q0 % modulus, st.f_total, modulus) + modulus - 1) % modulus;
  u64 E = (R / g) % (Q0 - 1);
  return RF.pow(r, E).is_one();
}

PlaceState descend(const PlaceState& st, const std::string& b_label, u64 ell) {
  auto vit = st.vals.find(b_label);
  if (vit == st.vals.end()) throw Error(ErrorCode::UntrackedLabel, "label '" + b_label + "' is not tracked");
  PlaceState out = st;
  i64 v = vit->second;
  const Poly& rb = st.residues.at(b_label);
  if (mod_l(v, ell) != 0) {
    // New uniformizer pi' with pi'^l = pi * u_b^alpha, alpha v(b) = 1 mod l.
    ResidueField RF(st.base);
    i64 alpha = static_cast<i64>(invmod(static_cast<u64>(mod_l(v, ell)), ell));
    Poly rb_inv = RF.inv(rb);
    for (auto& [label, val] : out.vals) {
      i64 shift = alpha * val;  // multiply residue by u_b^(-alpha v)
      Poly& r = out.residues.at(label);
      if (shift > 0)
        r = RF.mul(r, RF.pow(rb_inv, static_cast<u64>(shift)));
      else if (shift < 0)
        r = RF.mul(r, RF.pow(rb, static_cast<u64>(-shift)));
      val *= static_cast<i64>(ell);
    }
    out.e_total *= ell;
    out.history.push_back({b_label, KummerCase::TotallyRamified, ell, 1});
  } else if (residue_is_lth_power(st, rb, ell)) {
    out.places *= ell;
    out.history.push_back({b_label, KummerCase::Split, 1, 1});
  } else {
    out.f_total *= ell;
    out.history.push_back({b_label, KummerCase::InertDegreeL, 1, ell});
  }
  return out;
}

std::string to_string(Section3Lemma w) {
  switch (w) {
    case Section3Lemma::Ncong1: return "ncong1";
    case Section3Lemma::Congruentes1: return "congruentes1";
    case Section3Lemma::Ncong2: return "ncong2";
    case Section3Lemma::Congruentes2: return "congruentes2";
  }
  return "?";
}

Section3Lemma parse_lemma(const std::string& s) {
  if (s == "ncong1") return Section3Lemma::Ncong1;
  if (s == "congruentes1") return Section3Lemma::Congruentes1;
  if (s == "ncong2") return Section3Lemma::Ncong2;
  if (s == "congruentes2") return Section3Lemma::Congruentes2;
  throw Error(ErrorCode::InvalidArgument, "unknown lemma '" + s + "'");
}

namespace {

const RatFunc& need(const std::map<std::string, RatFunc>& in, const std::string& k) {
  auto it = in.find(k);
  if (it == in.end()) throw Error(ErrorCode::InvalidArgument, "missing input '" + k + "'");
  return it->second;
}

}  // namespace

LemmaVerdict verify_section3_lemma(Section3Lemma which, const std::map<std::string, RatFunc>& inputs, u64 ell,
                                   const Place& P) {
  const bool tower_L = which == Section3Lemma::Ncong1 || which == Section3Lemma::Congruentes1;
  // L: (x, b, c) with w = b x^l + b^l; H: (x, d, a) with w = d x^l + d^l.
  const std::string kb = tower_L ? "b" : "d";
  const std::string kc = tower_L ? "c" : "a";
  const RatFunc& x = need(inputs, "x");
  const RatFunc& b = need(inputs, kb);
  const RatFunc& c = need(inputs, kc);
  const Field& F = x.field();
  check_ell(F, ell);
  const RatFunc one = RatFunc::from_int(F, 1);
  const i64 L = static_cast<i64>(ell);

  LemmaVerdict out{{}, false, false, {}, std::nullopt};
  auto hyp = [&](const std::string& name, bool ok) { out.hypotheses.emplace_back(name, ok); };

  bool nonzero = !x.is_zero() && !b.is_zero() && !c.is_zero();
  hyp("x, " + kb + ", " + kc + " nonzero", nonzero);
  if (!nonzero) return out;
  RatFunc w = b * pow(x, L) + pow(b, L);
  RatFunc cc = c + inverse(c);
  hyp(kb + "x^l+" + kb + "^l != 0", !w.is_zero());
  hyp(kc + "+" + kc + "^-1 != 0", !cc.is_zero());
  if (w.is_zero() || cc.is_zero()) return out;

  // Radicands in adjunction order.
  RatFunc base_inv = tower_L ? inverse(x) : inverse(b);
  RatFunc r1 = one + base_inv;
  RatFunc r2 = one + inverse(w);
  RatFunc r3 = one + cc * base_inv;
  bool radicands_ok = !r1.is_zero() && !r2.is_zero() && !r3.is_zero();
  hyp("radicands nonzero", radicands_ok);
  if (!radicands_ok) return out;

  auto [vx, rx] = unit_residue(x, P);
  auto [vb, rb] = unit_residue(b, P);
  auto [vc, rc] = unit_residue(c, P);
  ResidueField RF(P);
  bool global_ok = true;
  for (const auto& h : out.hypotheses) global_ok = global_ok && h.second;

  switch (which) {
    case Section3Lemma::Ncong1:
      hyp("(i) v(c) = 0 and red(c) not an l-th power", vc == 0 && !RF.is_lth_power(rc, ell));
      hyp("(ii) v(x) < 0", vx < 0);
      hyp("(iii) v(b) != 0 mod l", mod_l(vb, ell) != 0);
      hyp("(iv) v(b x^l) < v(b^l)", vb + L * vx < L * vb);
      hyp("(v) v(b) < 0", vb < 0);
      break;
    case Section3Lemma::Ncong2:
      hyp("(i) v(d) < 0", vb < 0);
      hyp("(ii) v(d x^l) < v(d^l)", vb + L * vx < L * vb);
      hyp("(iii) v(a) = 0 and red(a) not an l-th power", vc == 0 && !RF.is_lth_power(rc, ell));
      hyp("(iv) v(d) != 0 mod l", mod_l(vb, ell) != 0);
      break;
    case Section3Lemma::Congruentes1:
      if (vx < 0) throw Error(ErrorCode::PoleViolation, "the place is a pole of x");
      break;
    case Section3Lemma::Congruentes2:
      if (vb < 0) throw Error(ErrorCode::PoleViolation, "the place is a pole of d");
      break;
  }
  out.hypotheses_hold = true;
  for (const auto& h : out.hypotheses) out.hypotheses_hold = out.hypotheses_hold && h.second;
  if (!global_ok) return out;

  std::map<std::string, RatFunc> tracked{{"x", x}, {kb, b}, {kc, c}, {"w", w}, {"r1", r1}, {"r2", r2}, {"r3", r3}};
  PlaceState st = make_state(P, tracked);
  for (const char* r : {"r1", "r2", "r3"}) st = descend(st, r, ell);

  auto concl = [&](const std::string& name, bool ok) { out.conclusions.emplace_back(name, ok); };
  if (which == Section3Lemma::Ncong1 || which == Section3Lemma::Ncong2) {
    concl("v_Q(w) != 0 mod l", mod_l(st.vals.at("w"), ell) != 0);
    concl("v_Q(" + kc + ") = 0 and red_Q(" + kc + ") not an l-th power",
          st.vals.at(kc) == 0 && !residue_is_lth_power(st, st.residues.at(kc), ell));
  } else {
    // x for the L tower, d for the H tower
    concl("v_Q(" + std::string(tower_L ? "x" : "d") + ") = 0 mod l", mod_l(st.vals.at(tower_L ? "x" : "d"), ell) == 0);
    concl("v_Q(w) = 0 mod l", mod_l(st.vals.at("w"), ell) == 0);
    concl("v_Q(" + kc + ") = 0 mod l", mod_l(st.vals.at(kc), ell) == 0);
  }
  out.conclusion_holds = true;
  for (const auto& cn : out.conclusions) out.conclusion_holds = out.conclusion_holds && cn.second;
  out.terminal = std::move(st);
  return out;
}

SLocal s_local_conditions(const RatFunc& c, const RatFunc& x, const RatFunc& d, u64 ell,
                          const std::vector<Place>& S) {
  if (S.empty()) throw Error(ErrorCode::InvalidArgument, "S must be nonempty");
  const Field& F = c.field();
  SLocal out{true, true};
  RatFunc cm1 = c - RatFunc::from_int(F, 1);
  RatFunc dxl = d * pow(x, static_cast<i64>(ell));
  RatFunc dl = pow(d, static_cast<i64>(ell));
  for (const Place& P : S) {
    if (!cm1.is_zero() && valuation(cm1, P) <= 0) out.theta = false;
    // v(0) = +infinity.
    if (dxl.is_zero()) {
      if (dl.is_zero()) out.b_margin = false;
    } else if (dl.is_zero() || valuation(dxl, P) <= valuation(dl, P)) {
      out.b_margin = false;
    }
  }
  return out;
}

}  // namespace kummerwit
