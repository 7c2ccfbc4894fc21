#include "kummerwit/pipeline.hpp"

#include <random>

#include "kummerwit/error.hpp"
#include "kummerwit/literal.hpp"

namespace kummerwit {

PipelineConfig quick_config(u64 p) {
  PipelineConfig c;
  c.p = p;
  return c;
}

PipelineConfig full_config(u64 p) {
  PipelineConfig c;
  c.p = p;
  c.N_target = 3;
  c.axiom_cap = 6;
  c.witness_trials = 50;
  return c;
}

namespace {

json stage(const std::string& name, const std::string& status) {
  json j;
  j["stage"] = name;
  j["status"] = status;
  return j;
}

}  // namespace

PipelineResult pipeline(const PipelineConfig& cfg) {
  if (cfg.p < 3 || !is_prime(cfg.p)) throw Error(ErrorCode::InvalidArgument, "pipeline: p must be an odd prime");
  json summary = record("pipeline");
  summary["p"] = cfg.p;
  summary["a"] = cfg.a;
  json stages = json::array();
  auto finish = [&](bool ok) {
    summary["stages"] = stages;
    summary["ok"] = ok;
    return PipelineResult{ok, summary};
  };

  // primes
  u64 r, q;
  {
    json st = stage("primes", "pass");
    r = cfg.r ? *cfg.r : find_r(cfg.p, 1).front();
    if (cfg.q) {
      q = *cfg.q;
      if (!valid_q(cfg.p, r, q)) {
        st["status"] = "fail";
        st["detail"] = "q violates the Legendre conditions";
        stages.push_back(st);
        return finish(false);
      }
    } else {
      q = find_q(cfg.p, r);
    }
    st["r"] = r;
    st["q"] = q;
    stages.push_back(st);
  }

  // rank
  {
    RankConstancy rc = rank_constancy_check(cfg.p, static_cast<u64>(cfg.a), q, r, cfg.n_max);
    bool ok = rc.ok_constant && rc.ok_bound;
    json st = stage("rank", ok ? "pass" : "fail");
    st["C_a"] = rc.C;
    st["ranks"] = rc.ranks;
    stages.push_back(st);
    if (!ok) return finish(false);
  }

  // points
  Field F = FieldCtx::make(cfg.p, cfg.a);
  Curve E = Curve::make(F, cfg.N);
  std::optional<ECPoint> P;
  {
    std::vector<ECPoint> pts = point_search(E, cfg.num_deg, cfg.den_deg, cfg.workers);
    json st = stage("points", "pass");
    st["N"] = cfg.N;
    st["num_deg"] = cfg.num_deg;
    st["den_deg"] = cfg.den_deg;
    st["found"] = pts.size();
    bool all_on = true;
    for (const auto& Q : pts) {
      if (!on_curve(Q, E)) all_on = false;
      if (!P && !is_torsion(Q, E)) P = Q;
    }
    if (P) st["non_torsion"] = to_string(*P);
    if (!all_on) {
      st["status"] = "fail";
      st["detail"] = "point off the curve";
      stages.push_back(st);
      return finish(false);
    }
    stages.push_back(st);
  }

  // family
  if (!P) {
    stages.push_back(stage("family", "skipped: no non-torsion point at bound"));
  } else {
    GrowResult g = family_grow(*P, E, cfg.N_target, cfg.workers);
    bool ok = g.result.members.size() >= cfg.N_target;
    for (const auto& m : g.result.members) {
      auto y = family_witness(g.lambda, E, m.x);
      if (!y || !(*y * *y == m.y * m.y)) ok = false;
    }
    json st = stage("family", ok ? "pass" : "fail");
    st["lambda"] = to_string(g.lambda);
    st["N_target"] = cfg.N_target;
    st["members"] = g.result.members.size();
    stages.push_back(st);
    if (!ok) return finish(false);
  }

  // witnesses
  {
    std::mt19937_64 rng(cfg.seed);
    int inj_ok = 0, times_ok = 0;
    for (int t = 0; t < cfg.witness_trials; ++t) {
      std::size_t nb = 1 + rng() % 4, na = rng() % (nb + 1);
      PolySet B = random_poly_set(F, rng, nb, 2), A = random_poly_set(F, rng, na, 2);
      if (verify_injection(injection_witness(A, B, F), A, B).ok) ++inj_ok;
      PolySet F1 = random_poly_set(F, rng, 1 + rng() % 3, 2), F2 = random_poly_set(F, rng, 1 + rng() % 3, 2);
      GammaTimesWitness w = gamma_times_witness(F1, F2, F);
      if (verify_gamma_times(w, F1, F2) && w.product_set.size() == F1.size() * F2.size()) ++times_ok;
    }
    bool axioms_ok = true;
    for (u64 n = 0; n <= cfg.axiom_cap; ++n)
      for (u64 m = 0; m <= cfg.axiom_cap; ++m)
        if (!axiom_instance_check(n, m, F).all_pass()) axioms_ok = false;
    bool ok = inj_ok == cfg.witness_trials && times_ok == cfg.witness_trials && axioms_ok;
    json st = stage("witnesses", ok ? "pass" : "fail");
    st["injection_verified"] = inj_ok;
    st["gamma_times_verified"] = times_ok;
    st["trials"] = cfg.witness_trials;
    st["axiom_cap"] = cfg.axiom_cap;
    st["axioms_pass"] = axioms_ok;
    stages.push_back(st);
    if (!ok) return finish(false);
  }
  return finish(true);
}

}  // namespace kummerwit
