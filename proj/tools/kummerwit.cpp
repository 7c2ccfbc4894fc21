// kummerwit: command-line front end. Exit 0 ok, 1 a verifier said no,
// 2 usage or library error.
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kummerwit/error.hpp"
#include "kummerwit/factor.hpp"
#include "kummerwit/literal.hpp"
#include "kummerwit/pipeline.hpp"

using namespace kummerwit;

namespace {

struct Globals {
  std::string format = "json";
  bool json_flag = false;
  int workers = 0;
  u64 seed = kDefaultFactorSeed;
};

struct FieldOpts {
  u64 p = 3;
  int a = 1;
  Field make() const { return FieldCtx::make(p, a); }
};

void add_field(CLI::App* c, FieldOpts& f) {
  c->add_option("-p", f.p, "field characteristic")->required();
  c->add_option("-a", f.a, "extension degree")->capture_default_str();
}

// Split on commas outside brackets and parentheses.
std::vector<std::string> split_top(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

PolySet parse_set(const Field& F, const std::string& text) {
  PolySet S;
  for (const auto& item : split_top(text)) S.push_back(parse_poly(F, item));
  return normalize_set(std::move(S));
}

std::map<std::string, RatFunc> parse_assignments(const Field& F, const std::vector<std::string>& items) {
  std::map<std::string, RatFunc> out;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected label=value, got '" + it + "'");
    out[it.substr(0, eq)] = parse_ratfunc(F, it.substr(eq + 1));
  }
  return out;
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}
  void emit(const json& j) {
    if (g_.format == "tsv" && !g_.json_flag)
      std::cout << to_tsv(j) << '\n';
    else
      std::cout << j.dump() << '\n';
  }

 private:
  const Globals& g_;
};

BalanceMode parse_mode(const std::string& m) {
  if (m == "oracle") return BalanceMode::Oracle;
  if (m == "fast") return BalanceMode::Fast;
  return BalanceMode::Auto;
}

json witness_json(const std::optional<std::vector<int>>& w) {
  if (!w) return nullptr;
  return *w;
}

// Curve exponent default: the q that the rank search picks for p.
u64 default_N(u64 p) { return find_q(p, find_r(p, 1).front()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kummerwit: exact witnesses over F_q(s)"};
  app.require_subcommand(1);
  Globals G;
  app.add_option("--format", G.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--json", G.json_flag, "same as --format json");
  app.add_option("--workers", G.workers, "OpenMP workers (default: KUMMERWIT_WORKERS or all)");
  app.add_option("--seed", G.seed, "seed for randomized steps");
  Output out(G);
  std::function<int()> run;

  // search-primes
  FieldOpts sp;
  std::size_t count = 1;
  {
    auto* c = app.add_subcommand("search-primes", "primes r and q for the rank construction");
    c->add_option("-p", sp.p)->required();
    c->add_option("--count", count)->capture_default_str();
    c->callback([&] {
      run = [&] {
        for (u64 r : find_r(sp.p, count)) {
          json j = record("prime-pair");
          j["p"] = sp.p;
          j["r"] = r;
          j["q"] = find_q(sp.p, r);
          out.emit(j);
        }
        return 0;
      };
    });
  }

  // rank
  u64 rk_p = 3, rk_a = 1, rk_q = 0, rk_r = 0, rk_n = 0;
  std::optional<u64> rk_nmax;
  std::string rk_mode = "auto";
  {
    auto* c = app.add_subcommand("rank", "rank of E over F_{p^a}(s) at tower level n");
    c->add_option("-p", rk_p)->required();
    c->add_option("-a", rk_a)->capture_default_str();
    c->add_option("-q", rk_q)->required();
    c->add_option("-r", rk_r)->required();
    c->add_option("-n", rk_n)->capture_default_str();
    c->add_option("--n-max", rk_nmax, "report constancy over n = 0..n_max instead");
    c->add_option("--mode", rk_mode)->check(CLI::IsMember({"auto", "oracle", "fast"}));
    c->callback([&] {
      run = [&] {
        BalanceEngine engine(parse_mode(rk_mode), G.workers);
        if (rk_nmax) {
          RankConstancy rc = rank_constancy_check(rk_p, rk_a, rk_q, rk_r, *rk_nmax, engine);
          out.emit(to_json(rc));
          return rc.ok_constant && rc.ok_bound ? 0 : 1;
        }
        out.emit(to_json(rank_formula(rk_p, rk_a, rk_q, rk_r, rk_n, engine)));
        return 0;
      };
    });
  }

  // balanced
  i64 bx = 0;
  u64 bm = 0;
  std::string bmode = "both";
  {
    auto* c = app.add_subcommand("balanced", "is x balanced modulo m");
    c->add_option("x", bx)->required();
    c->add_option("m", bm)->required();
    c->add_option("--mode", bmode)->check(CLI::IsMember({"oracle", "fast", "both"}));
    c->callback([&] {
      run = [&] {
        json j = record("balanced");
        j["x"] = bx;
        j["m"] = bm;
        int rc = 0;
        std::optional<BalanceVerdict> oracle;
        std::optional<bool> fast;
        if (bmode != "fast") oracle = is_balanced_verdict(bx, bm, G.workers);
        if (bmode != "oracle") fast = is_balanced_fast(bx, bm);
        if (oracle) {
          j["balanced"] = oracle->balanced;
          j["witness_character"] = witness_json(oracle->witness);
        } else {
          j["balanced"] = fast ? json(*fast) : json(nullptr);
        }
        if (bmode != "oracle") j["fast"] = fast ? json(*fast) : json(nullptr);
        if (oracle && fast) {
          bool agree = *fast == oracle->balanced;
          j["agree"] = agree;
          if (!agree) rc = 1;
        }
        out.emit(j);
        return rc;
      };
    });
  }

  // kummer
  FieldOpts kf;
  std::string k_b, k_place = "s", k_lemma, k_c, k_x, k_d;
  u64 k_ell = 3;
  std::vector<std::string> k_track, k_steps, k_inputs, k_places;
  {
    auto* k = app.add_subcommand("kummer", "local behaviour of Kummer steps");
    k->require_subcommand(1);
    auto* cs = k->add_subcommand("case", "ramified / inert / split at one place");
    add_field(cs, kf);
    cs->add_option("--b", k_b)->required();
    cs->add_option("--place", k_place)->capture_default_str();
    cs->add_option("--ell", k_ell)->capture_default_str();
    cs->callback([&] {
      run = [&] {
        Field F = kf.make();
        RatFunc b = parse_ratfunc(F, k_b);
        Place P = parse_place(F, k_place);
        KummerCase kc = kummer_case(b, P, k_ell);
        json j = record("kummer-case");
        j["b"] = to_string(b);
        j["place"] = to_string(P);
        j["ell"] = k_ell;
        j["case"] = to_string(kc);
        j["norm_group"] = norm_group_description(kc);
        out.emit(j);
        return 0;
      };
    });

    auto* ds = k->add_subcommand("descend", "follow tracked valuations through a radical tower");
    add_field(ds, kf);
    ds->add_option("--place", k_place)->capture_default_str();
    ds->add_option("--ell", k_ell)->capture_default_str();
    ds->add_option("--track", k_track, "label=value")->required();
    ds->add_option("--step", k_steps, "label adjoined at each step (in order)");
    ds->callback([&] {
      run = [&] {
        Field F = kf.make();
        PlaceState st = make_state(parse_place(F, k_place), parse_assignments(F, k_track));
        for (const auto& label : k_steps) st = descend(st, label, k_ell);
        json j = record("kummer-descend");
        j["ell"] = k_ell;
        j["state"] = to_json(st);
        out.emit(j);
        return 0;
      };
    });

    auto* vl = k->add_subcommand("verify-lemma", "check one local lemma on given inputs");
    add_field(vl, kf);
    vl->add_option("--lemma", k_lemma)
        ->required()
        ->check(CLI::IsMember({"ncong1", "congruentes1", "ncong2", "congruentes2"}));
    vl->add_option("--place", k_place)->capture_default_str();
    vl->add_option("--ell", k_ell)->capture_default_str();
    vl->add_option("--input", k_inputs, "label=value")->required();
    vl->callback([&] {
      run = [&] {
        Field F = kf.make();
        LemmaVerdict v =
            verify_section3_lemma(parse_lemma(k_lemma), parse_assignments(F, k_inputs), k_ell, parse_place(F, k_place));
        json j = record("kummer-lemma");
        j["lemma"] = k_lemma;
        j["place"] = k_place;
        j["ell"] = k_ell;
        j["verdict"] = to_json(v);
        out.emit(j);
        return v.hypotheses_hold && !v.conclusion_holds ? 1 : 0;
      };
    });

    auto* th = k->add_subcommand("theta", "the S-local conditions on (c, x, d)");
    add_field(th, kf);
    th->add_option("--c", k_c)->required();
    th->add_option("--x", k_x)->required();
    th->add_option("--d", k_d)->required();
    th->add_option("--ell", k_ell)->capture_default_str();
    th->add_option("--places", k_places, "places of S")->delimiter(';')->required();
    th->callback([&] {
      run = [&] {
        Field F = kf.make();
        std::vector<Place> S;
        for (const auto& t : k_places) S.push_back(parse_place(F, t));
        SLocal sl = s_local_conditions(parse_ratfunc(F, k_c), parse_ratfunc(F, k_x), parse_ratfunc(F, k_d), k_ell, S);
        json j = record("kummer-theta");
        j["theta"] = sl.theta;
        j["b_margin"] = sl.b_margin;
        out.emit(j);
        return 0;
      };
    });
  }

  // curve
  FieldOpts cf;
  std::optional<u64> c_N;
  int c_num = 1, c_den = 0;
  std::string c_P, c_Q;
  i64 c_k = 2;
  u64 c_q = 0, c_r = 0, c_nmax = 2;
  auto curve = [&] { return Curve::make(cf.make(), c_N ? *c_N : default_N(cf.p)); };
  {
    auto* k = app.add_subcommand("curve", "E_N : y^2 = x(x+1)(x+s^N)");
    k->require_subcommand(1);
    auto with_N = [&](CLI::App* c) {
      add_field(c, cf);
      c->add_option("-N", c_N, "curve exponent (default: q from the rank search)");
    };
    auto* se = k->add_subcommand("search", "affine points with bounded height");
    with_N(se);
    se->add_option("--num-deg", c_num)->capture_default_str();
    se->add_option("--den-deg", c_den)->capture_default_str();
    se->callback([&] {
      run = [&] {
        Curve E = curve();
        json j = record("curve-search");
        j["N"] = E.N();
        json pts = json::array();
        for (const auto& P : point_search(E, c_num, c_den, G.workers)) {
          json e;
          e["point"] = to_string(P);
          e["torsion"] = is_torsion(P, E);
          pts.push_back(e);
        }
        j["points"] = pts;
        out.emit(j);
        return 0;
      };
    });
    auto* ad = k->add_subcommand("add", "P + Q");
    with_N(ad);
    ad->add_option("P", c_P)->required();
    ad->add_option("Q", c_Q)->required();
    ad->callback([&] {
      run = [&] {
        Curve E = curve();
        json j = record("curve-add");
        j["sum"] = to_string(ec_add(parse_point(E.field(), c_P), parse_point(E.field(), c_Q), E));
        out.emit(j);
        return 0;
      };
    });
    auto* mu = k->add_subcommand("mul", "k P");
    with_N(mu);
    mu->add_option("k", c_k)->required();
    mu->add_option("P", c_P)->required();
    mu->callback([&] {
      run = [&] {
        Curve E = curve();
        ECPoint P = parse_point(E.field(), c_P);
        if (!on_curve(P, E)) throw Error(ErrorCode::OffCurve, "point not on curve");
        json j = record("curve-mul");
        j["k"] = c_k;
        j["product"] = to_string(ec_mul(c_k, P, E));
        out.emit(j);
        return 0;
      };
    });
    auto* to = k->add_subcommand("torsion", "torsion subgroup");
    with_N(to);
    to->callback([&] {
      run = [&] {
        Curve E = curve();
        json j = record("curve-torsion");
        j["N"] = E.N();
        json pts = json::array();
        for (const auto& P : torsion_points(E)) pts.push_back(to_string(P));
        j["points"] = pts;
        j["two_torsion"] = two_torsion(E).size();
        out.emit(j);
        return 0;
      };
    });
    auto* jj = k->add_subcommand("j", "j-invariant");
    with_N(jj);
    jj->callback([&] {
      run = [&] {
        Curve E = curve();
        json j = record("curve-j");
        j["N"] = E.N();
        j["j"] = to_string(j_invariant(E));
        out.emit(j);
        return 0;
      };
    });
    auto* st = k->add_subcommand("stabilize", "new points along the tower s -> s^r");
    add_field(st, cf);
    st->add_option("-q", c_q)->required();
    st->add_option("-r", c_r)->required();
    st->add_option("--n-max", c_nmax)->capture_default_str();
    st->add_option("--num-deg", c_num)->capture_default_str();
    st->add_option("--den-deg", c_den)->capture_default_str();
    st->callback([&] {
      run = [&] {
        out.emit(to_json(stabilization_probe(cf.p, cf.a, c_q, c_r, c_nmax, c_num, c_den, G.workers)));
        return 0;
      };
    });
  }

  // family
  FieldOpts ff;
  std::optional<u64> f_N;
  std::string f_lambda, f_point, f_f;
  int f_bound = 2;
  u64 f_target = 2, f_n = 2;
  auto family_curve = [&] { return Curve::make(ff.make(), f_N ? *f_N : default_N(ff.p)); };
  {
    auto* k = app.add_subcommand("family", "the definable sets C_lambda");
    k->require_subcommand(1);
    auto* me = k->add_subcommand("members", "all x in C_lambda up to a degree bound");
    add_field(me, ff);
    me->add_option("-N", f_N);
    me->add_option("--lambda", f_lambda)->required();
    me->add_option("--deg-bound", f_bound)->capture_default_str();
    me->callback([&] {
      run = [&] {
        Curve E = family_curve();
        out.emit(to_json(family_members(parse_poly(E.field(), f_lambda), E, f_bound, G.workers)));
        return 0;
      };
    });
    auto* gr = k->add_subcommand("grow", "C_lambda with at least N_target members from multiples of P");
    add_field(gr, ff);
    gr->add_option("-N", f_N);
    gr->add_option("--point", f_point)->required();
    gr->add_option("--target", f_target)->capture_default_str();
    gr->callback([&] {
      run = [&] {
        Curve E = family_curve();
        GrowResult g = family_grow(parse_point(E.field(), f_point), E, f_target, G.workers);
        json j = to_json(g);
        bool ok = g.result.members.size() >= f_target;
        j["ok"] = ok;
        out.emit(j);
        return ok ? 0 : 1;
      };
    });
    auto* pp = k->add_subcommand("poly-powers", "fbar with f * fbar in F[s^n]");
    add_field(pp, ff);
    pp->add_option("--f", f_f)->required();
    pp->add_option("-n", f_n)->capture_default_str();
    pp->callback([&] {
      run = [&] {
        Field F = ff.make();
        Poly f = parse_poly(F, f_f);
        Poly fb = polynomial_in_powers(f, f_n);
        json j = record("poly-powers");
        j["f"] = to_string(f);
        j["n"] = f_n;
        j["fbar"] = to_string(fb);
        j["product"] = to_string(f * fb);
        out.emit(j);
        return 0;
      };
    });
  }

  // witness
  FieldOpts wf;
  std::string w_set, w_a = "s", w_A, w_B, w_F1, w_F2, w_F3;
  u64 w_n = 0, w_m = 0;
  {
    auto* k = app.add_subcommand("witness", "finite-set witnesses over F_q[s]");
    k->require_subcommand(1);
    auto* co = k->add_subcommand("coprime", "irreducible coprime to a set");
    add_field(co, wf);
    co->add_option("--set", w_set)->required();
    co->callback([&] {
      run = [&] {
        Field F = wf.make();
        json j = record("coprime");
        j["x"] = to_string(coprime_element(parse_set(F, w_set), F));
        out.emit(j);
        return 0;
      };
    });
    auto* sh = k->add_subcommand("shift", "comaximal shift g = a s^D c");
    add_field(sh, wf);
    sh->add_option("--set", w_set)->required();
    sh->add_option("--elem", w_a, "the element a")->capture_default_str();
    sh->callback([&] {
      run = [&] {
        Field F = wf.make();
        PolySet A = parse_set(F, w_set);
        Poly a = parse_poly(F, w_a);
        Poly g = comaximal_shift(A, a);
        ShiftCertificate cert = certify_shift(A, a, g);
        json j = record("shift");
        j["g"] = to_string(g);
        j["nzu"] = cert.nzu_all;
        j["cm_with_a"] = cert.cm_with_a;
        j["cm_pairwise"] = cert.cm_pairwise;
        out.emit(j);
        return cert.ok() ? 0 : 1;
      };
    });
    auto* in = k->add_subcommand("inject", "witness that |A| <= |B|");
    add_field(in, wf);
    in->add_option("--A", w_A)->required();
    in->add_option("--B", w_B)->required();
    in->callback([&] {
      run = [&] {
        Field F = wf.make();
        PolySet A = parse_set(F, w_A), B = parse_set(F, w_B);
        InjectionWitness w = injection_witness(A, B, F);
        InjectionCheck chk = verify_injection(w, A, B);
        json j = to_json(w);
        j["verify"] = to_json(chk);
        out.emit(j);
        return chk.ok ? 0 : 1;
      };
    });
    auto* gp = k->add_subcommand("gamma-plus", "|F1| + |F2| = |F3|");
    add_field(gp, wf);
    gp->add_option("--F1", w_F1)->required();
    gp->add_option("--F2", w_F2)->required();
    gp->add_option("--F3", w_F3)->required();
    gp->callback([&] {
      run = [&] {
        Field F = wf.make();
        GammaPlusResult r = gamma_plus_check(parse_set(F, w_F1), parse_set(F, w_F2), parse_set(F, w_F3), F);
        json j = record("gamma-plus");
        j["holds"] = r.holds;
        j["x"] = to_string(r.shift);
        out.emit(j);
        return r.holds ? 0 : 1;
      };
    });
    auto* gt = k->add_subcommand("gamma-times", "alpha, beta and the product set");
    add_field(gt, wf);
    gt->add_option("--F1", w_F1)->required();
    gt->add_option("--F2", w_F2)->required();
    gt->callback([&] {
      run = [&] {
        Field F = wf.make();
        PolySet F1 = parse_set(F, w_F1), F2 = parse_set(F, w_F2);
        GammaTimesWitness w = gamma_times_witness(F1, F2, F);
        bool ok = verify_gamma_times(w, F1, F2);
        json j = to_json(w);
        j["verified"] = ok;
        out.emit(j);
        return ok ? 0 : 1;
      };
    });
    auto* ax = k->add_subcommand("axioms", "instances of Omega1..Omega5");
    add_field(ax, wf);
    ax->add_option("-n", w_n)->required();
    ax->add_option("-m", w_m)->required();
    ax->callback([&] {
      run = [&] {
        AxiomReport r = axiom_instance_check(w_n, w_m, wf.make());
        out.emit(to_json(r));
        return r.all_pass() ? 0 : 1;
      };
    });
  }

  // tower
  FieldOpts tf;
  std::string t_place = "s+2";
  u64 t_r = 11, t_ell = 5;
  unsigned t_n = 1;
  {
    auto* k = app.add_subcommand("tower", "places in the tower t = s^(r^n)");
    k->require_subcommand(1);
    auto* fa = k->add_subcommand("factor", "places above P at level n");
    add_field(fa, tf);
    fa->add_option("--place", t_place)->capture_default_str();
    fa->add_option("-r", t_r)->capture_default_str();
    fa->add_option("-n", t_n)->capture_default_str();
    fa->callback([&] {
      run = [&] {
        Field F = tf.make();
        Place P = parse_place(F, t_place);
        json j = record("tower-factor");
        j["place"] = to_string(P);
        j["r"] = t_r;
        j["n"] = t_n;
        json ps = json::array();
        u64 sum = 0;
        for (const auto& tp : factor_place_in_tower(P, t_r, t_n, G.seed)) {
          ps.push_back(to_json(tp));
          sum += tp.e * tp.f;
        }
        j["above"] = ps;
        j["sum_ef"] = sum;
        out.emit(j);
        return 0;
      };
    });
    auto* bo = k->add_subcommand("bounded", "is P l-bounded up to level n_max");
    add_field(bo, tf);
    bo->add_option("--place", t_place)->capture_default_str();
    bo->add_option("-r", t_r)->capture_default_str();
    bo->add_option("--ell", t_ell)->capture_default_str();
    bo->add_option("--n-max", t_n)->capture_default_str();
    bo->callback([&] {
      run = [&] {
        Field F = tf.make();
        BoundednessResult b = boundedness_chain(parse_place(F, t_place), t_r, t_ell, t_n);
        json j = record("tower-bounded");
        j["bounded"] = b.bounded;
        json ch = json::array();
        for (const auto& P : b.chain) ch.push_back(to_string(P));
        j["chain"] = ch;
        j["step_degrees"] = b.step_degrees;
        out.emit(j);
        return b.bounded ? 0 : 1;
      };
    });
  }

  // verify
  std::string v_suite = "quick";
  u64 v_p = 3;
  {
    auto* c = app.add_subcommand("verify", "run the whole chain");
    c->add_option("--suite", v_suite)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
    c->add_option("-p", v_p)->capture_default_str();
    c->callback([&] {
      run = [&] {
        PipelineConfig cfg = v_suite == "full" ? full_config(v_p) : quick_config(v_p);
        cfg.workers = G.workers;
        cfg.seed = G.seed;
        PipelineResult r = pipeline(cfg);
        out.emit(r.summary);
        return r.ok ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run ? run() : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
