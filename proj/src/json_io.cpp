#include "kummerwit/json_io.hpp"

#include <sstream>

#include "kummerwit/literal.hpp"

namespace kummerwit {

json record(const std::string& kind) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

json to_json(const PolySet& S) {
  json a = json::array();
  for (const Poly& f : S) a.push_back(to_string(f));
  return a;
}

json to_json(const RankReport& r) {
  json j = record("rank");
  j["p"] = r.p;
  j["a"] = r.a;
  j["q"] = r.q;
  j["r"] = r.r;
  j["n"] = r.n;
  j["rank"] = r.rank;
  json ds = json::array();
  for (const auto& d : r.divisors) {
    json e;
    e["e"] = d.e;
    e["excluded"] = d.excluded;
    if (!d.excluded) {
      e["balanced"] = d.balanced;
      e["index"] = d.index;
      e["route"] = d.route;
    }
    ds.push_back(e);
  }
  j["divisors"] = ds;
  return j;
}

json to_json(const RankConstancy& c) {
  json j = record("rank-constancy");
  j["C_a"] = c.C;
  j["ranks"] = c.ranks;
  j["ok_constant"] = c.ok_constant;
  j["ok_bound"] = c.ok_bound;
  return j;
}

json to_json(const PlaceState& st) {
  json j;
  j["place"] = to_string(st.base);
  j["e"] = st.e_total;
  j["f"] = st.f_total;
  j["places"] = st.places;
  json v = json::object(), res = json::object();
  for (const auto& [k, x] : st.vals) v[k] = x;
  for (const auto& [k, x] : st.residues) res[k] = to_string(x);
  j["v"] = v;
  j["residues"] = res;
  json h = json::array();
  for (const auto& s : st.history) {
    json e;
    e["label"] = s.label;
    e["case"] = to_string(s.kcase);
    e["e"] = s.e;
    e["f"] = s.f;
    h.push_back(e);
  }
  j["history"] = h;
  return j;
}

json to_json(const LemmaVerdict& v) {
  json j;
  json hyp = json::object(), con = json::object();
  for (const auto& [k, b] : v.hypotheses) hyp[k] = b;
  for (const auto& [k, b] : v.conclusions) con[k] = b;
  j["hypotheses"] = hyp;
  j["hypotheses_hold"] = v.hypotheses_hold;
  j["conclusions"] = con;
  j["conclusion_holds"] = v.conclusion_holds;
  if (v.terminal) j["terminal"] = to_json(*v.terminal);
  return j;
}

json to_json(const TowerPlace& t) {
  json j;
  j["place"] = to_string(t.above);
  j["e"] = t.e;
  j["f"] = t.f;
  return j;
}

json to_json(const ProbeResult& pr) {
  json j = record("stabilization");
  j["n_stable"] = pr.n_stable;
  json ls = json::array();
  for (const auto& l : pr.levels) {
    json e;
    e["n"] = l.n;
    e["N"] = l.N;
    e["num_deg"] = l.num_deg;
    e["den_deg"] = l.den_deg;
    e["points"] = l.points.size();
    json np = json::array();
    for (const auto& P : l.new_points) np.push_back(to_string(P));
    e["new_points"] = np;
    ls.push_back(e);
  }
  j["levels"] = ls;
  return j;
}

json to_json(const FamilyResult& fr) {
  json j = record("family-members");
  j["lambda"] = to_string(fr.lambda);
  j["N"] = fr.N;
  j["deg_bound"] = fr.deg_bound;
  j["exhaustive"] = fr.exhaustive;
  j["count"] = fr.members.size();
  json ms = json::array();
  for (const auto& m : fr.members) {
    json e;
    e["x"] = to_string(m.x);
    e["y"] = to_string(m.y);
    ms.push_back(e);
  }
  j["members"] = ms;
  return j;
}

json to_json(const GrowResult& g) {
  json j = record("family-grow");
  j["lambda"] = to_string(g.lambda);
  json mult = json::array(), sx = json::array();
  for (const auto& P : g.multiples) mult.push_back(to_string(P));
  for (const auto& x : g.scaled_x) sx.push_back(to_string(x));
  j["multiples"] = mult;
  j["scaled_x"] = sx;
  j["family"] = to_json(g.result);
  return j;
}

json to_json(const InjectionWitness& w) {
  json j = record("injection-witness");
  j["via_subset"] = w.via_subset;
  if (!w.via_subset) {
    j["g"] = to_string(w.g);
    j["m"] = to_string(w.m);
    j["c"] = to_string(w.c);
    j["d"] = to_string(w.d);
    j["u"] = to_string(w.u);
    j["g'"] = to_string(w.g2);
    j["m'"] = to_string(w.m2);
  }
  return j;
}

json to_json(const InjectionCheck& c) {
  json j;
  j["ok"] = c.ok;
  if (!c.ok) j["failure"] = c.failure;
  json f = json::array();
  for (const auto& [x, y] : c.f) f.push_back(json::array({to_string(x), to_string(y)}));
  j["f"] = f;
  return j;
}

json to_json(const GammaTimesWitness& w) {
  json j = record("gamma-times");
  j["alpha"] = to_string(w.alpha);
  j["beta"] = to_string(w.beta);
  j["product_set"] = to_json(w.product_set);
  j["size"] = w.product_set.size();
  return j;
}

json to_json(const AxiomReport& r) {
  json j = record("axioms");
  j["n"] = r.n;
  j["m"] = r.m;
  json is = json::array();
  for (const auto& a : r.instances) {
    json e;
    e["axiom"] = a.axiom;
    e["detail"] = a.detail;
    e["pass"] = a.pass;
    is.push_back(e);
  }
  j["instances"] = is;
  j["pass"] = r.all_pass();
  return j;
}

namespace {

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << "\t[]\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out << path << '\t' << j.get<std::string>() << '\n';
  } else {
    out << path << '\t' << j.dump() << '\n';
  }
}

}  // namespace

std::string to_tsv(const json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace kummerwit
