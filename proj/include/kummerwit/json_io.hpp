#pragma once
// JSON records for the CLI. Every top-level record carries "schema".
#include <string>

#include "json.hpp"
#include "kummerwit/curve.hpp"
#include "kummerwit/family.hpp"
#include "kummerwit/kummer.hpp"
#include "kummerwit/place.hpp"
#include "kummerwit/rank.hpp"
#include "kummerwit/witness.hpp"

namespace kummerwit {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"schema": kSchemaVersion, "kind": kind}
json record(const std::string& kind);

json to_json(const RankReport& r);
json to_json(const RankConstancy& c);
json to_json(const PlaceState& st);
json to_json(const LemmaVerdict& v);
json to_json(const TowerPlace& t);
json to_json(const ProbeResult& pr);
json to_json(const FamilyResult& fr);
json to_json(const GrowResult& g);
json to_json(const InjectionWitness& w);
json to_json(const InjectionCheck& c);
json to_json(const GammaTimesWitness& w);
json to_json(const AxiomReport& r);
json to_json(const PolySet& S);

// One "path<TAB>value" line per leaf, in document order.
std::string to_tsv(const json& j);

}  // namespace kummerwit
