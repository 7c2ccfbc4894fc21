#pragma once
// find_r -> find_q -> rank constancy -> point search -> family growth ->
// witness suite, as one summary record.
#include <optional>

#include "kummerwit/json_io.hpp"

namespace kummerwit {

struct PipelineConfig {
  u64 p = 3;
  int a = 1;
  std::optional<u64> r, q;
  u64 n_max = 4;
  u64 N = 4;  // curve E_N for the point stages
  int num_deg = 1, den_deg = 0;
  u64 N_target = 2;
  u64 axiom_cap = 3;
  int witness_trials = 10;
  int workers = 0;
  u64 seed = 1;
};

PipelineConfig quick_config(u64 p);
PipelineConfig full_config(u64 p);

struct PipelineResult {
  bool ok;
  json summary;
};

// InvalidArgument for p not an odd prime. A failing stage stops the chain.
PipelineResult pipeline(const PipelineConfig& cfg);

}  // namespace kummerwit
