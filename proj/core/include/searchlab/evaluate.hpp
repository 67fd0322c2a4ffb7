#pragma once

#include <filesystem>
#include <vector>

#include "searchlab/behavior.hpp"
#include "searchlab/grpo.hpp"
#include "searchlab/rewards.hpp"
#include "searchlab/taskgen.hpp"

namespace searchlab {

struct ItemResult {
  int em = 0;
  int recall = 0;
  BehaviorFlags flags;
  ParsedTrajectory trajectory;
};

struct EvalResult {
  std::vector<ItemResult> items;
  double em_rate = 0.0;      // micro average of per-item em
  double recall_rate = 0.0;  // micro average of per-item recall
  double deficient_rate = 0.0;
  CohortStats cohorts;
};

// One greedy rollout per item (argmax actions; random-answer realizations
// draw from a fixed per-item stream, so results are reproducible with no
// seed parameter). Throws std::invalid_argument on an empty dataset.
EvalResult evaluate(const ToyPolicy& policy, const EnvContext& ctx,
                    const std::vector<QAItem>& items);

// Writes summary.json, items.csv (idx,em,recall,category), cohorts.csv and
// recall_failures.csv into out_dir (created if missing). Re-emitting the same
// result is byte-identical. Throws DataError naming the path on I/O failure.
void emit_report(const EvalResult& result, const std::filesystem::path& out_dir);

}  // namespace searchlab
