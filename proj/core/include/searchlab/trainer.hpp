#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "searchlab/evaluate.hpp"
#include "searchlab/grpo.hpp"
#include "searchlab/rewards.hpp"
#include "searchlab/taskgen.hpp"

namespace searchlab {

struct StageConfig {
  RewardSpec reward_spec;
  int max_steps = 400;
  int eval_interval = 50;
};

// Throws std::invalid_argument unless 1 <= eval_interval <= max_steps and
// every reward weight is finite.
void validate(const StageConfig& cfg);

struct EvalPoint {
  int step = 0;
  double em = 0.0;
  double recall = 0.0;
};

struct EvalCurve {
  std::vector<EvalPoint> points;  // steps strictly increasing
};

// "step,em,recall" header plus one 6-decimal row per point; byte-stable.
std::string curve_csv(const EvalCurve& curve);

struct TransitionRule {
  double delta = 0.05;  // absolute EM drop that counts as below-peak
  int patience = 2;     // consecutive below-peak evals confirming collapse
};

void validate(const TransitionRule& rule);

struct CheckpointEntry {
  ToyPolicy policy;
  double em = 0.0;      // greedy dev metrics at checkpoint time
  double recall = 0.0;
};

struct CheckpointStore {
  std::map<int, CheckpointEntry> by_step;

  // Exact lookup; throws std::out_of_range on an unknown step.
  const CheckpointEntry& at(int step) const;
};

struct StageResult {
  ToyPolicy final_policy;
  EvalCurve curve;
  CheckpointStore checkpoints;
};

// One GRPO training stage: per step, sample one group on the next shuffled
// train question, score each rollout with cfg.reward_spec (and only its
// components), take one ascent step. Greedy dev evaluation + checkpoint every
// eval_interval steps (plus at max_steps when it is not a multiple, so the
// final policy is always observable). The KL reference is policy0 for the
// whole stage. Deterministic under (seed, configs, data). reward_audit, when
// given, receives "step,rollout,<components>,total" CSV rows.
StageResult run_stage(const ToyPolicy& policy0, const StageConfig& cfg,
                      const EnvContext& ctx, const std::vector<QAItem>& train_set,
                      const std::vector<QAItem>& dev_set, const GrpoConfig& grpo_cfg,
                      std::uint64_t seed, std::ostream* reward_audit = nullptr);

// First point where EM < running_peak - delta for `patience` consecutive
// evals confirms a collapse; returns the running-peak step at confirmation.
// No collapse: the global-max-EM step, ties resolved to the earliest.
// Throws std::invalid_argument on an empty curve.
int detect_transition(const EvalCurve& curve, const TransitionRule& rule);

struct DesaResult {
  ToyPolicy final_policy;
  EvalCurve stage1_curve;
  EvalCurve stage2_curve;
  int transition_step = 0;
  CheckpointStore stage1_checkpoints;
  CheckpointStore stage2_checkpoints;
};

// Two-stage schedule: stage 1 trains with stage1.reward_spec, the transition
// checkpoint is selected from the stage-1 EM curve, and stage 2 (em reward
// spec as configured) restarts from that checkpoint with a fresh KL reference
// and seed stream.
DesaResult run_desa(const ToyPolicy& policy0, const StageConfig& stage1,
                    const StageConfig& stage2, const TransitionRule& rule,
                    const EnvContext& ctx, const std::vector<QAItem>& train_set,
                    const std::vector<QAItem>& dev_set, const GrpoConfig& grpo_cfg,
                    std::uint64_t seed, std::ostream* stage1_audit = nullptr,
                    std::ostream* stage2_audit = nullptr);

// A stage-1 ablation arm (recall / recall+penalty / acc) run alone, on the
// same seed stream as run_desa's first stage, so arms and DeSA runs pair up
// question-for-question.
StageResult run_stage1_only(const ToyPolicy& policy0, const StageConfig& cfg,
                            const EnvContext& ctx,
                            const std::vector<QAItem>& train_set,
                            const std::vector<QAItem>& dev_set,
                            const GrpoConfig& grpo_cfg, std::uint64_t seed,
                            std::ostream* reward_audit = nullptr);

enum class BaselineKind {
  EmOnly,     // outcome-only supervision from the initial policy
  Composite,  // single stage of 0.5*recall + 0.5*em
};

// Single-stage comparison arm: cfg's reward_spec is replaced by the kind's
// canonical spec; otherwise identical to run_stage.
StageResult run_baseline(BaselineKind kind, const ToyPolicy& policy0,
                         StageConfig cfg, const EnvContext& ctx,
                         const std::vector<QAItem>& train_set,
                         const std::vector<QAItem>& dev_set,
                         const GrpoConfig& grpo_cfg, std::uint64_t seed,
                         std::ostream* reward_audit = nullptr);

}  // namespace searchlab
