#include "searchlab/trainer.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "searchlab/behavior.hpp"

namespace searchlab {

namespace {

// Independent seed streams per concern; stage 2 gets its own root so its
// sampling never replays stage-1 randomness.
constexpr std::uint64_t kShuffleTag = 0x7348e1ULL;
constexpr std::uint64_t kGroupTag = 0x6a01bULL;
constexpr std::uint64_t kStage1Tag = 0x57a6e1ULL;
constexpr std::uint64_t kStage2Tag = 0x57a6e2ULL;

double component_value(const RewardBreakdown& b, const std::string& name) {
  if (name == "em") return b.em.value_or(0.0);
  if (name == "recall") return b.recall.value_or(0.0);
  if (name == "acc") return b.acc.value_or(0.0);
  if (name == "penalty") return b.penalty.value_or(0.0);
  return 0.0;
}

// Computes exactly the components the spec names — a stage never evaluates
// reward signals outside its own spec (auditable via the CSV rows).
RewardBreakdown score_rollout(const Rollout& roll, const AnswerSet& gold,
                              const RewardSpec& spec) {
  RewardBreakdown b;
  for (const auto& [name, weight] : spec.weights) {
    (void)weight;
    if (name == "em") {
      b.em = reward_em(roll.trajectory.final_answer.value_or(""), gold);
    } else if (name == "recall") {
      b.recall =
          reward_recall(aggregate_recalled(roll.trajectory, roll.docs_per_step), gold);
    } else if (name == "acc") {
      std::vector<Document> instances;
      for (const auto& docs : roll.docs_per_step)
        instances.insert(instances.end(), docs.begin(), docs.end());
      b.acc = reward_acc(instances, gold);
    } else if (name == "penalty") {
      ParseResult reparsed = parse_trajectory(render_trajectory(roll.trajectory),
                                              roll.trajectory.question);
      BehaviorFlags flags = detect_behaviors(reparsed.trajectory, reparsed.issues);
      b.penalty = reward_penalty(flags, RewardConfig{});
    }
  }
  RewardConfig rc;
  rc.mix_weights = spec.weights;
  reward_composite(b, rc);
  return b;
}

}  // namespace

void validate(const StageConfig& cfg) {
  if (cfg.eval_interval < 1)
    throw std::invalid_argument("StageConfig: eval_interval must be >= 1");
  if (cfg.max_steps < cfg.eval_interval)
    throw std::invalid_argument("StageConfig: max_steps must be >= eval_interval");
  if (cfg.reward_spec.weights.empty())
    throw std::invalid_argument("StageConfig: empty reward spec");
  for (const auto& [name, weight] : cfg.reward_spec.weights) {
    if (!std::isfinite(weight))
      throw std::invalid_argument("StageConfig: non-finite weight for " + name);
  }
}

void validate(const TransitionRule& rule) {
  if (!(rule.delta > 0.0))
    throw std::invalid_argument("TransitionRule: delta must be positive");
  if (rule.patience < 1)
    throw std::invalid_argument("TransitionRule: patience must be >= 1");
}

std::string curve_csv(const EvalCurve& curve) {
  std::string out = "step,em,recall\n";
  for (const EvalPoint& p : curve.points) {
    char row[80];
    std::snprintf(row, sizeof(row), "%d,%.6f,%.6f\n", p.step, p.em, p.recall);
    out += row;
  }
  return out;
}

const CheckpointEntry& CheckpointStore::at(int step) const {
  auto it = by_step.find(step);
  if (it == by_step.end())
    throw std::out_of_range("CheckpointStore: no checkpoint at step " +
                            std::to_string(step));
  return it->second;
}

StageResult run_stage(const ToyPolicy& policy0, const StageConfig& cfg,
                      const EnvContext& ctx, const std::vector<QAItem>& train_set,
                      const std::vector<QAItem>& dev_set, const GrpoConfig& grpo_cfg,
                      std::uint64_t seed, std::ostream* reward_audit) {
  validate(cfg);
  validate(grpo_cfg);
  if (train_set.empty()) throw std::invalid_argument("run_stage: empty train set");
  if (dev_set.empty()) throw std::invalid_argument("run_stage: empty dev set");

  if (reward_audit) {
    *reward_audit << "step,rollout";
    for (const auto& [name, weight] : cfg.reward_spec.weights) {
      (void)weight;
      *reward_audit << ',' << name;
    }
    *reward_audit << ",total\n";
  }

  ToyPolicy policy = policy0;
  const ToyPolicy& ref = policy0;  // KL anchor for the whole stage

  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::size_t pos = order.size();  // forces a shuffle before the first pick
  std::uint64_t epoch = 0;

  EvalCurve curve;
  CheckpointStore store;

  for (int step = 1; step <= cfg.max_steps; ++step) {
    if (pos == order.size()) {
      Rng shuffle_rng(derive_seed(derive_seed(seed, kShuffleTag), epoch++));
      rng_shuffle(order, shuffle_rng);
      pos = 0;
    }
    const QAItem& item = train_set[order[pos++]];
    const AnswerSet gold{item.answers};

    RolloutGroup group =
        sample_group(policy, ctx, item.question, grpo_cfg,
                     derive_seed(derive_seed(seed, kGroupTag),
                                 static_cast<std::uint64_t>(step)));

    std::vector<double> rewards;
    rewards.reserve(group.rollouts.size());
    for (std::size_t i = 0; i < group.rollouts.size(); ++i) {
      RewardBreakdown b = score_rollout(group.rollouts[i], gold, cfg.reward_spec);
      group.rollouts[i].reward = b.total;
      rewards.push_back(b.total);
      if (reward_audit) {
        char head[48];
        std::snprintf(head, sizeof(head), "%d,%zu", step, i);
        *reward_audit << head;
        for (const auto& [name, weight] : cfg.reward_spec.weights) {
          (void)weight;
          char cell[32];
          std::snprintf(cell, sizeof(cell), ",%.6f", component_value(b, name));
          *reward_audit << cell;
        }
        char tail[32];
        std::snprintf(tail, sizeof(tail), ",%.6f\n", b.total);
        *reward_audit << tail;
      }
    }

    group.advantages = compute_advantages(rewards, grpo_cfg.std_floor);
    ObjectiveResult obj = grpo_objective(group, policy, ref, grpo_cfg);
    policy = grpo_update(policy, obj.gradient, grpo_cfg);

    if (step % cfg.eval_interval == 0 || step == cfg.max_steps) {
      EvalResult ev = evaluate(policy, ctx, dev_set);
      curve.points.push_back(EvalPoint{step, ev.em_rate, ev.recall_rate});
      store.by_step.emplace(step, CheckpointEntry{policy, ev.em_rate, ev.recall_rate});
    }
  }
  return StageResult{std::move(policy), std::move(curve), std::move(store)};
}

int detect_transition(const EvalCurve& curve, const TransitionRule& rule) {
  validate(rule);
  if (curve.points.empty())
    throw std::invalid_argument("detect_transition: empty curve");
  double peak_em = -1.0;
  int peak_step = curve.points.front().step;
  int below = 0;
  for (const EvalPoint& p : curve.points) {
    if (p.em > peak_em) {  // strict: ties keep the earliest peak
      peak_em = p.em;
      peak_step = p.step;
      below = 0;
    } else if (p.em < peak_em - rule.delta) {
      if (++below >= rule.patience) return peak_step;
    } else {
      below = 0;  // dipped but within delta: not a collapse streak
    }
  }
  return peak_step;  // no confirmed collapse: global max, earliest on ties
}

DesaResult run_desa(const ToyPolicy& policy0, const StageConfig& stage1,
                    const StageConfig& stage2, const TransitionRule& rule,
                    const EnvContext& ctx, const std::vector<QAItem>& train_set,
                    const std::vector<QAItem>& dev_set, const GrpoConfig& grpo_cfg,
                    std::uint64_t seed, std::ostream* stage1_audit,
                    std::ostream* stage2_audit) {
  validate(rule);
  StageResult s1 = run_stage(policy0, stage1, ctx, train_set, dev_set, grpo_cfg,
                             derive_seed(seed, kStage1Tag), stage1_audit);
  int transition_step = detect_transition(s1.curve, rule);
  const CheckpointEntry& chosen = s1.checkpoints.at(transition_step);
  StageResult s2 = run_stage(chosen.policy, stage2, ctx, train_set, dev_set, grpo_cfg,
                             derive_seed(seed, kStage2Tag), stage2_audit);
  return DesaResult{std::move(s2.final_policy), std::move(s1.curve),
                    std::move(s2.curve),        transition_step,
                    std::move(s1.checkpoints),  std::move(s2.checkpoints)};
}

StageResult run_stage1_only(const ToyPolicy& policy0, const StageConfig& cfg,
                            const EnvContext& ctx,
                            const std::vector<QAItem>& train_set,
                            const std::vector<QAItem>& dev_set,
                            const GrpoConfig& grpo_cfg, std::uint64_t seed,
                            std::ostream* reward_audit) {
  return run_stage(policy0, cfg, ctx, train_set, dev_set, grpo_cfg,
                   derive_seed(seed, kStage1Tag), reward_audit);
}

StageResult run_baseline(BaselineKind kind, const ToyPolicy& policy0,
                         StageConfig cfg, const EnvContext& ctx,
                         const std::vector<QAItem>& train_set,
                         const std::vector<QAItem>& dev_set,
                         const GrpoConfig& grpo_cfg, std::uint64_t seed,
                         std::ostream* reward_audit) {
  cfg.reward_spec =
      reward_spec_from_name(kind == BaselineKind::EmOnly ? "em" : "composite");
  // Same stage-level seed stream as run_desa's stage 1: baselines pair with
  // DeSA runs question-for-question.
  return run_stage(policy0, cfg, ctx, train_set, dev_set, grpo_cfg,
                   derive_seed(seed, kStage1Tag), reward_audit);
}

}  // namespace searchlab
