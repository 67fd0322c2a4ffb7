#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "searchlab/episode.hpp"
#include "searchlab/policy.hpp"
#include "searchlab/retriever.hpp"
#include "searchlab/trajectory.hpp"

namespace searchlab {

struct GrpoConfig {
  int group_size = 5;
  double clip_eps = 0.2;
  double kl_coef = 0.001;
  double learning_rate = 1e-3;
  double temperature = 1.0;
  double std_floor = 1e-8;
};

// Throws std::invalid_argument unless group_size >= 2, clip_eps in (0,1),
// kl_coef >= 0, learning_rate finite, temperature > 0, std_floor > 0.
void validate(const GrpoConfig& cfg);

// One sampled episode. The objective reads only buckets/actions/logp_old/
// reward: observation text lives in the trajectory for reward computation
// and auditing but carries no gradient.
struct Rollout {
  std::vector<int> buckets;      // state bucket at each decision
  std::vector<int> actions;      // action id chosen at each decision
  std::vector<double> logp_old;  // log-prob under the sampling policy
  double reward = 0.0;           // assigned after scoring
  ParsedTrajectory trajectory;
  std::vector<std::vector<Document>> docs_per_step;  // ranked docs per search
  bool budget_exhausted = false;

  std::size_t length() const { return actions.size(); }
};

struct RolloutGroup {
  std::string question;
  std::vector<Rollout> rollouts;
  std::vector<double> advantages;  // one per rollout, from compute_advantages
};

// Retrieval backend plus episode limits shared by every rollout.
struct EnvContext {
  const RetrieverIndex* index = nullptr;
  EnvConfig env;
};

// Plays one episode: bucket -> policy pick -> realized action -> env step,
// folding each observation back into the beliefs. greedy selects argmax
// actions instead of sampling (rng is still used by AnswerRandom).
Rollout run_episode(const ToyPolicy& policy, const EnvContext& ctx,
                    std::string_view question, Rng& rng, bool greedy = false);

// cfg.group_size independent episodes under the frozen sampling policy,
// log-probs recorded at sampling time. Deterministic under seed. Rewards and
// advantages are left for the caller.
RolloutGroup sample_group(const ToyPolicy& policy, const EnvContext& ctx,
                          std::string_view question, const GrpoConfig& cfg,
                          std::uint64_t seed);

// A_i = (r_i - mean) / max(population_std, std_floor); an all-equal group
// yields exact zeros. Throws std::invalid_argument on fewer than 2 rewards.
std::vector<double> compute_advantages(const std::vector<double>& rewards,
                                       double std_floor);

// ratio_t = exp(logp_new_t - logp_old_t) per action. Throws std::domain_error
// if any ratio fails to be positive and finite.
std::vector<double> importance_ratios(const ToyPolicy& policy_new,
                                      const Rollout& rollout);

struct ObjectiveResult {
  double value = 0.0;
  std::vector<double> gradient;  // same layout as ToyPolicy::parameters()
};

// Clipped importance-weighted group objective with a KL penalty:
//   value = (1/G) sum_i (1/|y_i|) sum_t min(w*A_i, clip(w,1-eps,1+eps)*A_i)
//           - kl_coef * KLhat
// KLhat uses the non-negative estimator r - ln r - 1 with r = pi_ref/pi_theta,
// averaged the same way. The gradient is analytic. Throws std::invalid_argument
// on an empty group or advantages not matching the rollouts.
ObjectiveResult grpo_objective(const RolloutGroup& group, const ToyPolicy& policy,
                               const ToyPolicy& ref_policy, const GrpoConfig& cfg);

// Central differences (f(p + h e_j) - f(p - h e_j)) / (2h) per parameter.
// Throws std::invalid_argument unless h > 0.
std::vector<double> finite_diff_grad(const std::function<double(const ToyPolicy&)>& f,
                                     const ToyPolicy& policy, double h);

// Plain gradient ascent, theta' = theta + learning_rate * gradient; pure.
// Throws std::invalid_argument on a shape mismatch.
ToyPolicy grpo_update(const ToyPolicy& policy, const std::vector<double>& gradient,
                      const GrpoConfig& cfg);

}  // namespace searchlab
