#include "searchlab/grpo.hpp"

#include <cmath>
#include <stdexcept>

#include "searchlab/bridge_agent.hpp"

namespace searchlab {

void validate(const GrpoConfig& cfg) {
  if (cfg.group_size < 2)
    throw std::invalid_argument("GrpoConfig: group_size must be >= 2");
  if (!(cfg.clip_eps > 0.0) || !(cfg.clip_eps < 1.0))
    throw std::invalid_argument("GrpoConfig: clip_eps must be in (0,1)");
  if (!(cfg.kl_coef >= 0.0))
    throw std::invalid_argument("GrpoConfig: kl_coef must be >= 0");
  if (!std::isfinite(cfg.learning_rate))
    throw std::invalid_argument("GrpoConfig: learning_rate must be finite");
  if (!(cfg.temperature > 0.0))
    throw std::invalid_argument("GrpoConfig: temperature must be positive");
  if (!(cfg.std_floor > 0.0))
    throw std::invalid_argument("GrpoConfig: std_floor must be positive");
}

Rollout run_episode(const ToyPolicy& policy, const EnvContext& ctx,
                    std::string_view question, Rng& rng, bool greedy) {
  if (ctx.index == nullptr)
    throw std::invalid_argument("run_episode: null retriever index");
  Rollout out;
  out.trajectory.question = std::string(question);
  BridgeBeliefs beliefs(question);
  EpisodeState state = env_reset(question, ctx.env);
  while (!state.terminated) {
    int bucket = beliefs.bucket(state.turns_used, ctx.env.max_turns);
    int action_id = greedy ? policy.greedy(bucket) : policy.sample(bucket, rng);
    Action action =
        realize_action(static_cast<AgentAction>(action_id), beliefs, rng);
    std::optional<std::string> obs = env_step(state, action, *ctx.index, ctx.env);

    out.buckets.push_back(bucket);
    out.actions.push_back(action_id);
    out.logp_old.push_back(policy.log_prob(bucket, action_id));

    Step step;
    step.action = action;
    if (std::holds_alternative<SearchAction>(action)) {
      step.observation = obs;
      beliefs.observe(obs.value_or(""));
      std::vector<Document> docs;
      for (const Document& d : state.history.back().docs) docs.push_back(d);
      out.docs_per_step.push_back(std::move(docs));
    } else {
      out.trajectory.final_answer = std::get<AnswerAction>(action).answer_text;
    }
    out.trajectory.steps.push_back(std::move(step));
  }
  out.budget_exhausted = state.budget_exhausted;
  return out;
}

RolloutGroup sample_group(const ToyPolicy& policy, const EnvContext& ctx,
                          std::string_view question, const GrpoConfig& cfg,
                          std::uint64_t seed) {
  validate(cfg);
  RolloutGroup group;
  group.question = std::string(question);
  group.rollouts.reserve(static_cast<std::size_t>(cfg.group_size));
  for (int i = 0; i < cfg.group_size; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    group.rollouts.push_back(run_episode(policy, ctx, question, rng));
  }
  return group;
}

std::vector<double> compute_advantages(const std::vector<double>& rewards,
                                       double std_floor) {
  if (rewards.size() < 2)
    throw std::invalid_argument("compute_advantages: need at least 2 rewards");
  const auto n = static_cast<double>(rewards.size());
  bool all_equal = true;
  double mean = 0.0;
  for (double r : rewards) {
    mean += r;
    all_equal = all_equal && r == rewards.front();
  }
  if (all_equal) return std::vector<double>(rewards.size(), 0.0);
  mean /= n;
  double var = 0.0;
  for (double r : rewards) var += (r - mean) * (r - mean);
  double denom = std::max(std::sqrt(var / n), std_floor);
  std::vector<double> adv(rewards.size());
  for (std::size_t i = 0; i < rewards.size(); ++i) adv[i] = (rewards[i] - mean) / denom;
  return adv;
}

std::vector<double> importance_ratios(const ToyPolicy& policy_new,
                                      const Rollout& rollout) {
  std::vector<double> ratios(rollout.length());
  for (std::size_t t = 0; t < rollout.length(); ++t) {
    double logp_new = policy_new.log_prob(rollout.buckets[t], rollout.actions[t]);
    double r = std::exp(logp_new - rollout.logp_old[t]);
    if (!std::isfinite(r) || !(r > 0.0))
      throw std::domain_error("importance_ratios: action impossible under policy");
    ratios[t] = r;
  }
  return ratios;
}

ObjectiveResult grpo_objective(const RolloutGroup& group, const ToyPolicy& policy,
                               const ToyPolicy& ref_policy, const GrpoConfig& cfg) {
  validate(cfg);
  if (group.rollouts.empty())
    throw std::invalid_argument("grpo_objective: empty group");
  if (group.advantages.size() != group.rollouts.size())
    throw std::invalid_argument("grpo_objective: advantages missing or misshapen");

  const int actions = policy.actions();
  const double tau = policy.temperature();
  const double inv_g = 1.0 / static_cast<double>(group.rollouts.size());
  ObjectiveResult out;
  out.gradient.assign(policy.parameters().size(), 0.0);

  for (std::size_t i = 0; i < group.rollouts.size(); ++i) {
    const Rollout& roll = group.rollouts[i];
    if (roll.length() == 0) continue;
    const double adv = group.advantages[i];
    const double scale = inv_g / static_cast<double>(roll.length());
    for (std::size_t t = 0; t < roll.length(); ++t) {
      const int b = roll.buckets[t];
      const int a = roll.actions[t];
      const double logp_new = policy.log_prob(b, a);
      const double w = std::exp(logp_new - roll.logp_old[t]);
      if (!std::isfinite(w) || !(w > 0.0))
        throw std::domain_error("grpo_objective: action impossible under policy");

      // Surrogate min(w*A, clip(w)*A): piecewise linear in w with slope A on
      // the unclipped side of the active boundary and 0 beyond it.
      double clipped = std::min(std::max(w, 1.0 - cfg.clip_eps), 1.0 + cfg.clip_eps);
      double surrogate = std::min(w * adv, clipped * adv);
      double ds_dw = 0.0;
      if (adv > 0.0 && w < 1.0 + cfg.clip_eps) ds_dw = adv;
      if (adv < 0.0 && w > 1.0 - cfg.clip_eps) ds_dw = adv;

      // KL estimator r - ln r - 1, r = pi_ref / pi_theta; its theta-gradient
      // is (1 - r) * d(log pi_theta)/d(theta).
      const double logp_ref = ref_policy.log_prob(b, a);
      const double r_kl = std::exp(logp_ref - logp_new);
      const double k3 = r_kl - (logp_ref - logp_new) - 1.0;

      out.value += scale * (surrogate - cfg.kl_coef * k3);

      // d(log pi(a|b))/d(theta[b,c]) = (1/tau) * (delta_{a,c} - pi(c|b)).
      const double coef = ds_dw * w - cfg.kl_coef * (1.0 - r_kl);
      if (coef != 0.0) {
        std::vector<double> p = policy.probs(b);
        const int base = b * actions;
        for (int c = 0; c < actions; ++c) {
          double dlogp = ((c == a ? 1.0 : 0.0) - p[c]) / tau;
          out.gradient[base + c] += scale * coef * dlogp;
        }
      }
    }
  }
  return out;
}

std::vector<double> finite_diff_grad(const std::function<double(const ToyPolicy&)>& f,
                                     const ToyPolicy& policy, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_diff_grad: h must be positive");
  ToyPolicy probe = policy;
  std::vector<double>& theta = probe.parameters();
  std::vector<double> grad(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double saved = theta[j];
    theta[j] = saved + h;
    double plus = f(probe);
    theta[j] = saved - h;
    double minus = f(probe);
    theta[j] = saved;
    grad[j] = (plus - minus) / (2.0 * h);
  }
  return grad;
}

ToyPolicy grpo_update(const ToyPolicy& policy, const std::vector<double>& gradient,
                      const GrpoConfig& cfg) {
  if (gradient.size() != policy.parameters().size())
    throw std::invalid_argument("grpo_update: gradient shape mismatch");
  ToyPolicy next = policy;
  std::vector<double>& theta = next.parameters();
  for (std::size_t j = 0; j < theta.size(); ++j)
    theta[j] += cfg.learning_rate * gradient[j];
  return next;
}

}  // namespace searchlab
