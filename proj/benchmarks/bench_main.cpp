// Microbenchmarks for the hot paths: tag parsing, retrieval, reward scoring,
// and the group objective. Inputs come from the synthetic task generator so
// numbers are comparable across machines.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "searchlab/bridge_agent.hpp"
#include "searchlab/grpo.hpp"
#include "searchlab/rewards.hpp"
#include "searchlab/retriever.hpp"
#include "searchlab/taskgen.hpp"
#include "searchlab/trajectory.hpp"

namespace {

using namespace searchlab;

BridgeTask make_task(int n_questions) {
  BridgeTaskSpec spec;
  spec.seed = 42;
  spec.n_questions = n_questions;
  spec.hops = 2;
  spec.distractor_count = 5;
  return generate_bridge_qa(spec);
}

std::string make_trajectory_text() {
  ParsedTrajectory t;
  t.question = "What is the capital of the birthplace of Zanvar?";
  for (int i = 0; i < 4; ++i) {
    Step s;
    s.think = "narrowing down the entity chain, attempt " + std::to_string(i);
    SearchAction a;
    a.raw_query = "capital of region number " + std::to_string(i);
    a.normalized_query = normalize_query(a.raw_query);
    s.action = a;
    s.observation =
        "(doc title) Some retrieved sentence mentioning places and capitals, "
        "padded with enough text to look like a real snippet. #" +
        std::to_string(i);
    t.steps.push_back(std::move(s));
  }
  Step ans;
  ans.action = AnswerAction{"Qellon"};
  t.steps.push_back(std::move(ans));
  return render_trajectory(t);
}

void bench_parse_trajectory(benchmark::State& state) {
  const std::string raw = make_trajectory_text();
  for (auto _ : state) {
    ParseResult res = parse_trajectory(raw, "bench question");
    benchmark::DoNotOptimize(res);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * raw.size()));
}
BENCHMARK(bench_parse_trajectory);

void bench_index_build(benchmark::State& state) {
  BridgeTask task = make_task(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RetrieverIndex idx = RetrieverIndex::build(task.corpus);
    benchmark::DoNotOptimize(idx);
  }
}
BENCHMARK(bench_index_build)->Arg(10)->Arg(40);

void bench_retrieve(benchmark::State& state) {
  BridgeTask task = make_task(static_cast<int>(state.range(0)));
  RetrieverIndex idx = RetrieverIndex::build(task.corpus);
  std::size_t q = 0;
  for (auto _ : state) {
    auto hits = idx.retrieve(task.items[q % task.items.size()].question, 3);
    benchmark::DoNotOptimize(hits);
    ++q;
  }
}
BENCHMARK(bench_retrieve)->Arg(10)->Arg(40);

void bench_reward_pipeline(benchmark::State& state) {
  const std::string raw = make_trajectory_text();
  AnswerSet gold;
  gold.candidates = {"Qellon"};
  for (auto _ : state) {
    ParseResult res = parse_trajectory(raw, "bench question");
    RewardBreakdown parts;
    parts.em = reward_em(res.trajectory.final_answer.value_or(""), gold);
    parts.recall = reward_recall(aggregate_observations(res.trajectory), gold);
    parts.penalty = 0.0;
    RewardConfig cfg;
    benchmark::DoNotOptimize(reward_composite(parts, cfg));
  }
}
BENCHMARK(bench_reward_pipeline);

void bench_grpo_objective(benchmark::State& state) {
  BridgeTask task = make_task(8);
  RetrieverIndex idx = RetrieverIndex::build(task.corpus);
  EnvContext ctx;
  ctx.index = &idx;
  GrpoConfig cfg;
  ToyPolicy policy(agent_bucket_count(ctx.env.max_turns), kAgentActionCount,
                   cfg.temperature);
  RolloutGroup group =
      sample_group(policy, ctx, task.items[0].question, cfg, /*seed=*/7);
  std::vector<double> rewards;
  for (std::size_t i = 0; i < group.rollouts.size(); ++i)
    rewards.push_back(i % 2 == 0 ? 1.0 : 0.0);
  group.advantages = compute_advantages(rewards, cfg.std_floor);
  for (auto _ : state) {
    ObjectiveResult res = grpo_objective(group, policy, policy, cfg);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(bench_grpo_objective);

}  // namespace

BENCHMARK_MAIN();
