#include <csignal>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "searchlab/bridge_agent.hpp"
#include "searchlab/dataset.hpp"
#include "searchlab/errors.hpp"
#include "searchlab/evaluate.hpp"
#include "searchlab/grpo.hpp"
#include "searchlab/policy.hpp"
#include "searchlab/retriever.hpp"
#include "searchlab/scoring.hpp"
#include "searchlab/service.hpp"
#include "searchlab/taskgen.hpp"
#include "searchlab/trainer.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

using namespace searchlab;

// ---------------------------------------------------------------- run config

struct RunConfig {
  std::uint64_t seed = 0;
  std::string mode = "desa";
  EnvConfig env;
  GrpoConfig grpo;
  std::string stage1_reward = "recall";
  int stage1_steps = 400;
  int stage1_eval_interval = 50;
  std::string stage2_reward = "em";
  int stage2_steps = 400;
  int stage2_eval_interval = 50;
  TransitionRule transition;
};

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& scope) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw DataError("config: unknown key " + scope + key);
  }
}

int get_int(const json& j, const char* key, int fallback, const std::string& scope) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer())
    throw DataError("config: " + scope + key + " must be an integer");
  return it->get<int>();
}

double get_double(const json& j, const char* key, double fallback,
                  const std::string& scope) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number())
    throw DataError("config: " + scope + key + " must be a number");
  return it->get<double>();
}

std::string get_str(const json& j, const char* key, std::string fallback,
                    const std::string& scope) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string())
    throw DataError("config: " + scope + key + " must be a string");
  return it->get<std::string>();
}

void apply_config_file(RunConfig& rc, const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open config: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  json j = json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw DataError("config: malformed JSON in " + path.string());
  if (!j.is_object()) throw DataError("config: root must be an object");
  check_keys(j, {"seed", "mode", "env", "grpo", "stage1", "stage2", "transition"}, "");

  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned())
      throw DataError("config: seed must be a non-negative integer");
    rc.seed = it->get<std::uint64_t>();
  }
  rc.mode = get_str(j, "mode", rc.mode, "");

  if (auto it = j.find("env"); it != j.end()) {
    check_keys(*it, {"top_k", "max_turns", "obs_char_cap"}, "env.");
    rc.env.top_k = get_int(*it, "top_k", rc.env.top_k, "env.");
    rc.env.max_turns = get_int(*it, "max_turns", rc.env.max_turns, "env.");
    rc.env.obs_char_cap = static_cast<std::size_t>(get_int(
        *it, "obs_char_cap", static_cast<int>(rc.env.obs_char_cap), "env."));
  }
  if (auto it = j.find("grpo"); it != j.end()) {
    check_keys(*it,
               {"group_size", "clip_eps", "kl_coef", "learning_rate", "temperature",
                "std_floor"},
               "grpo.");
    rc.grpo.group_size = get_int(*it, "group_size", rc.grpo.group_size, "grpo.");
    rc.grpo.clip_eps = get_double(*it, "clip_eps", rc.grpo.clip_eps, "grpo.");
    rc.grpo.kl_coef = get_double(*it, "kl_coef", rc.grpo.kl_coef, "grpo.");
    rc.grpo.learning_rate =
        get_double(*it, "learning_rate", rc.grpo.learning_rate, "grpo.");
    rc.grpo.temperature = get_double(*it, "temperature", rc.grpo.temperature, "grpo.");
    rc.grpo.std_floor = get_double(*it, "std_floor", rc.grpo.std_floor, "grpo.");
  }
  if (auto it = j.find("stage1"); it != j.end()) {
    check_keys(*it, {"reward", "steps", "eval_interval"}, "stage1.");
    rc.stage1_reward = get_str(*it, "reward", rc.stage1_reward, "stage1.");
    rc.stage1_steps = get_int(*it, "steps", rc.stage1_steps, "stage1.");
    rc.stage1_eval_interval =
        get_int(*it, "eval_interval", rc.stage1_eval_interval, "stage1.");
  }
  if (auto it = j.find("stage2"); it != j.end()) {
    check_keys(*it, {"reward", "steps", "eval_interval"}, "stage2.");
    rc.stage2_reward = get_str(*it, "reward", rc.stage2_reward, "stage2.");
    rc.stage2_steps = get_int(*it, "steps", rc.stage2_steps, "stage2.");
    rc.stage2_eval_interval =
        get_int(*it, "eval_interval", rc.stage2_eval_interval, "stage2.");
  }
  if (auto it = j.find("transition"); it != j.end()) {
    check_keys(*it, {"delta", "patience"}, "transition.");
    rc.transition.delta = get_double(*it, "delta", rc.transition.delta, "transition.");
    rc.transition.patience =
        get_int(*it, "patience", rc.transition.patience, "transition.");
  }
}

void validate_run_config(const RunConfig& rc) {
  if (rc.mode != "desa" && rc.mode != "em-only" && rc.mode != "composite" &&
      rc.mode != "stage1-only")
    throw DataError("invalid mode: " + rc.mode +
                    " (expected desa | em-only | composite | stage1-only)");
  if (rc.stage1_reward != "recall" && rc.stage1_reward != "recall+penalty" &&
      rc.stage1_reward != "acc")
    throw DataError("invalid stage1 reward: " + rc.stage1_reward +
                    " (expected recall | recall+penalty | acc)");
  if (rc.stage2_reward != "em")
    throw DataError("invalid stage2 reward: " + rc.stage2_reward +
                    " (stage 2 optimizes em)");
  if (rc.env.top_k < 1) throw DataError("config: env.top_k must be >= 1");
  if (rc.env.max_turns < 1) throw DataError("config: env.max_turns must be >= 1");
}

ordered_json effective_config_json(const RunConfig& rc) {
  ordered_json j;
  j["mode"] = rc.mode;
  j["seed"] = rc.seed;
  j["env"] = {{"top_k", rc.env.top_k},
              {"max_turns", rc.env.max_turns},
              {"obs_char_cap", rc.env.obs_char_cap}};
  j["grpo"] = {{"group_size", rc.grpo.group_size},
               {"clip_eps", rc.grpo.clip_eps},
               {"kl_coef", rc.grpo.kl_coef},
               {"learning_rate", rc.grpo.learning_rate},
               {"temperature", rc.grpo.temperature},
               {"std_floor", rc.grpo.std_floor}};
  j["stage1"] = {{"reward", rc.stage1_reward},
                 {"steps", rc.stage1_steps},
                 {"eval_interval", rc.stage1_eval_interval}};
  j["stage2"] = {{"reward", rc.stage2_reward},
                 {"steps", rc.stage2_steps},
                 {"eval_interval", rc.stage2_eval_interval}};
  j["transition"] = {{"delta", rc.transition.delta},
                     {"patience", rc.transition.patience}};
  return j;
}

// ------------------------------------------------------------------- helpers

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write: " + path.string());
  out << content;
  out.flush();
  if (!out) throw DataError("write failed: " + path.string());
}

ordered_json curve_json(const EvalCurve& curve) {
  ordered_json arr = ordered_json::array();
  for (const EvalPoint& p : curve.points)
    arr.push_back(ordered_json{{"step", p.step}, {"em", p.em}, {"recall", p.recall}});
  return arr;
}

void write_checkpoints(const CheckpointStore& store, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create directory: " + dir.string());
  for (const auto& [step, entry] : store.by_step)
    save_policy_checkpoint(entry.policy, dir / ("step" + std::to_string(step) + ".json"));
}

ToyPolicy policy_for_env(const RunConfig& rc) {
  return ToyPolicy(agent_bucket_count(rc.env.max_turns), kAgentActionCount,
                   rc.grpo.temperature);
}

ToyPolicy load_policy_for_env(const fs::path& path, const RunConfig& rc) {
  ToyPolicy policy = load_policy_checkpoint(path);
  if (policy.buckets() != agent_bucket_count(rc.env.max_turns) ||
      policy.actions() != kAgentActionCount)
    throw DataError("checkpoint shape (" + std::to_string(policy.buckets()) + "x" +
                    std::to_string(policy.actions()) +
                    ") does not match the environment (" +
                    std::to_string(agent_bucket_count(rc.env.max_turns)) + "x" +
                    std::to_string(kAgentActionCount) + "): " + path.string());
  return policy;
}

// ------------------------------------------------------------------ commands

struct GenTaskArgs {
  std::uint64_t seed = 0;
  int n = 50;
  int hops = 2;
  int distractors = 5;
  fs::path out_dir = ".";
};

void cmd_gen_task(const GenTaskArgs& args) {
  BridgeTaskSpec spec;
  spec.seed = args.seed;
  spec.n_questions = args.n;
  spec.hops = args.hops;
  spec.distractor_count = args.distractors;
  BridgeTask task = generate_bridge_qa(spec);
  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec) throw DataError("cannot create directory: " + args.out_dir.string());
  save_corpus(task.corpus, args.out_dir / "corpus.jsonl");
  save_dataset(task.items, args.out_dir / "qa.jsonl");
  std::cout << "wrote " << task.corpus.docs.size() << " docs, " << task.items.size()
            << " questions to " << args.out_dir.string() << "\n";
}

struct IndexArgs {
  fs::path corpus;
  std::string query;
  int k = 3;
};

void cmd_index(const IndexArgs& args) {
  Corpus corpus = load_corpus(args.corpus);
  RetrieverIndex index = RetrieverIndex::build(corpus);
  std::cout << "indexed " << index.doc_count() << " docs, " << index.term_count()
            << " terms\n";
  if (!args.query.empty()) {
    std::vector<const Document*> hits = index.retrieve(args.query, args.k);
    int rank = 1;
    for (const Document* doc : hits) {
      ordered_json line;
      line["rank"] = rank++;
      line["id"] = doc->id;
      line["title"] = doc->title;
      std::cout << line.dump() << "\n";
    }
  }
}

struct TrainArgs {
  fs::path corpus;
  fs::path qa;
  fs::path out;
  std::optional<fs::path> dev;
  std::optional<fs::path> config;
  std::optional<std::string> mode;
  std::optional<std::string> stage1_reward;
  std::optional<std::uint64_t> seed;
};

void cmd_train(const TrainArgs& args) {
  RunConfig rc;
  if (args.config) apply_config_file(rc, *args.config);
  if (args.mode) rc.mode = *args.mode;           // flags win over the file
  if (args.stage1_reward) rc.stage1_reward = *args.stage1_reward;
  if (args.seed) rc.seed = *args.seed;
  validate_run_config(rc);

  if (fs::exists(args.out) && !fs::is_empty(args.out))
    throw DataError("run directory not empty: " + args.out.string());
  std::error_code ec;
  fs::create_directories(args.out, ec);
  if (ec) throw DataError("cannot create directory: " + args.out.string());

  Corpus corpus = load_corpus(args.corpus);
  std::vector<QAItem> train_set = load_dataset(args.qa);
  std::vector<QAItem> dev_set = args.dev ? load_dataset(*args.dev) : train_set;
  RetrieverIndex index = RetrieverIndex::build(corpus);
  EnvContext ctx{&index, rc.env};
  ToyPolicy policy0 = policy_for_env(rc);

  StageConfig stage1{reward_spec_from_name(rc.stage1_reward), rc.stage1_steps,
                     rc.stage1_eval_interval};
  StageConfig stage2{reward_spec_from_name(rc.stage2_reward), rc.stage2_steps,
                     rc.stage2_eval_interval};

  ordered_json cfg_echo = effective_config_json(rc);
  write_text(args.out / "effective_config.json", cfg_echo.dump(2) + "\n");

  ordered_json report;
  const EvalCurve* last_curve = nullptr;
  DesaResult desa{policy0, {}, {}, 0, {}, {}};
  StageResult single{policy0, {}, {}};

  if (rc.mode == "desa") {
    std::ofstream audit1(args.out / "reward_audit_stage1.csv", std::ios::binary);
    std::ofstream audit2(args.out / "reward_audit_stage2.csv", std::ios::binary);
    if (!audit1 || !audit2)
      throw DataError("cannot write audit logs in " + args.out.string());
    desa = run_desa(policy0, stage1, stage2, rc.transition, ctx, train_set, dev_set,
                    rc.grpo, rc.seed, &audit1, &audit2);
    write_text(args.out / "stage1_curve.csv", curve_csv(desa.stage1_curve));
    write_text(args.out / "stage2_curve.csv", curve_csv(desa.stage2_curve));
    write_checkpoints(desa.stage1_checkpoints, args.out / "checkpoints" / "stage1");
    write_checkpoints(desa.stage2_checkpoints, args.out / "checkpoints" / "stage2");
    save_policy_checkpoint(desa.final_policy, args.out / "final_policy.json");
    report["stage1_curve"] = curve_json(desa.stage1_curve);
    report["stage2_curve"] = curve_json(desa.stage2_curve);
    report["transition_step"] = desa.transition_step;
    last_curve = &desa.stage2_curve;
  } else {
    std::ofstream audit(args.out / "reward_audit.csv", std::ios::binary);
    if (!audit) throw DataError("cannot write audit log in " + args.out.string());
    if (rc.mode == "stage1-only") {
      single = run_stage1_only(policy0, stage1, ctx, train_set, dev_set, rc.grpo,
                               rc.seed, &audit);
    } else {
      // Single-stage baselines consume the combined two-stage budget so all
      // modes compare at identical step counts.
      StageConfig combined{stage1.reward_spec, rc.stage1_steps + rc.stage2_steps,
                           rc.stage1_eval_interval};
      BaselineKind kind =
          rc.mode == "em-only" ? BaselineKind::EmOnly : BaselineKind::Composite;
      single = run_baseline(kind, policy0, combined, ctx, train_set, dev_set, rc.grpo,
                            rc.seed, &audit);
    }
    write_text(args.out / "curve.csv", curve_csv(single.curve));
    write_checkpoints(single.checkpoints, args.out / "checkpoints");
    save_policy_checkpoint(single.final_policy, args.out / "final_policy.json");
    report["curve"] = curve_json(single.curve);
    last_curve = &single.curve;
  }
  report["config"] = cfg_echo;
  write_text(args.out / "report.json", report.dump(2) + "\n");

  if (last_curve && !last_curve->points.empty()) {
    const EvalPoint& fin = last_curve->points.back();
    std::cout << "final dev em " << fin.em << " recall " << fin.recall;
  } else {
    std::cout << "done";
  }
  if (rc.mode == "desa") std::cout << " (transition step " << desa.transition_step << ")";
  std::cout << "; run written to " << args.out.string() << "\n";
}

struct EvaluateArgs {
  fs::path corpus;
  fs::path qa;
  fs::path out;
  std::optional<fs::path> checkpoint;
  std::optional<fs::path> config;
};

void cmd_evaluate(const EvaluateArgs& args) {
  RunConfig rc;
  if (args.config) apply_config_file(rc, *args.config);
  Corpus corpus = load_corpus(args.corpus);
  std::vector<QAItem> items = load_dataset(args.qa);
  RetrieverIndex index = RetrieverIndex::build(corpus);
  EnvContext ctx{&index, rc.env};
  ToyPolicy policy =
      args.checkpoint ? load_policy_for_env(*args.checkpoint, rc) : policy_for_env(rc);
  EvalResult result = evaluate(policy, ctx, items);
  emit_report(result, args.out);
  std::cout << "em_rate " << result.em_rate << " recall_rate " << result.recall_rate
            << " deficient_rate " << result.deficient_rate << "; report in "
            << args.out.string() << "\n";
}

struct AnalyzeArgs {
  fs::path log;
  fs::path out;
};

void cmd_analyze(const AnalyzeArgs& args) {
  std::vector<TrajectoryLogEntry> entries = load_trajectory_log(args.log);
  if (entries.empty()) throw DataError("empty trajectory log: " + args.log.string());
  EvalResult result;
  std::vector<BehaviorRecord> records;
  for (const TrajectoryLogEntry& entry : entries) {
    ParseResult parsed = parse_trajectory(entry.raw, entry.question);
    const AnswerSet gold{entry.answers};
    ItemResult item;
    item.em = reward_em(parsed.trajectory.final_answer.value_or(""), gold);
    // Offline logs carry no doc identities; the information blocks are the
    // retrieved content.
    item.recall = reward_recall(aggregate_observations(parsed.trajectory), gold);
    item.flags = detect_behaviors(parsed.trajectory, parsed.issues);
    item.trajectory = std::move(parsed.trajectory);
    records.push_back(BehaviorRecord{item.flags, item.recall, item.em});
    result.em_rate += item.em;
    result.recall_rate += item.recall;
    result.items.push_back(std::move(item));
  }
  result.em_rate /= static_cast<double>(entries.size());
  result.recall_rate /= static_cast<double>(entries.size());
  result.cohorts = cohort_report(records);
  result.deficient_rate = result.cohorts.deficient_rate;
  emit_report(result, args.out);
  std::cout << "analyzed " << entries.size() << " trajectories; deficient_rate "
            << result.deficient_rate << "; report in " << args.out.string() << "\n";
}

struct ScoreArgs {
  fs::path in;
};

void cmd_score(const ScoreArgs& args) {
  std::ifstream in(args.in, std::ios::binary);
  if (!in) throw DataError("cannot open request: " + args.in.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    ScoreOutcome outcome = score(parse_score_request(buf.str()));
    std::cout << score_response_json(outcome) << "\n";
  } catch (const DataError& e) {
    // Machine-readable rejection on stdout, same shape as the wire.
    std::cout << error_response_json(e.what()) << "\n";
    throw;
  }
}

struct ServeArgs {
  ServiceConfig cfg;
};

void cmd_serve(const ServeArgs& args) {
  // Block signals before worker threads spawn so they inherit the mask and
  // sigwait below is the only consumer.
  sigset_t sigs;
  sigemptyset(&sigs);
  sigaddset(&sigs, SIGINT);
  sigaddset(&sigs, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &sigs, nullptr);

  ScoringService service(args.cfg);
  int port = service.start();
  std::cout << "listening on " << args.cfg.host << ":" << port << std::endl;

  int sig = 0;
  sigwait(&sigs, &sig);
  service.stop();
  std::cout << "stopped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search-augmented QA agent laboratory"};
  app.require_subcommand(1);

  GenTaskArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen-task", "generate a synthetic bridge-QA task");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--n", gen_args.n, "number of questions")->check(CLI::PositiveNumber);
  gen->add_option("--hops", gen_args.hops, "1 or 2")->check(CLI::IsMember({1, 2}));
  gen->add_option("--distractors", gen_args.distractors, "distractor docs per question")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--out-dir", gen_args.out_dir, "output directory");

  IndexArgs index_args;
  CLI::App* index = app.add_subcommand("index", "build the index; optionally query it");
  index->add_option("--corpus", index_args.corpus, "corpus JSONL")->required();
  index->add_option("--query", index_args.query, "query to run");
  index->add_option("--k", index_args.k, "results to return")
      ->check(CLI::NonNegativeNumber);

  TrainArgs train_args;
  std::string train_mode;
  std::string train_stage1_reward;
  std::uint64_t train_seed = 0;
  CLI::App* train = app.add_subcommand("train", "run a training schedule");
  train->add_option("--corpus", train_args.corpus, "corpus JSONL")->required();
  train->add_option("--qa", train_args.qa, "train QA JSONL")->required();
  train->add_option("--dev", [&train_args](const std::vector<std::string>& v) {
    train_args.dev = fs::path(v.front());
    return true;
  }, "dev QA JSONL (defaults to --qa)");
  train->add_option("--out", train_args.out, "run directory (must be empty)")
      ->required();
  train->add_option("--config", [&train_args](const std::vector<std::string>& v) {
    train_args.config = fs::path(v.front());
    return true;
  }, "config JSON");
  CLI::Option* mode_opt =
      train->add_option("--mode", train_mode, "desa | em-only | composite | stage1-only")
          ->check(CLI::IsMember({"desa", "em-only", "composite", "stage1-only"}));
  CLI::Option* s1r_opt =
      train
          ->add_option("--stage1-reward", train_stage1_reward,
                       "recall | recall+penalty | acc")
          ->check(CLI::IsMember({"recall", "recall+penalty", "acc"}));
  CLI::Option* seed_opt = train->add_option("--seed", train_seed, "run seed");

  EvaluateArgs eval_args;
  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate a policy checkpoint");
  evaluate->add_option("--corpus", eval_args.corpus, "corpus JSONL")->required();
  evaluate->add_option("--qa", eval_args.qa, "QA JSONL")->required();
  evaluate->add_option("--out", eval_args.out, "report directory")->required();
  evaluate->add_option("--checkpoint", [&eval_args](const std::vector<std::string>& v) {
    eval_args.checkpoint = fs::path(v.front());
    return true;
  }, "policy checkpoint JSON (default: fresh uniform policy)");
  evaluate->add_option("--config", [&eval_args](const std::vector<std::string>& v) {
    eval_args.config = fs::path(v.front());
    return true;
  }, "config JSON");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "cohort report for a trajectory log");
  analyze->add_option("--log", analyze_args.log, "trajectory JSONL")->required();
  analyze->add_option("--out", analyze_args.out, "report directory")->required();

  ScoreArgs score_args;
  CLI::App* score_cmd = app.add_subcommand("score", "score one request file offline");
  score_cmd->add_option("--in", score_args.in, "request JSON file")->required();

  ServeArgs serve_args;
  CLI::App* serve = app.add_subcommand("serve", "run the scoring service");
  serve->add_option("--host", serve_args.cfg.host, "bind address");
  serve->add_option("--port", serve_args.cfg.port, "port (0 = ephemeral)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--threads", serve_args.cfg.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  serve->add_option("--backlog", serve_args.cfg.backlog, "queued requests bound")
      ->check(CLI::NonNegativeNumber);
  serve->add_option("--max-body", serve_args.cfg.max_body_bytes, "request size cap");

  try {
    app.parse(argc, argv);
    if (*mode_opt) train_args.mode = train_mode;
    if (*s1r_opt) train_args.stage1_reward = train_stage1_reward;
    if (*seed_opt) train_args.seed = train_seed;

    if (gen->parsed()) cmd_gen_task(gen_args);
    if (index->parsed()) cmd_index(index_args);
    if (train->parsed()) cmd_train(train_args);
    if (evaluate->parsed()) cmd_evaluate(eval_args);
    if (analyze->parsed()) cmd_analyze(analyze_args);
    if (score_cmd->parsed()) cmd_score(score_args);
    if (serve->parsed()) cmd_serve(serve_args);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
