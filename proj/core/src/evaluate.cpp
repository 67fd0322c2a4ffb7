#include "searchlab/evaluate.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "searchlab/errors.hpp"

namespace searchlab {

namespace {

// Fixed stream tag: evaluation is seed-free by contract, so any random
// realization (AnswerRandom) draws from a per-item stream derived from this.
constexpr std::uint64_t kEvalStreamTag = 0xE7A1D05EULL;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write: " + path.string());
  out << content;
  out.flush();
  if (!out) throw DataError("write failed: " + path.string());
}

nlohmann::ordered_json cohort_row_json(const CohortRow& row) {
  nlohmann::ordered_json j;
  j["count"] = row.count;
  j["mean_recall"] =
      row.mean_recall ? nlohmann::json(*row.mean_recall) : nlohmann::json(nullptr);
  j["mean_em"] = row.mean_em ? nlohmann::json(*row.mean_em) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

EvalResult evaluate(const ToyPolicy& policy, const EnvContext& ctx,
                    const std::vector<QAItem>& items) {
  if (items.empty()) throw std::invalid_argument("evaluate: empty dataset");
  EvalResult out;
  out.items.reserve(items.size());
  std::vector<BehaviorRecord> records;
  records.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    Rng rng(derive_seed(kEvalStreamTag, i));
    Rollout roll = run_episode(policy, ctx, items[i].question, rng, /*greedy=*/true);
    const AnswerSet gold{items[i].answers};

    ItemResult item;
    item.em = reward_em(roll.trajectory.final_answer.value_or(""), gold);
    item.recall =
        reward_recall(aggregate_recalled(roll.trajectory, roll.docs_per_step), gold);
    ParseResult reparsed =
        parse_trajectory(render_trajectory(roll.trajectory), items[i].question);
    item.flags = detect_behaviors(reparsed.trajectory, reparsed.issues);
    item.trajectory = std::move(roll.trajectory);

    records.push_back(BehaviorRecord{item.flags, item.recall, item.em});
    out.em_rate += item.em;
    out.recall_rate += item.recall;
    out.items.push_back(std::move(item));
  }
  const auto n = static_cast<double>(items.size());
  out.em_rate /= n;
  out.recall_rate /= n;
  out.cohorts = cohort_report(records);
  out.deficient_rate = out.cohorts.deficient_rate;
  return out;
}

void emit_report(const EvalResult& result, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DataError("cannot create directory: " + out_dir.string());

  nlohmann::ordered_json summary;
  summary["items"] = result.items.size();
  summary["em_rate"] = result.em_rate;
  summary["recall_rate"] = result.recall_rate;
  summary["deficient_rate"] = result.deficient_rate;
  summary["clean"] = cohort_row_json(result.cohorts.clean);
  summary["flagged"] = cohort_row_json(result.cohorts.flagged);
  summary["recall_failures"] = result.cohorts.recall_failures;
  write_file(out_dir / "summary.json", summary.dump(2) + "\n");

  std::string items_csv = "idx,em,recall,category\n";
  for (std::size_t i = 0; i < result.items.size(); ++i) {
    const ItemResult& item = result.items[i];
    char row[128];
    std::snprintf(row, sizeof(row), "%zu,%d,%d,", i, item.em, item.recall);
    items_csv += row;
    items_csv += categorize(item.flags);
    items_csv += '\n';
  }
  write_file(out_dir / "items.csv", items_csv);

  write_file(out_dir / "cohorts.csv", cohorts_csv(result.cohorts));
  write_file(out_dir / "recall_failures.csv", recall_failures_csv(result.cohorts));
}

}  // namespace searchlab
