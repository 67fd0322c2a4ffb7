#include "searchlab/scoring.hpp"

#include <cmath>

#include <json.hpp>

#include "searchlab/errors.hpp"

namespace searchlab {

namespace {

using nlohmann::json;

bool known_component(const std::string& name) {
  return name == "em" || name == "recall" || name == "acc" || name == "penalty";
}

}  // namespace

ScoreRequest parse_score_request(const std::string& body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded()) throw DataError("malformed JSON");
  if (!j.is_object()) throw DataError("request must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "trajectory" && key != "answers" && key != "spec" && key != "retrieved")
      throw DataError("unknown key: " + key);
  }

  ScoreRequest req;

  auto traj = j.find("trajectory");
  if (traj == j.end() || !traj->is_string())
    throw DataError("\"trajectory\" must be a string");
  req.trajectory_text = traj->get<std::string>();

  auto answers = j.find("answers");
  if (answers == j.end() || !answers->is_array())
    throw DataError("\"answers\" must be an array of strings");
  for (const json& v : *answers) {
    if (!v.is_string()) throw DataError("\"answers\" entries must be strings");
    req.answers.candidates.push_back(v.get<std::string>());
  }
  if (req.answers.candidates.empty()) throw DataError("\"answers\" must be non-empty");

  auto spec = j.find("spec");
  if (spec == j.end() || !spec->is_object())
    throw DataError("\"spec\" must be an object of component weights");
  for (const auto& [name, weight] : spec->items()) {
    if (!known_component(name)) throw DataError("unknown reward component: " + name);
    if (!weight.is_number()) throw DataError("weight for " + name + " must be a number");
    double w = weight.get<double>();
    if (!std::isfinite(w)) throw DataError("weight for " + name + " must be finite");
    req.spec.weights[name] = w;
  }

  auto retrieved = j.find("retrieved");
  if (retrieved != j.end()) {
    if (!retrieved->is_array())
      throw DataError("\"retrieved\" must be an array of string arrays");
    std::vector<std::vector<std::string>> record;
    for (const json& step : *retrieved) {
      if (!step.is_array())
        throw DataError("\"retrieved\" must be an array of string arrays");
      std::vector<std::string> bodies;
      for (const json& v : step) {
        if (!v.is_string())
          throw DataError("\"retrieved\" entries must be strings");
        bodies.push_back(v.get<std::string>());
      }
      record.push_back(std::move(bodies));
    }
    req.retrieved = std::move(record);
  }
  return req;
}

ScoreOutcome score(const ScoreRequest& req) {
  ParseResult parsed = parse_trajectory(req.trajectory_text, /*question=*/"");
  ScoreOutcome out;
  out.issues = parsed.issues;
  out.flags = detect_behaviors(parsed.trajectory, parsed.issues);

  RewardConfig rc;
  RewardBreakdown b;
  b.em = reward_em(parsed.trajectory.final_answer.value_or(""), req.answers);
  b.penalty = reward_penalty(out.flags, rc);

  if (req.retrieved) {
    if (req.retrieved->size() != parsed.trajectory.search_count())
      throw DataError("retrieved record has " + std::to_string(req.retrieved->size()) +
                      " step lists but the trajectory has " +
                      std::to_string(parsed.trajectory.search_count()) + " searches");
    // Wire bodies carry no doc identity, so instances aggregate without dedup.
    RecalledInfo info;
    std::vector<std::string> instances;
    for (const auto& step : *req.retrieved) {
      for (const std::string& body : step) {
        if (!info.text.empty()) info.text += '\n';
        info.text += body;
        instances.push_back(body);
      }
    }
    b.recall = reward_recall(info, req.answers);
    b.acc = reward_acc_bodies(instances, req.answers);
  } else {
    for (const auto& [name, weight] : req.spec.weights) {
      (void)weight;
      if (name == "recall") throw DataError("recall requires retrieval record");
      if (name == "acc") throw DataError("acc requires retrieval record");
    }
  }

  rc.mix_weights = req.spec.weights;
  reward_composite(b, rc);
  out.breakdown = b;
  return out;
}

std::string score_response_json(const ScoreOutcome& outcome) {
  auto opt = [](const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
  };
  nlohmann::ordered_json j;
  j["version"] = kWireVersion;
  nlohmann::ordered_json reward;
  reward["em"] = opt(outcome.breakdown.em);
  reward["recall"] = opt(outcome.breakdown.recall);
  reward["acc"] = opt(outcome.breakdown.acc);
  reward["penalty"] = opt(outcome.breakdown.penalty);
  reward["total"] = outcome.breakdown.total;
  j["reward"] = reward;
  nlohmann::ordered_json flags;
  flags["no_search"] = outcome.flags.no_search;
  flags["duplicate_queries"] = outcome.flags.duplicate_queries;
  flags["invalid_searches"] = outcome.flags.invalid_searches;
  j["flags"] = flags;
  j["category"] = categorize(outcome.flags);
  nlohmann::ordered_json issues = nlohmann::ordered_json::array();
  for (const TagIssue& issue : outcome.issues) {
    nlohmann::ordered_json entry;
    entry["kind"] = to_string(issue.kind);
    entry["begin"] = issue.begin;
    entry["end"] = issue.end;
    issues.push_back(std::move(entry));
  }
  j["issues"] = issues;
  return j.dump();
}

std::string error_response_json(std::string_view message) {
  nlohmann::ordered_json j;
  j["version"] = kWireVersion;
  j["error"] = message;
  return j.dump();
}

}  // namespace searchlab
