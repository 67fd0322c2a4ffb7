#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "searchlab/behavior.hpp"
#include "searchlab/retriever.hpp"
#include "searchlab/trajectory.hpp"

namespace searchlab {

struct AnswerSet {
  std::vector<std::string> candidates;  // non-empty, stored verbatim
};

// Casefold, strip ASCII punctuation, drop standalone articles a/an/the,
// collapse whitespace, trim. Idempotent.
std::string normalize_answer(std::string_view s);

// 1 iff the normalized answer equals some normalized gold candidate.
// An agent that never answered scores with empty text.
int reward_em(std::string_view answer, const AnswerSet& gold);

struct RecalledInfo {
  // Bodies of source_ids joined by single newlines, first-retrieval order.
  // The newline keeps token boundaries intact under normalize(); raw splicing
  // could fuse "…Par"+"is…" into a phantom answer.
  std::string text;
  std::vector<std::string> source_ids;  // deduplicated, first-seen order
};

// Aggregates every retrieved doc across all searches, deduplicated by id.
// docs_per_step must have exactly one entry per SearchAction step of t;
// anything else throws std::invalid_argument.
RecalledInfo aggregate_recalled(const ParsedTrajectory& t,
                                const std::vector<std::vector<Document>>& docs_per_step);

// Offline variant for bare trajectory logs: the information blocks are the
// retrieved content; no doc identities exist, so no dedup applies.
RecalledInfo aggregate_observations(const ParsedTrajectory& t);

// 1 iff some normalized gold candidate is a substring of normalize(info.text).
int reward_recall(const RecalledInfo& info, const AnswerSet& gold);

// Fraction of retrieved instances (duplicates count separately) whose
// normalized body contains some normalized gold candidate; 0 on none.
double reward_acc(const std::vector<Document>& retrieved, const AnswerSet& gold);
double reward_acc_bodies(const std::vector<std::string>& bodies, const AnswerSet& gold);

struct RewardConfig {
  double penalty_per_flag = -0.2;  // non-positive, applied once per rollout
  std::map<std::string, double> mix_weights{{"recall", 0.5}, {"em", 0.5}};
};

// penalty_per_flag if any flag is set, else 0. Once per rollout, never stacked.
double reward_penalty(const BehaviorFlags& flags, const RewardConfig& cfg);

struct RewardBreakdown {
  std::optional<double> em;
  std::optional<double> recall;
  std::optional<double> acc;
  std::optional<double> penalty;
  double total = 0.0;
};

// total = sum of weight * component over cfg.mix_weights. Component names:
// "em", "recall", "acc", "penalty". A weight naming an uncomputed (or
// unknown) component throws std::invalid_argument. Stores and returns total.
double reward_composite(RewardBreakdown& components, const RewardConfig& cfg);

// Named weight presets for training arms: "em", "recall", "acc",
// "recall+penalty" (both weighted 1) and "composite" (recall/em 0.5 each).
struct RewardSpec {
  std::string name;
  std::map<std::string, double> weights;
};
RewardSpec reward_spec_from_name(std::string_view name);

}  // namespace searchlab
