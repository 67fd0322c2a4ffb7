#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "searchlab/behavior.hpp"
#include "searchlab/rewards.hpp"
#include "searchlab/trajectory.hpp"

namespace searchlab {

// Wire protocol version stamped into every response.
inline constexpr int kWireVersion = 1;

struct ScoreRequest {
  std::string trajectory_text;
  AnswerSet answers;
  RewardSpec spec;  // weights only; the wire carries no preset name
  // Retrieved doc bodies, one list per search step, in trajectory order.
  std::optional<std::vector<std::vector<std::string>>> retrieved;
};

// Strict schema {"trajectory": str, "answers": [str, ...], "spec":
// {component: weight, ...}, "retrieved": [[str, ...], ...]} — "retrieved"
// optional, unknown keys and unknown component names rejected, weights must
// be finite, answers non-empty. Throws DataError describing the violation.
ScoreRequest parse_score_request(const std::string& body);

struct ScoreOutcome {
  RewardBreakdown breakdown;
  BehaviorFlags flags;
  std::vector<TagIssue> issues;
};

// Pure parse -> detect -> score composition. em and penalty are always
// computed; recall/acc only when the retrieval record is present (the
// service holds no retriever state). Throws DataError when a weight needs
// the absent record, or when the record's step count differs from the
// trajectory's search count. Malformed trajectory text is data, not an
// error: it scores with issues and flags set.
ScoreOutcome score(const ScoreRequest& req);

// {"version": 1, "reward": {"em", "recall", "acc", "penalty", "total"},
//  "flags": {...}, "category": str, "issues": [{"kind", "begin", "end"}]}
// with null for components that were not computed. Byte-stable.
std::string score_response_json(const ScoreOutcome& outcome);

// {"version": 1, "error": message}
std::string error_response_json(std::string_view message);

}  // namespace searchlab
