#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "searchlab/rng.hpp"
#include "searchlab/trajectory.hpp"

namespace searchlab {

// Structured action set for the bridge-QA agent. A tabular policy picks one
// of these per turn; realize_action turns the pick into a concrete search
// query or answer using the agent's current beliefs.
enum class AgentAction : int {
  SearchBirthplace = 0,  // "<subject> born"
  SearchCapital = 1,     // "capital of <bridge>"; "?" while the bridge is unknown
  SearchVerbatim = 2,    // the question text itself
  AnswerBest = 3,        // best candidate answer; "unknown" if none observed
  AnswerRandom = 4,      // random token seen in any observation; "unknown" if none
};

inline constexpr int kAgentActionCount = 5;

// Facts the agent has extracted from the episode so far. The policy sees the
// beliefs only through bucket(): (turn, bridge known?, candidate known?).
struct BridgeBeliefs {
  explicit BridgeBeliefs(std::string_view question);

  // Folds one search observation into the beliefs: records its tokens and
  // scans for the birthplace / capital facts that are still missing.
  void observe(std::string_view observation);

  // turn is clamped to [0, max_turns]; buckets are dense in
  // [0, agent_bucket_count(max_turns)).
  int bucket(int turn, int max_turns) const;

  std::string question;
  std::string subject;  // person (two-hop) or place (one-hop)
  bool two_hop = false;
  std::optional<std::string> bridge_place;      // birthplace once discovered
  std::optional<std::string> candidate_answer;  // capital once discovered
  std::vector<std::string> observed_tokens;     // every token seen, in order
};

int agent_bucket_count(int max_turns);

// Concrete search/answer action for one abstract pick. rng is consulted only
// by AnswerRandom.
Action realize_action(AgentAction choice, const BridgeBeliefs& beliefs, Rng& rng);

}  // namespace searchlab
