#include "searchlab/bridge_agent.hpp"

#include <algorithm>

#include "searchlab/retriever.hpp"
#include "searchlab/taskgen.hpp"

namespace searchlab {

BridgeBeliefs::BridgeBeliefs(std::string_view q) : question(q) {
  BridgeQuestion parsed = parse_bridge_question(q);
  subject = parsed.subject;
  two_hop = parsed.two_hop;
  // One-hop questions name the place directly; the bridge is known up front.
  if (!two_hop && !subject.empty()) bridge_place = subject;
}

void BridgeBeliefs::observe(std::string_view observation) {
  std::vector<std::string> toks = tokenize(observation);
  observed_tokens.insert(observed_tokens.end(), toks.begin(), toks.end());
  if (!bridge_place) {
    if (auto place = find_birth_place(observation, subject)) bridge_place = *place;
  }
  if (bridge_place && !candidate_answer) {
    if (auto capital = find_capital_of(observation, *bridge_place))
      candidate_answer = *capital;
  }
}

int BridgeBeliefs::bucket(int turn, int max_turns) const {
  int t = std::clamp(turn, 0, std::max(max_turns, 0));
  return t * 4 + (bridge_place ? 2 : 0) + (candidate_answer ? 1 : 0);
}

int agent_bucket_count(int max_turns) { return (std::max(max_turns, 0) + 1) * 4; }

Action realize_action(AgentAction choice, const BridgeBeliefs& beliefs, Rng& rng) {
  auto search = [](std::string raw) {
    std::string norm = normalize_query(raw);
    return Action{SearchAction{std::move(raw), std::move(norm)}};
  };
  switch (choice) {
    case AgentAction::SearchBirthplace:
      return search(beliefs.subject + " born");
    case AgentAction::SearchCapital:
      return search(beliefs.bridge_place ? "capital of " + *beliefs.bridge_place
                                         : std::string("?"));
    case AgentAction::SearchVerbatim:
      return search(beliefs.question);
    case AgentAction::AnswerBest:
      return Action{AnswerAction{beliefs.candidate_answer.value_or("unknown")}};
    case AgentAction::AnswerRandom:
      if (beliefs.observed_tokens.empty()) return Action{AnswerAction{"unknown"}};
      return Action{AnswerAction{
          beliefs.observed_tokens[rng_below(rng, beliefs.observed_tokens.size())]}};
  }
  return Action{AnswerAction{"unknown"}};  // unreachable
}

}  // namespace searchlab
