#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "searchlab/retriever.hpp"
#include "searchlab/trajectory.hpp"

namespace searchlab {

struct EnvConfig {
  int top_k = 3;
  int max_turns = 4;              // search budget per episode
  std::size_t obs_char_cap = 2000;  // observation text truncation
};

struct HistoryEntry {
  Action action;
  std::optional<std::string> observation;  // set for searches only
  std::vector<Document> docs;              // retrieved instances, ranked order
};

struct EpisodeState {
  std::string question;
  std::vector<HistoryEntry> history;
  int turns_used = 0;
  bool terminated = false;
  bool budget_exhausted = false;
  std::optional<std::string> final_answer;
  std::vector<std::string> retrieved_doc_ids;  // instances across all searches
};

// Appended (as a final line) to the observation of the search that consumes
// the last turn.
inline constexpr std::string_view kBudgetExhaustedSentinel = "budget exhausted";

// Throws std::invalid_argument on an empty question.
EpisodeState env_reset(std::string_view question, const EnvConfig& config);

// Applies one action. Searches retrieve config.top_k docs and return the
// rendered observation; answers terminate with no observation. The search
// that brings turns_used to max_turns terminates the episode and gets the
// budget sentinel appended to its observation. Throws std::logic_error if
// the state is already terminal.
std::optional<std::string> env_step(EpisodeState& state, const Action& action,
                                    const RetrieverIndex& index,
                                    const EnvConfig& config);

// "(title) body" per doc, newline-joined, truncated to char_cap.
std::string render_observation(const std::vector<const Document*>& docs,
                               std::size_t char_cap);

}  // namespace searchlab
