#include "searchlab/episode.hpp"

#include <stdexcept>

namespace searchlab {

EpisodeState env_reset(std::string_view question, const EnvConfig&) {
  if (question.empty()) throw std::invalid_argument("env_reset: empty question");
  EpisodeState s;
  s.question.assign(question);
  return s;
}

std::string render_observation(const std::vector<const Document*>& docs,
                               std::size_t char_cap) {
  std::string out;
  for (const Document* d : docs) {
    if (!out.empty()) out.push_back('\n');
    out.push_back('(');
    out += d->title;
    out += ") ";
    out += d->body;
  }
  if (out.size() > char_cap) out.resize(char_cap);
  return out;
}

std::optional<std::string> env_step(EpisodeState& state, const Action& action,
                                    const RetrieverIndex& index,
                                    const EnvConfig& config) {
  if (state.terminated) throw std::logic_error("env_step: episode already terminal");

  if (const SearchAction* search = std::get_if<SearchAction>(&action)) {
    std::vector<const Document*> docs = index.retrieve(search->raw_query, config.top_k);
    std::string obs = render_observation(docs, config.obs_char_cap);

    HistoryEntry entry;
    entry.action = action;
    entry.docs.reserve(docs.size());
    for (const Document* d : docs) {
      entry.docs.push_back(*d);
      state.retrieved_doc_ids.push_back(d->id);
    }
    ++state.turns_used;
    if (state.turns_used >= config.max_turns) {
      state.terminated = true;
      state.budget_exhausted = true;
      if (!obs.empty()) obs.push_back('\n');
      obs += kBudgetExhaustedSentinel;
    }
    entry.observation = obs;
    state.history.push_back(std::move(entry));
    return obs;
  }

  const AnswerAction& answer = std::get<AnswerAction>(action);
  HistoryEntry entry;
  entry.action = action;
  state.history.push_back(std::move(entry));
  state.final_answer = answer.answer_text;
  state.terminated = true;
  return std::nullopt;
}

}  // namespace searchlab
