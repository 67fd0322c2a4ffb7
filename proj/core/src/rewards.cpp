#include "searchlab/rewards.hpp"

#include <stdexcept>
#include <unordered_set>

namespace searchlab {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_ascii_punct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return (u >= '!' && u <= '/') || (u >= ':' && u <= '@') ||
         (u >= '[' && u <= '`') || (u >= '{' && u <= '~');
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool contains_any_gold(const std::string& normalized_text, const AnswerSet& gold) {
  for (const std::string& cand : gold.candidates) {
    if (normalized_text.find(normalize_answer(cand)) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

std::string normalize_answer(std::string_view s) {
  // Casefold and delete punctuation first; article tokens are decided on the
  // result ("a.b" collapses to the single token "ab", not an article).
  std::string flat;
  flat.reserve(s.size());
  for (char c : s) {
    if (is_ascii_punct(c)) continue;
    flat.push_back(ascii_lower(c));
  }

  std::string out;
  out.reserve(flat.size());
  std::size_t i = 0;
  while (i < flat.size()) {
    while (i < flat.size() && is_ws(flat[i])) ++i;
    std::size_t start = i;
    while (i < flat.size() && !is_ws(flat[i])) ++i;
    if (i == start) break;
    std::string_view tok(flat.data() + start, i - start);
    if (tok == "a" || tok == "an" || tok == "the") continue;
    if (!out.empty()) out.push_back(' ');
    out.append(tok);
  }
  return out;
}

int reward_em(std::string_view answer, const AnswerSet& gold) {
  std::string norm = normalize_answer(answer);
  for (const std::string& cand : gold.candidates) {
    if (norm == normalize_answer(cand)) return 1;
  }
  return 0;
}

RecalledInfo aggregate_recalled(const ParsedTrajectory& t,
                                const std::vector<std::vector<Document>>& docs_per_step) {
  if (docs_per_step.size() != t.search_count())
    throw std::invalid_argument(
        "aggregate_recalled: retrieval record does not align with search steps");

  RecalledInfo info;
  std::unordered_set<std::string_view> seen;
  for (const auto& docs : docs_per_step) {
    for (const Document& d : docs) {
      if (!seen.insert(d.id).second) continue;
      info.source_ids.push_back(d.id);
      if (!info.text.empty()) info.text.push_back('\n');
      info.text += d.body;
    }
  }
  return info;
}

RecalledInfo aggregate_observations(const ParsedTrajectory& t) {
  RecalledInfo info;
  for (const Step& s : t.steps) {
    if (!s.is_search() || !s.observation) continue;
    if (!info.text.empty()) info.text.push_back('\n');
    info.text += *s.observation;
  }
  return info;
}

int reward_recall(const RecalledInfo& info, const AnswerSet& gold) {
  return contains_any_gold(normalize_answer(info.text), gold) ? 1 : 0;
}

double reward_acc(const std::vector<Document>& retrieved, const AnswerSet& gold) {
  if (retrieved.empty()) return 0.0;
  std::size_t hits = 0;
  for (const Document& d : retrieved) {
    if (contains_any_gold(normalize_answer(d.body), gold)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(retrieved.size());
}

double reward_acc_bodies(const std::vector<std::string>& bodies, const AnswerSet& gold) {
  if (bodies.empty()) return 0.0;
  std::size_t hits = 0;
  for (const std::string& b : bodies) {
    if (contains_any_gold(normalize_answer(b), gold)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(bodies.size());
}

double reward_penalty(const BehaviorFlags& flags, const RewardConfig& cfg) {
  return flags.any() ? cfg.penalty_per_flag : 0.0;
}

double reward_composite(RewardBreakdown& components, const RewardConfig& cfg) {
  double total = 0.0;
  for (const auto& [name, weight] : cfg.mix_weights) {
    const std::optional<double>* value = nullptr;
    if (name == "em") value = &components.em;
    else if (name == "recall") value = &components.recall;
    else if (name == "acc") value = &components.acc;
    else if (name == "penalty") value = &components.penalty;
    else
      throw std::invalid_argument("reward_composite: unknown component '" + name + "'");
    if (!value->has_value())
      throw std::invalid_argument("reward_composite: component '" + name +
                                  "' was not computed");
    total += weight * **value;
  }
  components.total = total;
  return total;
}

RewardSpec reward_spec_from_name(std::string_view name) {
  RewardSpec spec;
  spec.name.assign(name);
  if (name == "em") {
    spec.weights = {{"em", 1.0}};
  } else if (name == "recall") {
    spec.weights = {{"recall", 1.0}};
  } else if (name == "acc") {
    spec.weights = {{"acc", 1.0}};
  } else if (name == "recall+penalty") {
    spec.weights = {{"recall", 1.0}, {"penalty", 1.0}};
  } else if (name == "composite") {
    spec.weights = {{"recall", 0.5}, {"em", 0.5}};
  } else {
    throw std::invalid_argument("unknown reward spec '" + spec.name + "'");
  }
  return spec;
}

}  // namespace searchlab
