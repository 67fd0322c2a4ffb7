#include "searchlab/taskgen.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

#include "searchlab/rng.hpp"

namespace searchlab {

namespace {

constexpr std::string_view kTwoHopPrefix = "What is the capital of the birthplace of ";
constexpr std::string_view kOneHopPrefix = "What is the capital of ";
constexpr std::string_view kBornInfix = " was born in ";
constexpr std::string_view kCapitalPrefix = "The capital of ";
constexpr std::string_view kCapitalInfix = " is ";

bool is_alnum_ascii(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

std::string take_token(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end < text.size() && is_alnum_ascii(text[end])) ++end;
  return std::string(text.substr(pos, end - pos));
}

// Unique pronounceable single-token names, deterministic per rng stream.
// Recall is substring containment over normalized text, so admitted names are
// substring-free: no name may contain or be contained in any other name or in
// any template word ("Pita" inside "capital" would fabricate recall).
class NameFactory {
 public:
  explicit NameFactory(Rng& rng) : rng_(rng) {
    for (std::string_view w : {"what", "is", "the", "capital", "of", "birthplace",
                               "was", "born", "in", "a", "an", "budget", "exhausted"})
      used_.emplace_back(w);
  }

  std::string fresh() {
    static constexpr std::array<std::string_view, 20> onsets{
        "b", "d", "f", "g", "k", "l", "m", "n", "p", "r",
        "s", "t", "v", "z", "br", "dr", "kl", "pr", "st", "tr"};
    static constexpr std::array<std::string_view, 10> nuclei{
        "a", "e", "i", "o", "u", "ar", "en", "il", "or", "un"};
    for (;;) {
      std::size_t syllables = 2 + rng_below(rng_, 2);
      std::string name;
      for (std::size_t s = 0; s < syllables; ++s) {
        name += onsets[rng_below(rng_, onsets.size())];
        name += nuclei[rng_below(rng_, nuclei.size())];
      }
      bool clash = false;
      for (const std::string& u : used_) {
        if (u.find(name) != std::string::npos || name.find(u) != std::string::npos) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        used_.push_back(name);
        name[0] = static_cast<char>(name[0] - 'a' + 'A');
        return name;
      }
    }
  }

 private:
  Rng& rng_;
  std::vector<std::string> used_;  // lowercase forms
};

std::string doc_id(std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "d%05zu", n);
  return buf;
}

}  // namespace

BridgeTask generate_bridge_qa(const BridgeTaskSpec& spec) {
  if (spec.n_questions < 1)
    throw std::invalid_argument("generate_bridge_qa: n_questions must be >= 1");
  if (spec.hops != 1 && spec.hops != 2)
    throw std::invalid_argument("generate_bridge_qa: hops must be 1 or 2");
  if (spec.distractor_count < 0)
    throw std::invalid_argument("generate_bridge_qa: negative distractor_count");

  Rng rng(derive_seed(spec.seed, 0xb21d6eULL));
  NameFactory names(rng);
  BridgeTask task;
  std::size_t next_id = 0;

  auto push_doc = [&](std::string title, std::string body) {
    task.corpus.docs.push_back(Document{doc_id(next_id++), std::move(title), std::move(body)});
  };
  auto birth_body = [](const std::string& person, const std::string& place) {
    return person + std::string(kBornInfix) + place + ".";
  };
  auto capital_body = [](const std::string& place, const std::string& capital) {
    return std::string(kCapitalPrefix) + place + std::string(kCapitalInfix) + capital + ".";
  };

  for (int q = 0; q < spec.n_questions; ++q) {
    std::string place = names.fresh();
    std::string answer = names.fresh();
    if (spec.hops == 2) {
      std::string person = names.fresh();
      task.items.push_back(QAItem{
          std::string(kTwoHopPrefix) + person + "?", {answer}});
      push_doc(person, birth_body(person, place));
    } else {
      task.items.push_back(QAItem{std::string(kOneHopPrefix) + place + "?", {answer}});
    }
    push_doc(place, capital_body(place, answer));

    for (int d = 0; d < spec.distractor_count; ++d) {
      if (d % 2 == 0) {
        std::string person = names.fresh();
        std::string where = names.fresh();
        push_doc(person, birth_body(person, where));
      } else {
        std::string where = names.fresh();
        std::string cap = names.fresh();
        push_doc(where, capital_body(where, cap));
      }
    }
  }
  return task;
}

BridgeQuestion parse_bridge_question(std::string_view question) {
  BridgeQuestion out;
  if (question.substr(0, kTwoHopPrefix.size()) == kTwoHopPrefix) {
    out.two_hop = true;
    out.subject = take_token(question, kTwoHopPrefix.size());
    if (!out.subject.empty()) return out;
  }
  if (question.substr(0, kOneHopPrefix.size()) == kOneHopPrefix) {
    out.two_hop = false;
    out.subject = take_token(question, kOneHopPrefix.size());
    if (!out.subject.empty()) return out;
  }
  // Unknown phrasing: last alphanumeric token, one-hop.
  out.two_hop = false;
  out.subject.clear();
  std::size_t end = question.size();
  while (end > 0) {
    while (end > 0 && !is_alnum_ascii(question[end - 1])) --end;
    std::size_t stop = end;
    while (end > 0 && is_alnum_ascii(question[end - 1])) --end;
    if (stop > end) {
      out.subject = std::string(question.substr(end, stop - end));
      break;
    }
  }
  return out;
}

std::optional<std::string> find_birth_place(std::string_view text,
                                            std::string_view person) {
  if (person.empty()) return std::nullopt;
  std::string needle = std::string(person) + std::string(kBornInfix);
  std::size_t pos = text.find(needle);
  if (pos == std::string_view::npos) return std::nullopt;
  std::string tok = take_token(text, pos + needle.size());
  if (tok.empty()) return std::nullopt;
  return tok;
}

std::optional<std::string> find_capital_of(std::string_view text,
                                           std::string_view place) {
  if (place.empty()) return std::nullopt;
  std::string needle =
      std::string(kCapitalPrefix) + std::string(place) + std::string(kCapitalInfix);
  std::size_t pos = text.find(needle);
  if (pos == std::string_view::npos) return std::nullopt;
  std::string tok = take_token(text, pos + needle.size());
  if (tok.empty()) return std::nullopt;
  return tok;
}

}  // namespace searchlab
