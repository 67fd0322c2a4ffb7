#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "searchlab/retriever.hpp"

namespace searchlab {

struct QAItem {
  std::string question;
  std::vector<std::string> answers;  // non-empty
};

struct BridgeTaskSpec {
  std::uint64_t seed = 0;
  int n_questions = 1;
  int hops = 2;  // 1 or 2
  int distractor_count = 5;
};

struct BridgeTask {
  Corpus corpus;
  std::vector<QAItem> items;
};

// Synthetic multi-hop QA over a closed corpus. Two-hop questions read
// "What is the capital of the birthplace of <P>?" backed by a fact chain
// "<P> was born in <B>." / "The capital of <B> is <C>." with answer C;
// one-hop drops the birthplace link. Entity names are unique single tokens,
// every answer appears in exactly one document, and distractor docs reuse the
// same sentence templates with unrelated entities. Deterministic under seed:
// identical specs yield byte-identical output. Corpus size is exactly
// n_questions * (hops_docs + distractor_count). Throws std::invalid_argument
// on n_questions < 1 or hops outside {1, 2}.
BridgeTask generate_bridge_qa(const BridgeTaskSpec& spec);

// Question shape as seen by the scripted agent templates.
struct BridgeQuestion {
  std::string subject;  // person (two-hop) or place (one-hop)
  bool two_hop = false;
};

// Recognizes the generator's question templates; anything else falls back to
// one-hop with the question's last token as subject, so agents stay runnable
// on arbitrary datasets.
BridgeQuestion parse_bridge_question(std::string_view question);

// First "<person> was born in <X>" match in text, if any.
std::optional<std::string> find_birth_place(std::string_view text,
                                            std::string_view person);

// First "The capital of <place> is <X>" match in text, if any.
std::optional<std::string> find_capital_of(std::string_view text,
                                           std::string_view place);

}  // namespace searchlab
