#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace searchlab {

// Agent/environment turn protocol. A trajectory is free text carrying four
// tag pairs: <think>..</think>, <search>..</search>, <information>..</information>,
// <answer>..</answer>. The parser is total: any byte string yields a trajectory
// plus a list of issues, never an exception.

struct SearchAction {
  std::string raw_query;         // exact text between the search tags
  std::string normalized_query;  // casefolded, whitespace-collapsed raw_query
};

struct AnswerAction {
  std::string answer_text;
};

using Action = std::variant<SearchAction, AnswerAction>;

struct Step {
  std::optional<std::string> think;
  Action action;
  // Environment response to a search (information block); never set for answers.
  std::optional<std::string> observation;

  bool is_search() const { return std::holds_alternative<SearchAction>(action); }
  const SearchAction* search() const { return std::get_if<SearchAction>(&action); }
  const AnswerAction* answer() const { return std::get_if<AnswerAction>(&action); }
};

struct ParsedTrajectory {
  std::string question;
  std::vector<Step> steps;
  // Text of the first complete answer block, when one exists.
  std::optional<std::string> final_answer;

  std::size_t search_count() const;
};

bool operator==(const SearchAction&, const SearchAction&);
bool operator==(const AnswerAction&, const AnswerAction&);
bool operator==(const Step&, const Step&);
bool operator==(const ParsedTrajectory&, const ParsedTrajectory&);

enum class TagKind { Think, Search, Information, Answer };

enum class TagIssueKind {
  UnclosedTag,           // open tag with no later matching close
  CloseWithoutOpen,      // close tag with no pending open
  InterleavedTags,       // other tags between an open and its matching close
  EmptyQuery,            // search block whose query is empty/whitespace
  PunctuationOnlyQuery,  // search block whose query strips to nothing
  MultipleAnswers,       // complete answer block after the first one
  ContentAfterAnswer,    // non-whitespace input after the first answer block
};

struct TagIssue {
  TagIssueKind kind;
  std::size_t begin;  // [begin, end) character span in the raw input
  std::size_t end;
  TagKind tag;  // which tag pair the issue concerns
};

struct ParseOptions {
  // Parsing reads at most this many characters; the rest is ignored.
  std::size_t max_chars = 65536;
};

struct ParseResult {
  ParsedTrajectory trajectory;
  std::vector<TagIssue> issues;  // sorted by (begin, end, kind)
};

// Total function: never throws on any input. Recoverable malformations
// (bad queries, extra answers) still produce steps; structural tag damage
// produces issues and skips the damaged span.
ParseResult parse_trajectory(std::string_view raw, std::string_view question,
                             const ParseOptions& opts = {});

// Instruction prompt for a question; byte-stable. Throws std::invalid_argument
// on an empty question.
std::string render_prompt(std::string_view question);

// Serializes steps back to tagged text. parse(render(t), t.question) is
// structurally equal to t for well-formed trajectories. Throws
// std::invalid_argument if more than one step answers.
std::string render_trajectory(const ParsedTrajectory& t);

// Casefold + collapse runs of whitespace to single spaces + trim.
std::string normalize_query(std::string_view raw);

std::string_view to_string(TagIssueKind kind);
std::string_view to_string(TagKind kind);

}  // namespace searchlab
