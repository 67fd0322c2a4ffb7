#include "searchlab/trajectory.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace searchlab {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

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

struct TagLiteral {
  std::string_view text;
  TagKind kind;
  bool close;
};

constexpr std::array<TagLiteral, 8> kTagLiterals{{
    {"<think>", TagKind::Think, false},
    {"</think>", TagKind::Think, true},
    {"<search>", TagKind::Search, false},
    {"</search>", TagKind::Search, true},
    {"<information>", TagKind::Information, false},
    {"</information>", TagKind::Information, true},
    {"<answer>", TagKind::Answer, false},
    {"</answer>", TagKind::Answer, true},
}};

struct TagToken {
  TagKind kind;
  bool close;
  std::size_t begin;
  std::size_t end;
  bool consumed = false;
};

std::vector<TagToken> scan_tags(std::string_view raw) {
  std::vector<TagToken> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '<') {
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& lit : kTagLiterals) {
      if (raw.compare(i, lit.text.size(), lit.text) == 0) {
        out.push_back(TagToken{lit.kind, lit.close, i, i + lit.text.size()});
        i += lit.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return out;
}

bool all_ws(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_ws);
}

bool strips_to_nothing(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return is_ws(c) || is_ascii_punct(c); });
}

// Complete, adjacently paired tag block.
struct Block {
  TagKind kind;
  std::size_t begin;   // start of the open tag
  std::size_t cbegin;  // content span
  std::size_t cend;
  std::size_t end;  // one past the close tag
};

}  // namespace

std::size_t ParsedTrajectory::search_count() const {
  std::size_t n = 0;
  for (const Step& s : steps)
    if (s.is_search()) ++n;
  return n;
}

bool operator==(const SearchAction& a, const SearchAction& b) {
  return a.raw_query == b.raw_query && a.normalized_query == b.normalized_query;
}
bool operator==(const AnswerAction& a, const AnswerAction& b) {
  return a.answer_text == b.answer_text;
}
bool operator==(const Step& a, const Step& b) {
  return a.think == b.think && a.action == b.action && a.observation == b.observation;
}
bool operator==(const ParsedTrajectory& a, const ParsedTrajectory& b) {
  return a.question == b.question && a.steps == b.steps &&
         a.final_answer == b.final_answer;
}

std::string normalize_query(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (is_ws(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(ascii_lower(c));
  }
  return out;
}

ParseResult parse_trajectory(std::string_view raw, std::string_view question,
                             const ParseOptions& opts) {
  if (raw.size() > opts.max_chars) raw = raw.substr(0, opts.max_chars);

  ParseResult res;
  res.trajectory.question.assign(question);

  std::vector<TagToken> tokens = scan_tags(raw);
  std::vector<Block> blocks;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].consumed) continue;
    TagToken& tok = tokens[i];
    if (tok.close) {
      res.issues.push_back(
          TagIssue{TagIssueKind::CloseWithoutOpen, tok.begin, tok.end, tok.kind});
      continue;
    }
    std::size_t match = npos;
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      if (!tokens[j].consumed && tokens[j].close && tokens[j].kind == tok.kind) {
        match = j;
        break;
      }
    }
    if (match == npos) {
      res.issues.push_back(
          TagIssue{TagIssueKind::UnclosedTag, tok.begin, tok.end, tok.kind});
      continue;
    }
    bool interleaved = false;
    for (std::size_t k = i + 1; k < match; ++k) {
      if (!tokens[k].consumed) {
        interleaved = true;
        break;
      }
    }
    if (interleaved) {
      // The damaged outer block is reported and its close retired; inner
      // tokens are processed on subsequent iterations so well-formed inner
      // blocks still become steps.
      res.issues.push_back(TagIssue{TagIssueKind::InterleavedTags, tok.begin,
                                    tokens[match].end, tok.kind});
      tokens[match].consumed = true;
      continue;
    }
    blocks.push_back(Block{tok.kind, tok.begin, tok.end, tokens[match].begin,
                           tokens[match].end});
    tokens[match].consumed = true;
  }

  ParsedTrajectory& t = res.trajectory;
  std::optional<std::string> pending_think;
  bool last_block_was_search = false;
  std::size_t first_answer_end = npos;

  for (const Block& b : blocks) {
    std::string content(raw.substr(b.cbegin, b.cend - b.cbegin));
    switch (b.kind) {
      case TagKind::Think:
        pending_think = std::move(content);
        last_block_was_search = false;
        break;
      case TagKind::Search: {
        if (all_ws(content)) {
          res.issues.push_back(
              TagIssue{TagIssueKind::EmptyQuery, b.begin, b.end, TagKind::Search});
        } else if (strips_to_nothing(content)) {
          res.issues.push_back(TagIssue{TagIssueKind::PunctuationOnlyQuery, b.begin,
                                        b.end, TagKind::Search});
        }
        Step s;
        s.think = std::exchange(pending_think, std::nullopt);
        SearchAction act;
        act.normalized_query = normalize_query(content);
        act.raw_query = std::move(content);
        s.action = std::move(act);
        t.steps.push_back(std::move(s));
        last_block_was_search = true;
        break;
      }
      case TagKind::Information:
        // Attaches to the immediately preceding search step; an information
        // block anywhere else is environment text with no home and is dropped.
        if (last_block_was_search && !t.steps.empty() && t.steps.back().is_search() &&
            !t.steps.back().observation) {
          t.steps.back().observation = std::move(content);
        }
        last_block_was_search = false;
        break;
      case TagKind::Answer: {
        if (t.final_answer) {
          res.issues.push_back(TagIssue{TagIssueKind::MultipleAnswers, b.begin, b.end,
                                        TagKind::Answer});
        } else {
          t.final_answer = content;
          first_answer_end = b.end;
        }
        Step s;
        s.think = std::exchange(pending_think, std::nullopt);
        s.action = AnswerAction{std::move(content)};
        t.steps.push_back(std::move(s));
        last_block_was_search = false;
        break;
      }
    }
  }

  if (first_answer_end != npos) {
    for (std::size_t p = first_answer_end; p < raw.size(); ++p) {
      if (!is_ws(raw[p])) {
        res.issues.push_back(
            TagIssue{TagIssueKind::ContentAfterAnswer, p, raw.size(), TagKind::Answer});
        break;
      }
    }
  }

  std::sort(res.issues.begin(), res.issues.end(),
            [](const TagIssue& a, const TagIssue& b) {
              if (a.begin != b.begin) return a.begin < b.begin;
              if (a.end != b.end) return a.end < b.end;
              return static_cast<int>(a.kind) < static_cast<int>(b.kind);
            });
  return res;
}

std::string render_prompt(std::string_view question) {
  if (question.empty()) throw std::invalid_argument("render_prompt: empty question");
  std::string out;
  out.reserve(620 + question.size());
  out +=
      "Answer the given question. You must conduct reasoning inside <think> and "
      "</think> first every time you get new information. After reasoning, if you "
      "find you lack some knowledge, you can call a search engine by <search> query "
      "</search>, and it will return the top searched results between <information> "
      "and </information>. You can search as many times as you want. If you find no "
      "further external knowledge needed, you can directly provide the answer inside "
      "<answer> and </answer> without detailed illustrations. For example, <answer> "
      "xxx </answer>. Question: ";
  out += question;
  return out;
}

std::string render_trajectory(const ParsedTrajectory& t) {
  std::size_t answers = 0;
  for (const Step& s : t.steps)
    if (!s.is_search()) ++answers;
  if (answers > 1)
    throw std::invalid_argument("render_trajectory: more than one answer step");

  std::string out;
  for (const Step& s : t.steps) {
    if (s.think) {
      out += "<think>";
      out += *s.think;
      out += "</think>";
    }
    if (const SearchAction* a = s.search()) {
      out += "<search>";
      out += a->raw_query;
      out += "</search>";
      if (s.observation) {
        out += "<information>";
        out += *s.observation;
        out += "</information>";
      }
    } else {
      out += "<answer>";
      out += s.answer()->answer_text;
      out += "</answer>";
    }
  }
  return out;
}

std::string_view to_string(TagIssueKind kind) {
  switch (kind) {
    case TagIssueKind::UnclosedTag: return "UnclosedTag";
    case TagIssueKind::CloseWithoutOpen: return "CloseWithoutOpen";
    case TagIssueKind::InterleavedTags: return "InterleavedTags";
    case TagIssueKind::EmptyQuery: return "EmptyQuery";
    case TagIssueKind::PunctuationOnlyQuery: return "PunctuationOnlyQuery";
    case TagIssueKind::MultipleAnswers: return "MultipleAnswers";
    case TagIssueKind::ContentAfterAnswer: return "ContentAfterAnswer";
  }
  return "Unknown";
}

std::string_view to_string(TagKind kind) {
  switch (kind) {
    case TagKind::Think: return "think";
    case TagKind::Search: return "search";
    case TagKind::Information: return "information";
    case TagKind::Answer: return "answer";
  }
  return "unknown";
}

}  // namespace searchlab
