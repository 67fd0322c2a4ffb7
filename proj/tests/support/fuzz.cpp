#include "fuzz.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <string_view>
#include <vector>

namespace searchlab::testsupport {

namespace {

// ---- reference detector -----------------------------------------------

struct RefTag {
  std::string_view text;
  TagKind kind;
  bool close;
};

constexpr std::array<RefTag, 8> kRefTags{{
    {"<think>", TagKind::Think, false},
    {"</think>", TagKind::Think, true},
    {"<search>", TagKind::Search, false},
    {"</search>", TagKind::Search, true},
    {"<information>", TagKind::Information, false},
    {"</information>", TagKind::Information, true},
    {"<answer>", TagKind::Answer, false},
    {"</answer>", TagKind::Answer, true},
}};

struct RefTok {
  TagKind kind;
  bool close;
  std::size_t begin;
  std::size_t end;
};

std::vector<RefTok> ref_scan(std::string_view raw) {
  std::vector<RefTok> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '<') {
      ++i;
      continue;
    }
    bool hit = false;
    for (const RefTag& tag : kRefTags) {
      if (raw.substr(i, tag.text.size()) == tag.text) {
        out.push_back(RefTok{tag.kind, tag.close, i, i + tag.text.size()});
        i += tag.text.size();
        hit = true;
        break;
      }
    }
    if (!hit) ++i;
  }
  return out;
}

bool ref_is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool ref_is_punct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return (u >= '!' && u <= '/') || (u >= ':' && u <= '@') || (u >= '[' && u <= '`') ||
         (u >= '{' && u <= '~');
}

std::string ref_normalize(std::string_view q) {
  std::string out;
  bool gap = false;
  for (char c : q) {
    if (ref_is_ws(c)) {
      gap = !out.empty();
      continue;
    }
    if (gap) {
      out.push_back(' ');
      gap = false;
    }
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

// ---- generator vocabulary ----------------------------------------------

constexpr std::array<std::string_view, 6> kQueryPool{
    "capital of France",     "einstein birthplace",   "tallest mountain peak",
    "river through cairo",   "oldest university town", "deepest ocean trench",
};

constexpr std::array<std::string_view, 4> kThinkPool{
    "I should look this up",
    "the chain needs one more hop",
    "re-checking what the snippet said",
    "this answer looks complete now",
};

constexpr std::array<std::string_view, 4> kInfoPool{
    "(doc a) Verno was born in Kastel.",
    "(doc b) The capital of Kastel is Ryme. (doc c) unrelated filler",
    "(doc d) nothing useful came back for this query",
    "(doc e) Ryme sits on the northern coast.",
};

constexpr std::array<std::string_view, 4> kAnswerPool{
    "Ryme",
    "unknown",
    " Kastel ",
    "the Ryme",
};

// Plain-text noise: near-miss tag spellings are included on purpose; none
// contains a real tag literal.
constexpr std::array<std::string_view, 6> kNoisePool{
    " ",
    "\n  ",
    " loose words between blocks ",
    " stray > angle < bracket ",
    " <notatag> ",
    " < search> almost a tag <Answer> ",
};

template <std::size_t N>
std::string_view pick(const std::array<std::string_view, N>& pool, Rng& rng) {
  return pool[static_cast<std::size_t>(rng_below(rng, N))];
}

bool chance(Rng& rng, double p) { return rng_uniform(rng) < p; }

// Case/whitespace mangling that survives query normalization.
std::string mangle_query(std::string_view q, Rng& rng) {
  std::string out;
  if (chance(rng, 0.4)) out += "  ";
  for (char c : q) {
    if (c == ' ' && chance(rng, 0.4)) out += ' ';
    if (c >= 'a' && c <= 'z' && chance(rng, 0.25))
      out.push_back(static_cast<char>(c - 'a' + 'A'));
    else
      out.push_back(c);
  }
  if (chance(rng, 0.4)) out += " \n";
  return out;
}

// ---- piece model ---------------------------------------------------------

// A generated text is a flat list of pieces: tag tokens and payload text.
struct Piece {
  // -1 = plain text, otherwise index into kRefTags.
  int tag = -1;
  std::string text;
};

Piece open_tag(TagKind kind) {
  for (std::size_t i = 0; i < kRefTags.size(); ++i)
    if (kRefTags[i].kind == kind && !kRefTags[i].close)
      return Piece{static_cast<int>(i), std::string(kRefTags[i].text)};
  return Piece{};
}

Piece close_tag(TagKind kind) {
  for (std::size_t i = 0; i < kRefTags.size(); ++i)
    if (kRefTags[i].kind == kind && kRefTags[i].close)
      return Piece{static_cast<int>(i), std::string(kRefTags[i].text)};
  return Piece{};
}

Piece text_piece(std::string_view text) { return Piece{-1, std::string(text)}; }

std::string serialize(const std::vector<Piece>& pieces) {
  std::string out;
  for (const Piece& p : pieces) out += p.text;
  return out;
}

bool piece_is(const Piece& p, TagKind kind, bool close) {
  return p.tag >= 0 && kRefTags[static_cast<std::size_t>(p.tag)].kind == kind &&
         kRefTags[static_cast<std::size_t>(p.tag)].close == close;
}

void emit_block(std::vector<Piece>& out, TagKind kind, std::string_view payload) {
  out.push_back(open_tag(kind));
  out.push_back(text_piece(payload));
  out.push_back(close_tag(kind));
}

// Well-formed block stream shared by both raw generators. Duplicate and
// degenerate queries are planted with fixed probabilities; noise optional.
std::vector<Piece> build_blocks(Rng& rng, bool with_noise) {
  std::vector<Piece> out;
  std::vector<std::string> used_queries;

  auto noise = [&] {
    if (with_noise && chance(rng, 0.35)) out.push_back(text_piece(pick(kNoisePool, rng)));
  };

  noise();
  const int searches = static_cast<int>(rng_below(rng, 5));  // 0..4
  for (int s = 0; s < searches; ++s) {
    if (chance(rng, 0.5)) {
      emit_block(out, TagKind::Think, pick(kThinkPool, rng));
      noise();
    }
    std::string q;
    if (!used_queries.empty() && chance(rng, 0.3)) {
      q = mangle_query(used_queries[rng_below(rng, used_queries.size())], rng);
    } else if (chance(rng, 0.12)) {
      q = chance(rng, 0.5) ? "" : "   ";
    } else if (chance(rng, 0.12)) {
      q = " ?!. ,, ";
    } else {
      q = std::string(pick(kQueryPool, rng));
      used_queries.push_back(q);
    }
    emit_block(out, TagKind::Search, q);
    if (chance(rng, 0.7)) emit_block(out, TagKind::Information, pick(kInfoPool, rng));
    noise();
  }
  if (chance(rng, 0.7)) {
    if (chance(rng, 0.4)) emit_block(out, TagKind::Think, pick(kThinkPool, rng));
    emit_block(out, TagKind::Answer, pick(kAnswerPool, rng));
    if (chance(rng, 0.15)) emit_block(out, TagKind::Answer, pick(kAnswerPool, rng));
    noise();
  }
  return out;
}

constexpr std::array<TagKind, 4> kKinds{TagKind::Think, TagKind::Search,
                                        TagKind::Information, TagKind::Answer};

std::atomic<unsigned> g_unique{0};

std::string unique_payload(const char* stem) {
  return std::string(stem) + " u" + std::to_string(g_unique.fetch_add(1));
}

}  // namespace

BehaviorFlags reference_flags(std::string_view raw) {
  const std::vector<RefTok> toks = ref_scan(raw);

  bool structural_ok = toks.size() % 2 == 0;
  for (std::size_t m = 0; structural_ok && 2 * m + 1 < toks.size(); ++m) {
    const RefTok& a = toks[2 * m];
    const RefTok& b = toks[2 * m + 1];
    structural_ok = !a.close && b.close && a.kind == b.kind;
  }

  bool any_search_token = false;
  for (const RefTok& t : toks)
    if (t.kind == TagKind::Search) any_search_token = true;

  bool bad_query = false;
  bool dup = false;
  std::vector<std::string> queries;
  for (std::size_t i = 0; i + 1 < toks.size();) {
    if (!toks[i].close && toks[i + 1].close && toks[i].kind == toks[i + 1].kind) {
      if (toks[i].kind == TagKind::Search) {
        std::string_view content = raw.substr(toks[i].end, toks[i + 1].begin - toks[i].end);
        if (std::all_of(content.begin(), content.end(),
                        [](char c) { return ref_is_ws(c) || ref_is_punct(c); }))
          bad_query = true;
        std::string norm = ref_normalize(content);
        for (const std::string& q : queries)
          if (q == norm) dup = true;
        queries.push_back(std::move(norm));
      }
      i += 2;
    } else {
      ++i;
    }
  }

  BehaviorFlags flags;
  flags.no_search = !any_search_token;
  flags.invalid_searches = !structural_ok || bad_query;
  flags.duplicate_queries = dup;
  return flags;
}

ParsedTrajectory fuzz_structured(Rng& rng) {
  ParsedTrajectory t;
  t.question = "What is the capital of the birthplace of Verno?";

  std::vector<std::string> used_queries;
  const int searches = static_cast<int>(rng_below(rng, 5));
  for (int i = 0; i < searches; ++i) {
    Step s;
    if (chance(rng, 0.5)) s.think = std::string(pick(kThinkPool, rng));
    SearchAction act;
    if (!used_queries.empty() && chance(rng, 0.3)) {
      act.raw_query = mangle_query(used_queries[rng_below(rng, used_queries.size())], rng);
    } else if (chance(rng, 0.1)) {
      act.raw_query = chance(rng, 0.5) ? "" : " ?! ";
    } else {
      act.raw_query = std::string(pick(kQueryPool, rng));
      used_queries.push_back(act.raw_query);
    }
    act.normalized_query = normalize_query(act.raw_query);
    s.action = std::move(act);
    if (chance(rng, 0.7)) s.observation = std::string(pick(kInfoPool, rng));
    t.steps.push_back(std::move(s));
  }
  if (chance(rng, 0.6)) {
    Step s;
    if (chance(rng, 0.5)) s.think = std::string(pick(kThinkPool, rng));
    s.action = AnswerAction{std::string(pick(kAnswerPool, rng))};
    t.steps.push_back(std::move(s));
    t.final_answer = t.steps.back().answer()->answer_text;
  }
  return t;
}

std::string fuzz_well_formed(Rng& rng) { return serialize(build_blocks(rng, true)); }

std::string fuzz_malformed(Rng& rng) {
  std::vector<Piece> pieces = build_blocks(rng, true);

  // Guarantee at least one block to mutate.
  bool has_tag = false;
  for (const Piece& p : pieces) has_tag |= p.tag >= 0;
  if (!has_tag) emit_block(pieces, TagKind::Search, pick(kQueryPool, rng));

  // Optional degenerate-query mutation on an intact search block.
  if (chance(rng, 0.2)) {
    for (std::size_t i = 1; i + 1 < pieces.size(); ++i) {
      if (piece_is(pieces[i - 1], TagKind::Search, false) && pieces[i].tag == -1 &&
          piece_is(pieces[i + 1], TagKind::Search, true)) {
        pieces[i].text = chance(rng, 0.5) ? "" : " .?! ";
        break;
      }
    }
  }

  const auto kinds_present = [&] {
    std::vector<TagKind> present;
    for (TagKind k : kKinds)
      for (const Piece& p : pieces)
        if (piece_is(p, k, true)) {
          present.push_back(k);
          break;
        }
    return present;
  }();

  switch (rng_below(rng, 4)) {
    case 0: {  // delete the close of the last block of some kind
      if (!kinds_present.empty()) {
        TagKind kind = kinds_present[rng_below(rng, kinds_present.size())];
        for (std::size_t i = pieces.size(); i-- > 0;) {
          if (piece_is(pieces[i], kind, true)) {
            pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i));
            break;
          }
        }
        break;
      }
      [[fallthrough]];
    }
    case 1: {  // stray close at the very start
      TagKind kind = kKinds[rng_below(rng, kKinds.size())];
      pieces.insert(pieces.begin(), close_tag(kind));
      break;
    }
    case 2: {  // stray open at the very end
      TagKind kind = kKinds[rng_below(rng, kKinds.size())];
      pieces.push_back(open_tag(kind));
      pieces.push_back(text_piece(unique_payload("dangling")));
      break;
    }
    case 3: {  // cross-kind interleave appended at the end
      TagKind a = kKinds[rng_below(rng, kKinds.size())];
      TagKind b = a;
      while (b == a) b = kKinds[rng_below(rng, kKinds.size())];
      pieces.push_back(open_tag(a));
      pieces.push_back(text_piece(unique_payload("outer")));
      pieces.push_back(open_tag(b));
      pieces.push_back(text_piece(unique_payload("inner")));
      pieces.push_back(close_tag(a));
      pieces.push_back(text_piece(unique_payload("tail")));
      pieces.push_back(close_tag(b));
      break;
    }
  }
  return serialize(pieces);
}

}  // namespace searchlab::testsupport
