#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace searchlab {

struct Document {
  std::string id;
  std::string title;
  std::string body;
};

struct Corpus {
  std::vector<Document> docs;
};

// Casefold, split on non-alphanumeric ASCII. Deterministic, locale-free.
std::vector<std::string> tokenize(std::string_view text);

// Deterministic lexical index. Scoring is TF-IDF cosine:
//   term weight = (1 + ln tf) * ln(1 + N/df)
// over tokenized "title body" text, query weighted the same way against
// corpus statistics. Accumulation order is pinned (terms sorted
// lexicographically) so rankings are bit-reproducible.
class RetrieverIndex {
 public:
  // Validates and indexes the corpus. Throws std::invalid_argument on an
  // empty corpus or a duplicate document id. Documents are held sorted by id.
  static RetrieverIndex build(const Corpus& corpus);

  // Top-k by (score desc, id asc); zero-score documents still rank, so this
  // returns exactly min(k, corpus size) documents. Queries with no tokens
  // (empty or punctuation-only) return nothing. Throws std::invalid_argument
  // if k < 0.
  std::vector<const Document*> retrieve(std::string_view query, int k) const;

  std::size_t doc_count() const { return docs_.size(); }
  std::size_t term_count() const { return terms_.size(); }
  std::size_t posting_count() const { return postings_total_; }
  const std::vector<Document>& documents() const { return docs_; }

 private:
  struct Posting {
    std::size_t doc;
    double weight;  // 1 + ln tf, idf applied at query time
  };
  struct TermEntry {
    std::string term;
    double idf;
    std::vector<Posting> postings;
  };

  RetrieverIndex() = default;

  const TermEntry* find_term(std::string_view term) const;

  std::vector<Document> docs_;      // sorted by id
  std::vector<TermEntry> terms_;    // sorted by term
  std::vector<double> doc_norms_;
  std::size_t postings_total_ = 0;
};

}  // namespace searchlab
