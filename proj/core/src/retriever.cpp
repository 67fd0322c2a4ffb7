#include "searchlab/retriever.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace searchlab {

namespace {

bool is_alnum_ascii(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char lower_ascii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (is_alnum_ascii(c)) {
      cur.push_back(lower_ascii(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

RetrieverIndex RetrieverIndex::build(const Corpus& corpus) {
  if (corpus.docs.empty())
    throw std::invalid_argument("RetrieverIndex: empty corpus");

  RetrieverIndex idx;
  idx.docs_ = corpus.docs;
  std::sort(idx.docs_.begin(), idx.docs_.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < idx.docs_.size(); ++i) {
    if (idx.docs_[i].id == idx.docs_[i - 1].id)
      throw std::invalid_argument("RetrieverIndex: duplicate document id '" +
                                  idx.docs_[i].id + "'");
  }

  // term -> (doc, tf); std::map keeps terms lexicographically sorted, which
  // pins the accumulation order for norms and scores.
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> table;
  for (std::size_t d = 0; d < idx.docs_.size(); ++d) {
    std::map<std::string, std::size_t> tf;
    for (std::string& tok : tokenize(idx.docs_[d].title + " " + idx.docs_[d].body))
      ++tf[std::move(tok)];
    for (auto& [term, count] : tf) table[term].emplace_back(d, count);
  }

  const double n = static_cast<double>(idx.docs_.size());
  idx.doc_norms_.assign(idx.docs_.size(), 0.0);
  idx.terms_.reserve(table.size());
  for (auto& [term, posts] : table) {
    TermEntry entry;
    entry.term = term;
    entry.idf = std::log(1.0 + n / static_cast<double>(posts.size()));
    entry.postings.reserve(posts.size());
    for (auto& [doc, tf] : posts) {
      double w = 1.0 + std::log(static_cast<double>(tf));
      entry.postings.push_back(Posting{doc, w});
      double comp = w * entry.idf;
      idx.doc_norms_[doc] += comp * comp;
    }
    idx.postings_total_ += posts.size();
    idx.terms_.push_back(std::move(entry));
  }
  for (double& nn : idx.doc_norms_) nn = std::sqrt(nn);
  return idx;
}

const RetrieverIndex::TermEntry* RetrieverIndex::find_term(std::string_view term) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), term,
      [](const TermEntry& e, std::string_view t) { return e.term < t; });
  if (it == terms_.end() || it->term != term) return nullptr;
  return &*it;
}

std::vector<const Document*> RetrieverIndex::retrieve(std::string_view query,
                                                      int k) const {
  if (k < 0) throw std::invalid_argument("retrieve: negative k");
  if (k == 0) return {};

  // Unique query terms with tf, lexicographic order (std::map).
  std::map<std::string, std::size_t> qtf;
  for (std::string& tok : tokenize(query)) ++qtf[std::move(tok)];
  if (qtf.empty()) return {};

  std::vector<double> dots(docs_.size(), 0.0);
  double qnorm2 = 0.0;
  for (const auto& [term, tf] : qtf) {
    const TermEntry* entry = find_term(term);
    if (!entry) continue;  // out-of-vocabulary terms are dropped
    double qw = (1.0 + std::log(static_cast<double>(tf))) * entry->idf;
    qnorm2 += qw * qw;
    for (const Posting& p : entry->postings)
      dots[p.doc] += qw * (p.weight * entry->idf);
  }
  const double qnorm = std::sqrt(qnorm2);

  // Every document is ranked; docs sharing no term with the query score 0 and
  // sort behind any positive match, ordered among themselves by id.
  struct Hit {
    double score;
    std::size_t doc;
  };
  std::vector<Hit> hits;
  hits.reserve(docs_.size());
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    double score = dots[d] > 0.0 ? dots[d] / (doc_norms_[d] * qnorm) : 0.0;
    hits.push_back(Hit{score, d});
  }
  std::sort(hits.begin(), hits.end(), [this](const Hit& a, const Hit& b) {
    if (a.score != b.score) return a.score > b.score;
    return docs_[a.doc].id < docs_[b.doc].id;
  });
  if (hits.size() > static_cast<std::size_t>(k)) hits.resize(static_cast<std::size_t>(k));

  std::vector<const Document*> out;
  out.reserve(hits.size());
  for (const Hit& h : hits) out.push_back(&docs_[h.doc]);
  return out;
}

}  // namespace searchlab
