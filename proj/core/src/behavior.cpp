#include "searchlab/behavior.hpp"

#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace searchlab {

namespace {

bool is_invalid_kind(TagIssueKind kind) {
  switch (kind) {
    case TagIssueKind::UnclosedTag:
    case TagIssueKind::CloseWithoutOpen:
    case TagIssueKind::InterleavedTags:
    case TagIssueKind::EmptyQuery:
    case TagIssueKind::PunctuationOnlyQuery:
      return true;
    case TagIssueKind::MultipleAnswers:
    case TagIssueKind::ContentAfterAnswer:
      return false;
  }
  return false;
}

bool is_structural_kind(TagIssueKind kind) {
  return kind == TagIssueKind::UnclosedTag || kind == TagIssueKind::CloseWithoutOpen ||
         kind == TagIssueKind::InterleavedTags;
}

void append_mean(std::string& out, const std::optional<double>& v) {
  if (!v.has_value()) return;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  out += buf;
}

// category_index packs flags as bits; labels list singletons before pairs.
constexpr std::array<std::size_t, 8> kIndexToLabelPos{0, 1, 2, 4, 3, 5, 6, 7};

}  // namespace

BehaviorFlags detect_behaviors(const ParsedTrajectory& t,
                               const std::vector<TagIssue>& issues) {
  BehaviorFlags flags;

  bool attempted = t.search_count() > 0;
  for (const TagIssue& issue : issues) {
    if (is_invalid_kind(issue.kind)) flags.invalid_searches = true;
    if (issue.tag == TagKind::Search && is_structural_kind(issue.kind))
      attempted = true;
  }
  flags.no_search = !attempted;

  std::unordered_set<std::string_view> seen;
  for (const Step& s : t.steps) {
    if (const SearchAction* a = s.search()) {
      if (!seen.insert(a->normalized_query).second) {
        flags.duplicate_queries = true;
        break;
      }
    }
  }
  return flags;
}

std::size_t category_index(const BehaviorFlags& flags) {
  return (flags.no_search ? 1u : 0u) + (flags.duplicate_queries ? 2u : 0u) +
         (flags.invalid_searches ? 4u : 0u);
}

std::string_view categorize(const BehaviorFlags& flags) {
  return kCategoryLabels[kIndexToLabelPos[category_index(flags)]];
}

CohortStats cohort_report(const std::vector<BehaviorRecord>& records) {
  if (records.empty())
    throw std::invalid_argument("cohort_report: no records");

  CohortStats stats;
  stats.total = records.size();

  struct Acc {
    std::size_t n = 0;
    std::size_t recall_sum = 0;
    std::size_t em_sum = 0;
  };
  std::array<Acc, 8> by_label{};  // indexed by label order
  Acc clean, flagged, all;
  std::array<std::size_t, 8> fail_counts{};
  std::size_t failures = 0;

  for (const BehaviorRecord& r : records) {
    std::size_t label = kIndexToLabelPos[category_index(r.flags)];
    Acc& a = by_label[label];
    ++a.n;
    a.recall_sum += static_cast<std::size_t>(r.recall);
    a.em_sum += static_cast<std::size_t>(r.em);
    Acc& cohort = r.flags.any() ? flagged : clean;
    ++cohort.n;
    cohort.recall_sum += static_cast<std::size_t>(r.recall);
    cohort.em_sum += static_cast<std::size_t>(r.em);
    ++all.n;
    all.recall_sum += static_cast<std::size_t>(r.recall);
    all.em_sum += static_cast<std::size_t>(r.em);
    if (r.recall == 0) {
      ++failures;
      ++fail_counts[label];
    }
  }

  auto fill = [](const Acc& a, CohortRow& row) {
    row.count = a.n;
    if (a.n > 0) {
      row.mean_recall = static_cast<double>(a.recall_sum) / static_cast<double>(a.n);
      row.mean_em = static_cast<double>(a.em_sum) / static_cast<double>(a.n);
    }
  };

  for (std::size_t i = 0; i < 8; ++i) {
    CategoryRow& row = stats.per_category[i];
    row.label = kCategoryLabels[i];
    row.count = by_label[i].n;
    if (by_label[i].n > 0) {
      row.mean_recall = static_cast<double>(by_label[i].recall_sum) /
                        static_cast<double>(by_label[i].n);
      row.mean_em = static_cast<double>(by_label[i].em_sum) /
                    static_cast<double>(by_label[i].n);
    }
  }
  fill(clean, stats.clean);
  fill(flagged, stats.flagged);
  stats.mean_recall = static_cast<double>(all.recall_sum) / static_cast<double>(all.n);
  stats.mean_em = static_cast<double>(all.em_sum) / static_cast<double>(all.n);
  stats.deficient_rate =
      static_cast<double>(flagged.n) / static_cast<double>(stats.total);
  stats.recall_failures = failures;
  for (std::size_t i = 0; i < 8; ++i) {
    RecallFailureRow& row = stats.recall_failure_composition[i];
    row.label = kCategoryLabels[i];
    row.count = fail_counts[i];
    row.fraction = failures == 0 ? 0.0
                                 : static_cast<double>(fail_counts[i]) /
                                       static_cast<double>(failures);
  }
  return stats;
}

std::string cohorts_csv(const CohortStats& stats) {
  std::string out = "category,count,mean_recall,mean_em\n";
  for (const CategoryRow& row : stats.per_category) {
    out += row.label;
    out += ',';
    out += std::to_string(row.count);
    out += ',';
    append_mean(out, row.mean_recall);
    out += ',';
    append_mean(out, row.mean_em);
    out += '\n';
  }
  out += "All,";
  out += std::to_string(stats.total);
  out += ',';
  append_mean(out, stats.mean_recall);
  out += ',';
  append_mean(out, stats.mean_em);
  out += '\n';
  return out;
}

std::string recall_failures_csv(const CohortStats& stats) {
  std::string out = "category,count,fraction\n";
  char buf[32];
  for (const RecallFailureRow& row : stats.recall_failure_composition) {
    out += row.label;
    out += ',';
    out += std::to_string(row.count);
    out += ',';
    std::snprintf(buf, sizeof(buf), "%.6f", row.fraction);
    out += buf;
    out += '\n';
  }
  out += "All,";
  out += std::to_string(stats.recall_failures);
  out += stats.recall_failures == 0 ? ",0.000000\n" : ",1.000000\n";
  return out;
}

}  // namespace searchlab
