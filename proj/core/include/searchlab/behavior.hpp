#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "searchlab/trajectory.hpp"

namespace searchlab {

// Deficient search behaviors. A trajectory can exhibit any subset; the empty
// subset is effective search.
struct BehaviorFlags {
  bool no_search = false;          // zero search attempts of any kind
  bool duplicate_queries = false;  // >= 2 searches share a normalized query
  bool invalid_searches = false;   // malformed tags or degenerate queries

  bool any() const { return no_search || duplicate_queries || invalid_searches; }
  bool operator==(const BehaviorFlags&) const = default;
};

// Flags from a parsed trajectory plus its parse issues.
//   - invalid_searches: any issue of kind UnclosedTag, CloseWithoutOpen,
//     InterleavedTags, EmptyQuery, or PunctuationOnlyQuery.
//   - no_search: no SearchAction step and no structural issue on a search tag.
//     A trajectory whose only searches are broken attempted retrieval, so it
//     is invalid_searches, not no_search.
//   - duplicate_queries: two searches whose normalized queries are equal
//     (punctuation differences keep queries distinct).
BehaviorFlags detect_behaviors(const ParsedTrajectory& t,
                               const std::vector<TagIssue>& issues);

// Canonical category order; index = no_search*1 + duplicate*2 + invalid*4.
inline constexpr std::array<std::string_view, 8> kCategoryLabels{
    "Effective Search",
    "No Search",
    "Duplicate Queries",
    "Invalid Searches",
    "NoSearch+Duplicate",
    "NoSearch+Invalid",
    "Duplicate+Invalid",
    "NoSearch+Duplicate+Invalid",
};

// Bijective over the 8 flag subsets.
std::string_view categorize(const BehaviorFlags& flags);
std::size_t category_index(const BehaviorFlags& flags);

struct BehaviorRecord {
  BehaviorFlags flags;
  int recall = 0;  // binary reward values for the same trajectory
  int em = 0;
};

struct CategoryRow {
  std::string_view label;
  std::size_t count = 0;
  std::optional<double> mean_recall;  // empty categories have no mean
  std::optional<double> mean_em;
};

struct CohortRow {
  std::size_t count = 0;
  std::optional<double> mean_recall;
  std::optional<double> mean_em;
};

struct RecallFailureRow {
  std::string_view label;
  std::size_t count = 0;
  double fraction = 0.0;  // of all recall=0 records; 0 when there are none
};

struct CohortStats {
  std::size_t total = 0;
  double mean_recall = 0.0;
  double mean_em = 0.0;
  std::array<CategoryRow, 8> per_category{};
  CohortRow clean;    // no flag set
  CohortRow flagged;  // at least one flag
  double deficient_rate = 0.0;
  std::size_t recall_failures = 0;
  std::array<RecallFailureRow, 8> recall_failure_composition{};
};

// Aggregates per-category and clean-vs-flagged cohorts plus the category
// composition of recall failures. Throws std::invalid_argument on no records.
CohortStats cohort_report(const std::vector<BehaviorRecord>& records);

// "category,count,mean_recall,mean_em" rows in canonical order, then an "All"
// summary row. Means use 6 decimals; empty categories leave means blank.
// Byte-stable for identical stats.
std::string cohorts_csv(const CohortStats& stats);

// "category,count,fraction" rows over recall failures, then an "All" row.
std::string recall_failures_csv(const CohortStats& stats);

}  // namespace searchlab
