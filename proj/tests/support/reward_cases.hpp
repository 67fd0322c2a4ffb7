#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace searchlab::testsupport {

struct RewardCaseReport {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // case names that did not match
};

// Fixed table of reward-function cases with hand-computed expectations:
// answer normalization, exact match, recall, retrieval accuracy, penalty,
// and the weighted composite (including its error contract). Shared between
// the unit suite and the acceptance gate.
RewardCaseReport run_reward_cases();

}  // namespace searchlab::testsupport
