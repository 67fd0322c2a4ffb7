#include <doctest.h>

#include <string>

#include "reward_cases.hpp"
#include "searchlab/rewards.hpp"

using namespace searchlab;
namespace ts = searchlab::testsupport;

TEST_CASE("the shared reward case table passes and is large enough") {
  ts::RewardCaseReport report = ts::run_reward_cases();
  CHECK(report.total >= 40);
  std::string detail;
  for (const std::string& f : report.failures) detail += f + "; ";
  INFO("failing cases: " << detail);
  CHECK(report.failed == 0);
}

TEST_CASE("normalization is idempotent") {
  for (const char* s :
       {"Paris.", " The  Big Apple ", "A B.C", "U.S.A.", "", "mIxEd CaSe!"}) {
    std::string once = normalize_answer(s);
    CHECK(normalize_answer(once) == once);
  }
}

TEST_CASE("recall uses normalized substring containment across joined bodies") {
  // The join newline must prevent token fusion across document boundaries.
  ParsedTrajectory t;
  Step s1;
  s1.action = SearchAction{"q1", "q1"};
  Step s2;
  s2.action = SearchAction{"q2", "q2"};
  t.steps = {s1, s2};
  std::vector<std::vector<Document>> per_step{
      {Document{"a", "t", "ends with Par"}},
      {Document{"b", "t", "is how it starts"}},
  };
  RecalledInfo info = aggregate_recalled(t, per_step);
  AnswerSet gold;
  gold.candidates = {"Paris"};
  CHECK(reward_recall(info, gold) == 0);
}
