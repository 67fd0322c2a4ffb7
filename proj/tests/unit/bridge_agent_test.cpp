#include <doctest.h>

#include <string>

#include "searchlab/bridge_agent.hpp"
#include "searchlab/taskgen.hpp"

using namespace searchlab;

namespace {

const char* kTwoHopQ = "What is the capital of the birthplace of Verno?";

}  // namespace

TEST_CASE("beliefs parse the question shape") {
  BridgeBeliefs two(kTwoHopQ);
  CHECK(two.subject == "Verno");
  CHECK(two.two_hop);
  CHECK(!two.bridge_place.has_value());
  CHECK(!two.candidate_answer.has_value());

  BridgeBeliefs one("What is the capital of Kastel?");
  CHECK(one.subject == "Kastel");
  CHECK(!one.two_hop);
  // One-hop questions name the place, so the bridge is known immediately.
  REQUIRE(one.bridge_place.has_value());
  CHECK(*one.bridge_place == "Kastel");
}

TEST_CASE("observations feed the fact chain in order") {
  BridgeBeliefs b(kTwoHopQ);

  b.observe("(doc) The capital of Kastel is Ryme.");
  CHECK(!b.bridge_place.has_value());  // birthplace still unknown
  CHECK(!b.candidate_answer.has_value());

  b.observe("(doc) Verno was born in Kastel.");
  REQUIRE(b.bridge_place.has_value());
  CHECK(*b.bridge_place == "Kastel");
  CHECK(!b.candidate_answer.has_value());  // capital fact came before the bridge

  b.observe("(doc) The capital of Kastel is Ryme.");
  REQUIRE(b.candidate_answer.has_value());
  CHECK(*b.candidate_answer == "Ryme");

  b.observe("(doc) The capital of Kastel is Wrong.");
  CHECK(*b.candidate_answer == "Ryme");  // first finding wins

  CHECK(!b.observed_tokens.empty());
}

TEST_CASE("buckets encode turn and the two belief bits") {
  BridgeBeliefs b(kTwoHopQ);
  const int max_turns = 4;
  CHECK(agent_bucket_count(max_turns) == 20);
  CHECK(b.bucket(0, max_turns) == 0);
  CHECK(b.bucket(2, max_turns) == 8);
  CHECK(b.bucket(9, max_turns) == 16);   // clamped to max_turns
  CHECK(b.bucket(-1, max_turns) == 0);

  b.observe("Verno was born in Kastel.");
  CHECK(b.bucket(1, max_turns) == 4 + 2);
  b.observe("The capital of Kastel is Ryme.");
  CHECK(b.bucket(1, max_turns) == 4 + 2 + 1);
}

TEST_CASE("realized actions reflect the beliefs") {
  Rng rng(1);
  BridgeBeliefs b(kTwoHopQ);

  Action a = realize_action(AgentAction::SearchBirthplace, b, rng);
  CHECK(std::get<SearchAction>(a).raw_query == "Verno born");

  // Capital search before the bridge is known degenerates to "?".
  Action q = realize_action(AgentAction::SearchCapital, b, rng);
  CHECK(std::get<SearchAction>(q).raw_query == "?");

  Action v = realize_action(AgentAction::SearchVerbatim, b, rng);
  CHECK(std::get<SearchAction>(v).raw_query == kTwoHopQ);

  Action unk = realize_action(AgentAction::AnswerBest, b, rng);
  CHECK(std::get<AnswerAction>(unk).answer_text == "unknown");

  Action rnd = realize_action(AgentAction::AnswerRandom, b, rng);
  CHECK(std::get<AnswerAction>(rnd).answer_text == "unknown");  // nothing observed

  b.observe("Verno was born in Kastel.");
  Action cap = realize_action(AgentAction::SearchCapital, b, rng);
  CHECK(std::get<SearchAction>(cap).raw_query == "capital of Kastel");

  b.observe("The capital of Kastel is Ryme.");
  Action best = realize_action(AgentAction::AnswerBest, b, rng);
  CHECK(std::get<AnswerAction>(best).answer_text == "Ryme");

  Rng r1(99), r2(99);
  Action t1 = realize_action(AgentAction::AnswerRandom, b, r1);
  Action t2 = realize_action(AgentAction::AnswerRandom, b, r2);
  CHECK(std::get<AnswerAction>(t1).answer_text ==
        std::get<AnswerAction>(t2).answer_text);
}

TEST_CASE("the action set solves a generated two-hop task by hand") {
  BridgeTaskSpec spec;
  spec.seed = 2024;
  spec.n_questions = 1;
  spec.hops = 2;
  spec.distractor_count = 0;
  BridgeTask task = generate_bridge_qa(spec);
  REQUIRE(task.corpus.docs.size() == 2);

  BridgeBeliefs b(task.items[0].question);
  // Feed both documents as if searches had retrieved them.
  b.observe("(" + task.corpus.docs[0].title + ") " + task.corpus.docs[0].body);
  b.observe("(" + task.corpus.docs[1].title + ") " + task.corpus.docs[1].body);
  b.observe("(" + task.corpus.docs[0].title + ") " + task.corpus.docs[0].body);
  REQUIRE(b.candidate_answer.has_value());
  CHECK(*b.candidate_answer == task.items[0].answers[0]);
}
