#include <doctest.h>

#include <json.hpp>
#include <string>

#include "searchlab/errors.hpp"
#include "searchlab/scoring.hpp"

using namespace searchlab;

namespace {

const char* kCleanBody = R"({
  "trajectory": "<think>find it</think><search>capital France</search><information>Paris is the capital.</information><answer>Paris</answer>",
  "answers": ["Paris"],
  "spec": {"em": 0.5, "recall": 0.5},
  "retrieved": [["Paris is the capital of France."]]
})";

}  // namespace

TEST_CASE("score requests parse strictly") {
  ScoreRequest req = parse_score_request(kCleanBody);
  CHECK(req.answers.candidates == std::vector<std::string>{"Paris"});
  CHECK(req.spec.weights.at("em") == 0.5);
  CHECK(req.spec.weights.at("recall") == 0.5);
  REQUIRE(req.retrieved.has_value());
  REQUIRE(req.retrieved->size() == 1);
  CHECK(req.retrieved->at(0)[0] == "Paris is the capital of France.");

  SUBCASE("retrieved is optional") {
    ScoreRequest slim = parse_score_request(
        R"({"trajectory": "<answer>x</answer>", "answers": ["x"], "spec": {"em": 1.0}})");
    CHECK(!slim.retrieved.has_value());
  }

  SUBCASE("violations throw with a description") {
    // not json at all
    CHECK_THROWS_AS(parse_score_request("{nope"), DataError);
    // top level must be an object
    CHECK_THROWS_AS(parse_score_request("[1,2]"), DataError);
    // unknown top-level key
    CHECK_THROWS_AS(parse_score_request(
                        R"({"trajectory": "t", "answers": ["a"], "spec": {"em": 1.0}, "mode": "x"})"),
                    DataError);
    // unknown component name
    CHECK_THROWS_AS(parse_score_request(
                        R"({"trajectory": "t", "answers": ["a"], "spec": {"f1": 1.0}})"),
                    DataError);
    // non-finite weight
    CHECK_THROWS_AS(parse_score_request(
                        R"({"trajectory": "t", "answers": ["a"], "spec": {"em": null}})"),
                    DataError);
    // empty answers
    CHECK_THROWS_AS(parse_score_request(
                        R"({"trajectory": "t", "answers": [], "spec": {"em": 1.0}})"),
                    DataError);
    // missing trajectory
    CHECK_THROWS_AS(parse_score_request(R"({"answers": ["a"], "spec": {"em": 1.0}})"),
                    DataError);
    // retrieved rows must be arrays of strings
    CHECK_THROWS_AS(parse_score_request(
                        R"({"trajectory": "t", "answers": ["a"], "spec": {"em": 1.0}, "retrieved": [[3]]})"),
                    DataError);
  }
}

TEST_CASE("scoring composes parse, detection, and rewards") {
  ScoreOutcome out = score(parse_score_request(kCleanBody));
  CHECK(out.breakdown.em == 1.0);
  CHECK(out.breakdown.recall == 1.0);
  CHECK(out.breakdown.penalty == 0.0);
  CHECK(out.breakdown.total == 1.0);
  CHECK(!out.flags.any());
  CHECK(out.issues.empty());

  SUBCASE("malformed trajectories are data, not errors") {
    ScoreRequest req = parse_score_request(
        R"({"trajectory": "<search>dangling", "answers": ["Paris"], "spec": {"em": 1.0}})");
    ScoreOutcome bad = score(req);
    CHECK(bad.flags.invalid_searches);
    CHECK(!bad.issues.empty());
    CHECK(bad.breakdown.em == 0.0);
    CHECK(bad.breakdown.total == 0.0);
  }

  SUBCASE("penalty applies once whenever any flag is set") {
    ScoreRequest req = parse_score_request(
        R"({"trajectory": "<answer>Paris</answer>", "answers": ["Paris"], "spec": {"em": 0.5, "penalty": 1.0}})");
    ScoreOutcome out2 = score(req);
    CHECK(out2.flags.no_search);
    CHECK(out2.breakdown.penalty == -0.2);
    CHECK(out2.breakdown.em == 1.0);
    CHECK(out2.breakdown.total == doctest::Approx(0.3));
  }

  SUBCASE("recall and acc require the retrieval record") {
    ScoreRequest req = parse_score_request(
        R"({"trajectory": "<search>q</search><answer>Paris</answer>", "answers": ["Paris"], "spec": {"recall": 1.0}})");
    CHECK_THROWS_AS(score(req), DataError);

    ScoreRequest em_only = parse_score_request(
        R"({"trajectory": "<search>q</search><answer>Paris</answer>", "answers": ["Paris"], "spec": {"em": 1.0}})");
    ScoreOutcome ok = score(em_only);
    CHECK(!ok.breakdown.recall.has_value());
    CHECK(!ok.breakdown.acc.has_value());
    CHECK(ok.breakdown.em == 1.0);
  }

  SUBCASE("the record must align with the trajectory's search count") {
    ScoreRequest req = parse_score_request(
        R"({"trajectory": "<search>q</search><answer>Paris</answer>", "answers": ["Paris"], "spec": {"em": 1.0}, "retrieved": [["a"], ["b"]]})");
    CHECK_THROWS_AS(score(req), DataError);
  }

  SUBCASE("acc counts answer-bearing retrieved docs") {
    ScoreRequest req = parse_score_request(
        R"({"trajectory": "<search>one</search><search>two</search><answer>Paris</answer>",
            "answers": ["Paris"],
            "spec": {"acc": 1.0},
            "retrieved": [["Paris stands on the Seine.", "nothing here"], ["also nothing"]]})");
    ScoreOutcome out3 = score(req);
    CHECK(out3.breakdown.acc == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("score responses serialize the full outcome") {
  ScoreOutcome out = score(parse_score_request(kCleanBody));
  std::string body = score_response_json(out);
  auto j = nlohmann::json::parse(body);
  CHECK(j["version"] == 1);
  CHECK(j["reward"]["em"] == 1.0);
  CHECK(j["reward"]["recall"] == 1.0);
  // a retrieval record makes acc computable even when the spec skips it
  CHECK(j["reward"]["acc"] == 1.0);
  CHECK(j["reward"]["penalty"] == 0.0);
  CHECK(j["reward"]["total"] == 1.0);
  CHECK(j["flags"]["no_search"] == false);
  CHECK(j["flags"]["duplicate_queries"] == false);
  CHECK(j["flags"]["invalid_searches"] == false);
  CHECK(j["category"] == "Effective Search");
  CHECK(j["issues"].is_array());
  CHECK(j["issues"].empty());
  CHECK(score_response_json(out) == body);

  SUBCASE("issues carry kind and byte span") {
    ScoreOutcome bad = score(parse_score_request(
        R"({"trajectory": "<search>dangling", "answers": ["x"], "spec": {"em": 1.0}})"));
    auto jb = nlohmann::json::parse(score_response_json(bad));
    REQUIRE(!jb["issues"].empty());
    CHECK(jb["issues"][0].contains("kind"));
    CHECK(jb["issues"][0].contains("begin"));
    CHECK(jb["issues"][0].contains("end"));
    CHECK(jb["issues"][0]["kind"].is_string());
  }

  SUBCASE("error responses carry the version and message") {
    auto je = nlohmann::json::parse(error_response_json("bad request"));
    CHECK(je["version"] == 1);
    CHECK(je["error"] == "bad request");
  }
}
