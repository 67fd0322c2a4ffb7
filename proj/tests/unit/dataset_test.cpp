#include <doctest.h>

#include <string>
#include <vector>

#include "searchlab/dataset.hpp"
#include "searchlab/errors.hpp"
#include "temp_dir.hpp"

using namespace searchlab;
using namespace searchlab::testsupport;

TEST_CASE("dataset files round-trip byte-stably") {
  TempDir dir("dataset_rt");
  auto path = dir.path() / "qa.jsonl";
  std::vector<QAItem> items = {
      {"What is the capital of France?", {"Paris", "paris city"}},
      {"Where was Ada born?", {"London"}},
  };
  save_dataset(items, path);
  auto loaded = load_dataset(path);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].question == items[0].question);
  CHECK(loaded[0].answers == items[0].answers);
  CHECK(loaded[1].answers == items[1].answers);

  std::string first = slurp(path);
  save_dataset(loaded, path);
  CHECK(slurp(path) == first);
  CHECK(first.find("\"question\"") < first.find("\"answers\""));
}

TEST_CASE("corpus files round-trip with fixed key order") {
  TempDir dir("corpus_rt");
  auto path = dir.path() / "corpus.jsonl";
  Corpus corpus;
  corpus.docs.push_back({"d1", "Paris", "Paris is the capital of France."});
  corpus.docs.push_back({"d2", "", "Untitled body."});
  save_corpus(corpus, path);
  Corpus loaded = load_corpus(path);
  REQUIRE(loaded.docs.size() == 2);
  CHECK(loaded.docs[0].id == "d1");
  CHECK(loaded.docs[0].title == "Paris");
  CHECK(loaded.docs[1].body == "Untitled body.");

  std::string first = slurp(path);
  save_corpus(loaded, path);
  CHECK(slurp(path) == first);
  std::size_t id_pos = first.find("\"id\"");
  CHECK(id_pos < first.find("\"title\""));
  CHECK(first.find("\"title\"") < first.find("\"text\""));
}

TEST_CASE("trajectory logs round-trip including malformed raw text") {
  TempDir dir("log_rt");
  auto path = dir.path() / "log.jsonl";
  std::vector<TrajectoryLogEntry> entries = {
      {"q1", "<think>plan</think><answer>Paris</answer>", {"Paris"}},
      {"q2", "<search>dangling", {"London", "Greater London"}},
  };
  save_trajectory_log(entries, path);
  auto loaded = load_trajectory_log(path);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].raw == entries[0].raw);
  CHECK(loaded[1].raw == "<search>dangling");
  CHECK(loaded[1].answers == entries[1].answers);
}

TEST_CASE("loaders skip blank lines and tolerate extra keys") {
  TempDir dir("dataset_lenient");
  auto path = dir.path() / "qa.jsonl";
  spit(path,
       "\n"
       "{\"question\": \"q1\", \"answers\": [\"a\"], \"split\": \"dev\"}\n"
       "\n"
       "   \n"
       "{\"question\": \"q2\", \"answers\": [\"b\", \"c\"]}\n");
  auto items = load_dataset(path);
  REQUIRE(items.size() == 2);
  CHECK(items[0].question == "q1");
  CHECK(items[1].answers == std::vector<std::string>{"b", "c"});
}

TEST_CASE("loader failures carry the file path and one-based line number") {
  TempDir dir("dataset_err");

  SUBCASE("missing file") {
    auto path = dir.path() / "absent.jsonl";
    try {
      load_dataset(path);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("absent.jsonl") != std::string::npos);
    }
  }

  SUBCASE("malformed json names the offending line") {
    auto path = dir.path() / "bad.jsonl";
    spit(path, "{\"question\": \"q\", \"answers\": [\"a\"]}\n{not json\n");
    try {
      load_dataset(path);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      std::string msg = e.what();
      CHECK(msg.find("bad.jsonl") != std::string::npos);
      CHECK(msg.find(":2") != std::string::npos);
    }
  }

  SUBCASE("wrong field type") {
    auto path = dir.path() / "type.jsonl";
    spit(path, "{\"question\": 7, \"answers\": [\"a\"]}\n");
    CHECK_THROWS_AS(load_dataset(path), DataError);
  }

  SUBCASE("empty answers array") {
    auto path = dir.path() / "empty.jsonl";
    spit(path, "{\"question\": \"q\", \"answers\": []}\n");
    CHECK_THROWS_AS(load_dataset(path), DataError);
  }

  SUBCASE("corpus doc without an id") {
    auto path = dir.path() / "noid.jsonl";
    spit(path, "{\"id\": \"\", \"title\": \"t\", \"text\": \"x\"}\n");
    CHECK_THROWS_AS(load_corpus(path), DataError);
  }

  SUBCASE("log entry missing raw") {
    auto path = dir.path() / "noraw.jsonl";
    spit(path, "{\"question\": \"q\", \"answers\": [\"a\"]}\n");
    CHECK_THROWS_AS(load_trajectory_log(path), DataError);
  }
}
