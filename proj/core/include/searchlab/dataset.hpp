#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "searchlab/retriever.hpp"
#include "searchlab/taskgen.hpp"

namespace searchlab {

// JSONL loaders/writers. One object per line; blank lines are skipped; extra
// keys on data lines are tolerated. Loaders throw DataError naming the file
// and 1-based line on missing files, malformed JSON, wrong types, or empty
// required fields. Writers emit a fixed key order, so save -> load -> save
// is byte-stable.

// {"question": str, "answers": [str, ...]} — answers non-empty.
std::vector<QAItem> load_dataset(const std::filesystem::path& path);
void save_dataset(const std::vector<QAItem>& items, const std::filesystem::path& path);

// {"id": str, "title": str, "text": str} — id non-empty.
Corpus load_corpus(const std::filesystem::path& path);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Offline trajectory log line: {"question": str, "raw": str, "answers": [str, ...]}.
struct TrajectoryLogEntry {
  std::string question;
  std::string raw;  // tagged trajectory text, possibly malformed
  std::vector<std::string> answers;
};

std::vector<TrajectoryLogEntry> load_trajectory_log(const std::filesystem::path& path);
void save_trajectory_log(const std::vector<TrajectoryLogEntry>& entries,
                         const std::filesystem::path& path);

}  // namespace searchlab
