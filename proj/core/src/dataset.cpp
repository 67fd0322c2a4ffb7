#include "searchlab/dataset.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "searchlab/errors.hpp"

namespace searchlab {

namespace {

using nlohmann::json;

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

// Applies fn to each non-blank line's parsed JSON object.
template <typename Fn>
void for_each_line(const std::filesystem::path& path, Fn fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw DataError(where(path, lineno) + ": malformed JSON");
    if (!j.is_object())
      throw DataError(where(path, lineno) + ": line is not a JSON object");
    fn(j, lineno);
  }
}

std::string get_string(const json& j, const char* key,
                       const std::filesystem::path& path, std::size_t lineno) {
  auto it = j.find(key);
  if (it == j.end())
    throw DataError(where(path, lineno) + ": missing key \"" + key + "\"");
  if (!it->is_string())
    throw DataError(where(path, lineno) + ": key \"" + key + "\" must be a string");
  return it->get<std::string>();
}

std::vector<std::string> get_answers(const json& j, const std::filesystem::path& path,
                                     std::size_t lineno) {
  auto it = j.find("answers");
  if (it == j.end())
    throw DataError(where(path, lineno) + ": missing key \"answers\"");
  if (!it->is_array())
    throw DataError(where(path, lineno) + ": key \"answers\" must be an array");
  std::vector<std::string> out;
  for (const json& v : *it) {
    if (!v.is_string())
      throw DataError(where(path, lineno) + ": \"answers\" entries must be strings");
    out.push_back(v.get<std::string>());
  }
  if (out.empty())
    throw DataError(where(path, lineno) + ": \"answers\" must be non-empty");
  return out;
}

void write_lines(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write: " + path.string());
  out << content;
  out.flush();
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace

std::vector<QAItem> load_dataset(const std::filesystem::path& path) {
  std::vector<QAItem> items;
  for_each_line(path, [&](const json& j, std::size_t lineno) {
    QAItem item;
    item.question = get_string(j, "question", path, lineno);
    if (item.question.empty())
      throw DataError(where(path, lineno) + ": \"question\" must be non-empty");
    item.answers = get_answers(j, path, lineno);
    items.push_back(std::move(item));
  });
  return items;
}

void save_dataset(const std::vector<QAItem>& items, const std::filesystem::path& path) {
  std::string out;
  for (const QAItem& item : items) {
    nlohmann::ordered_json j;
    j["question"] = item.question;
    j["answers"] = item.answers;
    out += j.dump();
    out += '\n';
  }
  write_lines(path, out);
}

Corpus load_corpus(const std::filesystem::path& path) {
  Corpus corpus;
  for_each_line(path, [&](const json& j, std::size_t lineno) {
    Document doc;
    doc.id = get_string(j, "id", path, lineno);
    if (doc.id.empty())
      throw DataError(where(path, lineno) + ": \"id\" must be non-empty");
    doc.title = get_string(j, "title", path, lineno);
    doc.body = get_string(j, "text", path, lineno);
    corpus.docs.push_back(std::move(doc));
  });
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::string out;
  for (const Document& doc : corpus.docs) {
    nlohmann::ordered_json j;
    j["id"] = doc.id;
    j["title"] = doc.title;
    j["text"] = doc.body;
    out += j.dump();
    out += '\n';
  }
  write_lines(path, out);
}

std::vector<TrajectoryLogEntry> load_trajectory_log(const std::filesystem::path& path) {
  std::vector<TrajectoryLogEntry> entries;
  for_each_line(path, [&](const json& j, std::size_t lineno) {
    TrajectoryLogEntry entry;
    entry.question = get_string(j, "question", path, lineno);
    entry.raw = get_string(j, "raw", path, lineno);
    entry.answers = get_answers(j, path, lineno);
    entries.push_back(std::move(entry));
  });
  return entries;
}

void save_trajectory_log(const std::vector<TrajectoryLogEntry>& entries,
                         const std::filesystem::path& path) {
  std::string out;
  for (const TrajectoryLogEntry& entry : entries) {
    nlohmann::ordered_json j;
    j["question"] = entry.question;
    j["raw"] = entry.raw;
    j["answers"] = entry.answers;
    out += j.dump();
    out += '\n';
  }
  write_lines(path, out);
}

}  // namespace searchlab
