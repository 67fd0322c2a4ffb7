#include "searchlab/policy.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "searchlab/errors.hpp"

namespace searchlab {

using nlohmann::json;

ToyPolicy::ToyPolicy(int buckets, int actions, double temperature)
    : buckets_(buckets), actions_(actions), temperature_(temperature) {
  if (buckets < 1 || actions < 1)
    throw std::invalid_argument("ToyPolicy: dimensions must be positive");
  if (!(temperature > 0.0))
    throw std::invalid_argument("ToyPolicy: temperature must be positive");
  logits_.assign(static_cast<std::size_t>(buckets) * actions, 0.0);
}

int ToyPolicy::param_index(int bucket, int action) const {
  check_bucket(bucket);
  if (action < 0 || action >= actions_)
    throw std::out_of_range("ToyPolicy: action id out of range");
  return bucket * actions_ + action;
}

void ToyPolicy::check_bucket(int bucket) const {
  if (bucket < 0 || bucket >= buckets_)
    throw std::out_of_range("ToyPolicy: bucket id out of range");
}

std::vector<double> ToyPolicy::probs(int bucket) const {
  check_bucket(bucket);
  const double* row = logits_.data() + static_cast<std::size_t>(bucket) * actions_;
  double m = row[0];
  for (int a = 1; a < actions_; ++a) m = std::max(m, row[a]);
  std::vector<double> p(static_cast<std::size_t>(actions_));
  double z = 0.0;
  for (int a = 0; a < actions_; ++a) {
    p[a] = std::exp((row[a] - m) / temperature_);
    z += p[a];
  }
  for (double& v : p) v /= z;
  return p;
}

double ToyPolicy::log_prob(int bucket, int action) const {
  check_bucket(bucket);
  if (action < 0 || action >= actions_)
    throw std::out_of_range("ToyPolicy: action id out of range");
  const double* row = logits_.data() + static_cast<std::size_t>(bucket) * actions_;
  double m = row[0];
  for (int a = 1; a < actions_; ++a) m = std::max(m, row[a]);
  double z = 0.0;
  for (int a = 0; a < actions_; ++a) z += std::exp((row[a] - m) / temperature_);
  return (row[action] - m) / temperature_ - std::log(z);
}

int ToyPolicy::sample(int bucket, Rng& rng) const {
  std::vector<double> p = probs(bucket);
  double u = rng_uniform(rng);
  double acc = 0.0;
  for (int a = 0; a < actions_; ++a) {
    acc += p[a];
    if (u < acc) return a;
  }
  return actions_ - 1;  // guard against accumulated rounding
}

int ToyPolicy::greedy(int bucket) const {
  check_bucket(bucket);
  const double* row = logits_.data() + static_cast<std::size_t>(bucket) * actions_;
  int best = 0;
  for (int a = 1; a < actions_; ++a) {
    if (row[a] > row[best]) best = a;
  }
  return best;
}

std::string ToyPolicy::config_hash() const {
  char desc[96];
  std::snprintf(desc, sizeof(desc), "%d|%d|%.17g", buckets_, actions_, temperature_);
  // FNV-1a 64.
  std::uint64_t h = 1469598103934665603ULL;
  for (const char* p = desc; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

std::string policy_to_json(const ToyPolicy& policy) {
  json j;
  j["version"] = 1;
  j["buckets"] = policy.buckets();
  j["actions"] = policy.actions();
  j["temperature"] = policy.temperature();
  j["config_hash"] = policy.config_hash();
  j["logits"] = policy.parameters();
  return j.dump();
}

ToyPolicy policy_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DataError("policy checkpoint: malformed JSON");
  try {
    if (j.at("version").get<int>() != 1)
      throw DataError("policy checkpoint: unsupported version");
    ToyPolicy policy(j.at("buckets").get<int>(), j.at("actions").get<int>(),
                     j.at("temperature").get<double>());
    if (j.at("config_hash").get<std::string>() != policy.config_hash())
      throw DataError("policy checkpoint: config hash mismatch");
    std::vector<double> logits = j.at("logits").get<std::vector<double>>();
    if (logits.size() != policy.parameters().size())
      throw DataError("policy checkpoint: logits size mismatch");
    policy.parameters() = std::move(logits);
    return policy;
  } catch (const json::exception& e) {
    throw DataError(std::string("policy checkpoint: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("policy checkpoint: ") + e.what());
  }
}

void save_policy_checkpoint(const ToyPolicy& policy, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write checkpoint: " + path.string());
  out << policy_to_json(policy) << '\n';
}

ToyPolicy load_policy_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open checkpoint: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return policy_from_json(buf.str());
}

}  // namespace searchlab
