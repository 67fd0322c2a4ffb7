#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "searchlab/rng.hpp"

namespace searchlab {

// Tabular softmax policy over (state bucket, action id). Parameters are raw
// logits; action distributions are softmax(logits / temperature) per bucket.
class ToyPolicy {
 public:
  // Zero logits = uniform distribution in every bucket. Throws
  // std::invalid_argument on non-positive dimensions or temperature.
  ToyPolicy(int buckets, int actions, double temperature);

  int buckets() const { return buckets_; }
  int actions() const { return actions_; }
  double temperature() const { return temperature_; }

  double logit(int bucket, int action) const { return logits_[param_index(bucket, action)]; }
  void set_logit(int bucket, int action, double v) { logits_[param_index(bucket, action)] = v; }

  // Flat parameter table, row-major by bucket; gradients share this layout.
  const std::vector<double>& parameters() const { return logits_; }
  std::vector<double>& parameters() { return logits_; }
  int param_index(int bucket, int action) const;

  std::vector<double> probs(int bucket) const;
  double log_prob(int bucket, int action) const;  // numerically stable

  int sample(int bucket, Rng& rng) const;
  int greedy(int bucket) const;  // argmax; ties resolve to the lowest action id

  // Hash of (buckets, actions, temperature); checkpoints embed it so a table
  // is never loaded into an incompatible configuration.
  std::string config_hash() const;

 private:
  void check_bucket(int bucket) const;

  int buckets_;
  int actions_;
  double temperature_;
  std::vector<double> logits_;
};

// Versioned JSON checkpoint: {"version", "buckets", "actions", "temperature",
// "config_hash", "logits"}. Stable across releases of the same version.
std::string policy_to_json(const ToyPolicy& policy);

// Throws DataError on malformed JSON, unsupported version, inconsistent
// dimensions, or a config hash that does not match the stored shape.
ToyPolicy policy_from_json(const std::string& text);

void save_policy_checkpoint(const ToyPolicy& policy, const std::filesystem::path& path);
ToyPolicy load_policy_checkpoint(const std::filesystem::path& path);

}  // namespace searchlab
