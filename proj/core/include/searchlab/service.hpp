#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace searchlab {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks an ephemeral port
  int threads = 4;  // worker pool size
  // Requests queued beyond the busy workers; overflow closes the connection.
  int backlog = 64;
  std::size_t max_body_bytes = 1 << 20;  // larger requests get HTTP 413
};

// HTTP front end for score(): POST /score with a ScoreRequest body,
// GET /health. Handlers are pure, so requests never affect each other.
class ScoringService {
 public:
  explicit ScoringService(ServiceConfig cfg);
  ~ScoringService();
  ScoringService(const ScoringService&) = delete;
  ScoringService& operator=(const ScoringService&) = delete;

  // Binds and serves on a background thread; returns the bound port.
  // Throws DataError when the address cannot be bound.
  int start();

  // Graceful: stops accepting, drains in-flight requests. Idempotent.
  void stop();

  int port() const;  // bound port; -1 before start()

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace searchlab
