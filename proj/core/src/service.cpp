#include "searchlab/service.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "searchlab/errors.hpp"
#include "searchlab/scoring.hpp"

namespace searchlab {

struct ScoringService::Impl {
  ServiceConfig cfg;
  httplib::Server server;
  std::thread listener;
  int bound_port = -1;
};

ScoringService::ScoringService(ServiceConfig cfg) : impl_(std::make_unique<Impl>()) {
  impl_->cfg = std::move(cfg);
}

ScoringService::~ScoringService() { stop(); }

int ScoringService::start() {
  Impl& im = *impl_;
  httplib::Server& svr = im.server;

  svr.set_payload_max_length(im.cfg.max_body_bytes);
  const int workers = std::max(1, im.cfg.threads);
  const int capacity = workers + std::max(0, im.cfg.backlog);
  svr.new_task_queue = [workers, capacity] {
    return new httplib::ThreadPool(static_cast<std::size_t>(workers),
                                   static_cast<std::size_t>(capacity));
  };

  svr.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    nlohmann::ordered_json j;
    j["status"] = "ok";
    j["version"] = kWireVersion;
    res.set_content(j.dump(), "application/json");
  });

  svr.Post("/score", [](const httplib::Request& req, httplib::Response& res) {
    try {
      ScoreOutcome outcome = score(parse_score_request(req.body));
      res.set_content(score_response_json(outcome), "application/json");
    } catch (const DataError& e) {
      res.status = 400;
      res.set_content(error_response_json(e.what()), "application/json");
    } catch (const std::invalid_argument& e) {
      res.status = 400;
      res.set_content(error_response_json(e.what()), "application/json");
    }
  });

  // Non-2xx produced outside the handlers (404, 413, ...) still answer JSON.
  svr.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty())
      res.set_content(error_response_json("http error " + std::to_string(res.status)),
                      "application/json");
  });

  if (im.cfg.port == 0) {
    im.bound_port = svr.bind_to_any_port(im.cfg.host);
    if (im.bound_port < 0) throw DataError("cannot bind " + im.cfg.host);
  } else {
    if (!svr.bind_to_port(im.cfg.host, im.cfg.port))
      throw DataError("cannot bind " + im.cfg.host + ":" +
                      std::to_string(im.cfg.port));
    im.bound_port = im.cfg.port;
  }

  im.listener = std::thread([&svr] { svr.listen_after_bind(); });
  svr.wait_until_ready();
  return im.bound_port;
}

void ScoringService::stop() {
  if (!impl_) return;
  if (impl_->listener.joinable()) {
    impl_->server.stop();
    impl_->listener.join();
  }
}

int ScoringService::port() const { return impl_->bound_port; }

}  // namespace searchlab
