#include "dtforge/mock_registry.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "dtforge/error.hpp"

namespace dtforge {

namespace {

// "/21.T11969/abc" and "/template/abc" both carry the suffix after the first
// path segment; multi-segment suffixes stay intact.
std::string suffix_of(const std::string& path) {
  std::string trimmed = path;
  while (!trimmed.empty() && trimmed.front() == '/') trimmed.erase(0, 1);
  const std::size_t slash = trimmed.find('/');
  if (slash == std::string::npos) return trimmed;
  return trimmed.substr(slash + 1);
}

bool escapes_doc_dir(const std::string& suffix) {
  std::istringstream segments(suffix);
  std::string segment;
  while (std::getline(segments, segment, '/')) {
    if (segment == "..") return true;
  }
  return false;
}

}  // namespace

struct MockRegistry::Impl {
  MockSpec spec;
  httplib::Server server;
  std::thread worker;
  int port = -1;

  mutable std::mutex mutex;
  HitLog log;

  explicit Impl(MockSpec s) : spec(std::move(s)) {}

  void record(const std::string& suffix) {
    std::lock_guard lock(mutex);
    log.emplace_back(suffix, Clock::now());
  }

  void handle(const httplib::Request& req, httplib::Response& res) {
    const std::string suffix = suffix_of(req.path);
    record(suffix);
    if (spec.latency.count() > 0) std::this_thread::sleep_for(spec.latency);
    if (spec.fail_suffixes.count(suffix) != 0) {
      res.status = 500;
      res.set_content("injected failure", "text/plain");
      return;
    }
    if (suffix.empty() || escapes_doc_dir(suffix)) {
      res.status = 404;
      return;
    }
    std::ifstream in(spec.doc_dir / (suffix + ".json"), std::ios::binary);
    if (!in) {
      res.status = 404;
      return;
    }
    std::ostringstream body;
    body << in.rdbuf();
    res.set_content(body.str(), "application/json");
  }
};

MockRegistry::MockRegistry(MockSpec spec) : impl_(std::make_unique<Impl>(std::move(spec))) {}

MockRegistry::~MockRegistry() { stop(); }

std::string MockRegistry::start() {
  impl_->server.Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
    impl_->handle(req, res);
  });
  impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
  if (impl_->port <= 0) {
    raise(ErrorCode::BindError, "cannot bind a loopback port for the registry double");
  }
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return "http://127.0.0.1:" + std::to_string(impl_->port);
}

void MockRegistry::stop() {
  if (impl_->worker.joinable()) {
    impl_->server.stop();
    impl_->worker.join();
  }
}

std::size_t MockRegistry::hits(const std::string& suffix) const {
  std::lock_guard lock(impl_->mutex);
  std::size_t count = 0;
  for (const auto& [seen, when] : impl_->log) {
    if (seen == suffix) ++count;
  }
  return count;
}

std::size_t MockRegistry::total_hits() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->log.size();
}

MockRegistry::HitLog MockRegistry::hit_log() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->log;
}

}  // namespace dtforge
