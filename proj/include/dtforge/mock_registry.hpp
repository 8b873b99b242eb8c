#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dtforge {

/// Configuration for the in-process registry double.
struct MockSpec {
  std::filesystem::path doc_dir;
  std::set<std::string> fail_suffixes;  // served as HTTP 500
  std::chrono::milliseconds latency{0};
};

/// Loopback HTTP server that answers GET <prefix>/<suffix> with the exact
/// bytes of <doc_dir>/<suffix>.json (404 when absent, 500 for fail_suffixes)
/// and records every request, failures included.
class MockRegistry {
 public:
  using Clock = std::chrono::steady_clock;
  using HitLog = std::vector<std::pair<std::string, Clock::time_point>>;

  explicit MockRegistry(MockSpec spec);
  ~MockRegistry();

  MockRegistry(const MockRegistry&) = delete;
  MockRegistry& operator=(const MockRegistry&) = delete;

  /// Binds an ephemeral loopback port and returns "http://127.0.0.1:<port>".
  std::string start();
  void stop();

  std::size_t hits(const std::string& suffix) const;
  std::size_t total_hits() const;
  HitLog hit_log() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dtforge
