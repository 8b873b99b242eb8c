#include <doctest.h>

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "dtforge/mock_registry.hpp"

#include "support/test_util.hpp"

using namespace dtforge;
using testutil::TempDir;

namespace {

httplib::Client client_for(const std::string& address) {
  httplib::Client client(address);
  client.set_connection_timeout(5, 0);
  client.set_read_timeout(5, 0);
  return client;
}

}  // namespace

TEST_CASE("known suffixes are served byte-exact as json") {
  TempDir docs;
  const std::string payload = "{\n  \"pid\": \"x\",\n  \"weird bytes\": \"\\u00e9\"\n}\n";
  testutil::write_file(docs.path() / "abc123.json", payload);

  MockRegistry mock({docs.path(), {}, {}});
  auto client = client_for(mock.start());

  auto epic_style = client.Get("/21.T11969/abc123");
  REQUIRE(epic_style);
  CHECK(epic_style->status == 200);
  CHECK(epic_style->body == payload);
  CHECK(epic_style->get_header_value("Content-Type") == "application/json");

  auto orkg_style = client.Get("/template/abc123");
  REQUIRE(orkg_style);
  CHECK(orkg_style->status == 200);
  CHECK(orkg_style->body == payload);

  CHECK(mock.hits("abc123") == 2);
  CHECK(mock.total_hits() == 2);
}

TEST_CASE("absent suffixes get 404, injected ones get 500, all are logged") {
  TempDir docs;
  testutil::write_file(docs.path() / "broken1.json", "{}");
  MockRegistry mock({docs.path(), {"broken1"}, {}});
  auto client = client_for(mock.start());

  CHECK(mock.hits("missing1") == 0);

  auto missing = client.Get("/21.T11969/missing1");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto failing = client.Get("/21.T11969/broken1");
  REQUIRE(failing);
  CHECK(failing->status == 500);

  CHECK(mock.hits("missing1") == 1);
  CHECK(mock.hits("broken1") == 1);
  CHECK(mock.total_hits() == 2);

  const auto log = mock.hit_log();
  REQUIRE(log.size() == 2);
  CHECK(log[0].first == "missing1");
  CHECK(log[1].first == "broken1");
  CHECK(log[0].second <= log[1].second);
}

TEST_CASE("path traversal cannot leave the document directory") {
  TempDir docs;
  testutil::write_file(docs.path() / "real.json", "{}");
  MockRegistry mock({docs.path(), {}, {}});
  auto client = client_for(mock.start());
  auto sneaky = client.Get("/21.T11969/../real");
  REQUIRE(sneaky);
  CHECK(sneaky->status == 404);
}

TEST_CASE("concurrent requests are all recorded") {
  TempDir docs;
  testutil::write_file(docs.path() / "shared0.json", "{\"k\": 0}");
  MockRegistry mock({docs.path(), {}, {}});
  const std::string address = mock.start();

  constexpr int kThreads = 8;
  constexpr int kRequests = 5;
  std::atomic<int> ok_responses{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < kThreads; ++t) {
    workers.emplace_back([&address, &ok_responses] {
      auto client = client_for(address);
      for (int r = 0; r < kRequests; ++r) {
        auto res = client.Get("/21.T11969/shared0");
        if (res && res->status == 200) ++ok_responses;
      }
    });
  }
  for (auto& worker : workers) worker.join();
  CHECK(ok_responses == kThreads * kRequests);
  CHECK(mock.hits("shared0") == kThreads * kRequests);
}

TEST_CASE("stop is idempotent and frees the port") {
  TempDir docs;
  MockRegistry mock({docs.path(), {}, {}});
  mock.start();
  mock.stop();
  mock.stop();  // second stop is a no-op
}
