// Copyright 2026 The cyclotors Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "cyclotors/error.hpp"
#include "cyclotors/lmfdb.hpp"

using namespace cyclotors;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Usage;
}

// Serves /api/ec_curvedata/ from a small in-memory table.
class MockLmfdb {
 public:
  MockLmfdb() {
    srv_.Get("/api/ec_curvedata/", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      std::string label = req.has_param("Clabel") ? req.get_param_value("Clabel") : req.get_param_value("lmfdb_label");
      nlohmann::json data = nlohmann::json::array();
      if (label == "10230bg2" || label == "10230.bg4")
        data.push_back({{"Clabel", "10230bg2"},
                        {"lmfdb_label", "10230.bg4"},
                        {"ainvs", {1, 0, 0, -430355, 162005025}},
                        {"conductor", 10230},
                        {"jinv", witness_j}});
      if (label == "11a9") data.push_back({{"Clabel", "11a9"}, {"ainvs", {0, -1, 1, 0, 0}}, {"conductor", 11}, {"jinv", {1, 2}}});
      if (label == "11a8") {
        res.status = 500;
        return;
      }
      res.set_content(nlohmann::json{{"data", data}}.dump(), "application/json");
    });
    port = srv_.bind_to_any_port("127.0.0.1");
    th_ = std::thread([this] { srv_.listen_after_bind(); });
    srv_.wait_until_ready();
  }
  ~MockLmfdb() {
    srv_.stop();
    th_.join();
  }
  std::string base() const { return "http://127.0.0.1:" + std::to_string(port); }

  int port = 0;
  std::atomic<int> hits{0};
  nlohmann::json witness_j;

 private:
  httplib::Server srv_;
  std::thread th_;
};

std::string temp_path(const char* name) {
  auto p = std::filesystem::temp_directory_path() / (std::string("cyclotors_") + name + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p.string();
}

}  // namespace

TEST_CASE("label syntax") {
  CHECK(is_cremona_label("11a3"));
  CHECK(is_cremona_label("2112bd2"));
  CHECK(!is_cremona_label("11.a3"));
  CHECK(is_lmfdb_label("15.a7"));
  CHECK(!is_lmfdb_label("15a7"));
  CHECK(!is_cremona_label("xyz99"));
}

TEST_CASE("fixtures") {
  auto r = fetch_curve("11a3", FetchOptions::offline_only());
  CHECK(r.ainvs == std::array<Int, 5>{0, -1, 1, 0, 0});
  CHECK(r.source == Source::Fixture);
  CHECK(fetch_curve("11.a3", FetchOptions::offline_only()) == r);
  auto e = fetch_curve("27a4", FetchOptions::offline_only());
  CHECK(e.conductor == 27);
  // The j = 0 curves of conductor 27 are 27a1 and 27a3.
  CHECK(fetch_curve("27a1", FetchOptions::offline_only()).j == 0);
  CHECK(fetch_curve("27a3", FetchOptions::offline_only()).j == 0);
  CHECK(code_of([] { fetch_curve("xyz99", FetchOptions::offline_only()); }) == ErrorCode::NotFound);
  CHECK(code_of([] { fetch_curve("99z9", FetchOptions::offline_only()); }) == ErrorCode::NotFound);
  for (const auto& f : fixtures()) {
    INFO(f.cremona_label);
    CHECK(parse_record(serialize(f)) == f);
    CHECK(f.curve().j_invariant().rational_value() == f.j);
    CHECK(f.conductor > 0);
  }
  CHECK_THROWS_AS(parse_record("11a1\t-\t0\t0"), Error);
}

TEST_CASE("corpus offline") {
  CHECK(corpus_entries().size() == 20);
  auto st = corpus_status();
  CHECK(st.available.size() == 19);
  REQUIRE(st.missing.size() == 1);
  CHECK(st.missing[0].find("10230bg2") == 0);
  bool has550 = false;
  for (const auto& it : st.available) {
    has550 = has550 || it.entry.cited_label == "550k2";
    CHECK(it.record.curve().j_invariant().rational_value() == it.record.j);
  }
  CHECK(has550);
  try {
    corpus();
    FAIL("corpus should report the missing label");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Configuration);
    CHECK(std::string(e.what()).find("10230bg2") != std::string::npos);
  }
  // The 19-isogeny curve.
  for (const auto& it : st.available)
    if (it.entry.role == "isogeny-19") CHECK(it.record.j == Rat(-884736));
}

TEST_CASE("api path with cache") {
  MockLmfdb mock;
  mock.witness_j = {EllipticCurve::from_ainvs({Rat(1), Rat(0), Rat(0), Rat(-430355), Rat(162005025)})
                        .j_invariant()
                        .rational_value()
                        .get_num()
                        .get_str(),
                    EllipticCurve::from_ainvs({Rat(1), Rat(0), Rat(0), Rat(-430355), Rat(162005025)})
                        .j_invariant()
                        .rational_value()
                        .get_den()
                        .get_str()};
  std::string cache = temp_path("cache");
  FetchOptions opt{false, cache, mock.base(), 5};
  auto r = fetch_curve("10230bg2", opt);
  CHECK(r.source == Source::Api);
  CHECK(r.conductor == 10230);
  CHECK(r.lmfdb_label == "10230.bg4");
  CHECK(mock.hits == 1);
  std::ifstream in(cache);
  std::string first, body;
  std::getline(in, first);
  CHECK(first == "# cyclotors-cache v1");
  std::getline(in, body);
  CHECK(body == serialize(r));
  auto again = fetch_curve("10230bg2", opt);
  CHECK(mock.hits == 1);
  CHECK(serialize(again) == serialize(r));
  CHECK(fetch_curve("10230.bg4", opt) == r);
  CHECK(mock.hits == 1);
  CHECK(code_of([&] { fetch_curve("99z9", opt); }) == ErrorCode::NotFound);
  CHECK(code_of([&] { fetch_curve("11a8", opt); }) == ErrorCode::Transport);
  // Stated j disagrees with the a-invariants.
  CHECK(code_of([&] { fetch_curve("11a9", opt); }) == ErrorCode::Transport);
  auto full = corpus(opt);
  CHECK(full.size() == 20);
  // Online mode never overrides fixtures.
  CHECK(fetch_curve("11a3", opt).source == Source::Fixture);
  std::filesystem::remove(cache);
}

TEST_CASE("transport failure is distinct from not-found") {
  int port;
  {
    httplib::Server s;
    port = s.bind_to_any_port("127.0.0.1");
  }
  FetchOptions opt{false, "", "http://127.0.0.1:" + std::to_string(port), 2};
  CHECK(code_of([&] { fetch_curve("10230bg2", opt); }) == ErrorCode::Transport);
  CHECK(code_of([&] { corpus(opt); }) == ErrorCode::Configuration);
  std::string bad = temp_path("badcache");
  std::ofstream(bad) << "# other format\n";
  FetchOptions o2{false, bad, "http://127.0.0.1:" + std::to_string(port), 2};
  CHECK(code_of([&] { fetch_curve("10230bg2", o2); }) == ErrorCode::Configuration);
  std::filesystem::remove(bad);
}
