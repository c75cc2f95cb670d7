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

#include "cyclotors/lmfdb.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <regex>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "cyclotors/error.hpp"
#include "embedded.hpp"

namespace cyclotors {

namespace {

constexpr std::string_view kCacheHeader = "# cyclotors-cache v1";
constexpr const char* kDefaultBase = "https://www.lmfdb.org";

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

Source parse_source(const std::string& s) {
  if (s == "cremona-db" || s == "fixture") return Source::Fixture;
  if (s == "api") return Source::Api;
  if (s == "user") return Source::User;
  fail(ErrorCode::InvalidArgument, "unknown record source " + s);
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

bool matches(const CurveRecord& r, std::string_view label) {
  return r.cremona_label == label || (!r.lmfdb_label.empty() && r.lmfdb_label == label);
}

Rat j_of(const std::array<Int, 5>& a) {
  auto e = EllipticCurve::from_ainvs({Rat(a[0]), Rat(a[1]), Rat(a[2]), Rat(a[3]), Rat(a[4])});
  return e.j_invariant().rational_value();
}

Int json_int(const nlohmann::json& v) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<int64_t>()));
  if (v.is_string()) return parse_int(v.get<std::string>());
  fail(ErrorCode::Transport, "malformed integer in API response");
}

Rat json_rat(const nlohmann::json& v) {
  if (v.is_array() && v.size() == 2) return make_rat(json_int(v[0]), json_int(v[1]));
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    size_t k = s.find('/');
    if (k == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, k)), parse_int(s.substr(k + 1)));
  }
  return Rat(json_int(v));
}

CurveRecord from_json(const nlohmann::json& d) {
  CurveRecord r;
  r.source = Source::Api;
  r.cremona_label = d.value("Clabel", std::string());
  r.lmfdb_label = d.value("lmfdb_label", std::string());
  nlohmann::json a = d.at("ainvs");
  if (a.is_string()) a = nlohmann::json::parse(a.get<std::string>());
  if (!a.is_array() || a.size() != 5) fail(ErrorCode::Transport, "malformed ainvs in API response");
  for (int i = 0; i < 5; ++i) r.ainvs[i] = json_int(a[i]);
  r.conductor = json_int(d.at("conductor"));
  r.j = j_of(r.ainvs);
  if (d.contains("jinv") && json_rat(d["jinv"]) != r.j)
    fail(ErrorCode::Transport, "API record has an inconsistent j-invariant");
  if (r.cremona_label.empty() && r.lmfdb_label.empty()) fail(ErrorCode::Transport, "API record has no label");
  if (r.cremona_label.empty()) r.cremona_label = r.lmfdb_label;
  return r;
}

std::vector<CurveRecord> read_cache(const std::string& path) {
  std::vector<CurveRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      if (line != kCacheHeader) fail(ErrorCode::Configuration, "cache " + path + " has an unknown format");
      first = false;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_record(line));
  }
  return out;
}

void append_cache(const std::string& path, const CurveRecord& r) {
  bool fresh = true;
  {
    std::ifstream in(path);
    fresh = !in || in.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream out(path, std::ios::app);
  if (!out) fail(ErrorCode::Configuration, "cannot write cache " + path);
  if (fresh) out << kCacheHeader << '\n';
  out << serialize(r) << '\n';
}

CurveRecord query_api(std::string_view label, const FetchOptions& opt) {
  std::string base = opt.api_base.empty() ? env_or("CYCLOTORS_LMFDB_URL", kDefaultBase) : opt.api_base;
  std::string host = base, prefix;
  if (size_t s = base.find("://"); s != std::string::npos)
    if (size_t slash = base.find('/', s + 3); slash != std::string::npos) {
      host = base.substr(0, slash);
      prefix = base.substr(slash);
      while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    }
  std::string key = is_lmfdb_label(label) ? "lmfdb_label" : "Clabel";
  std::string path = prefix + "/api/ec_curvedata/?" + key + "=" + std::string(label) + "&_format=json";
  httplib::Client cli(host);
  cli.set_connection_timeout(opt.timeout_seconds, 0);
  cli.set_read_timeout(opt.timeout_seconds, 0);
  cli.set_follow_location(true);
  auto res = cli.Get(path);
  if (!res) fail(ErrorCode::Transport, "LMFDB request failed: " + httplib::to_string(res.error()));
  if (res->status == 404) fail(ErrorCode::NotFound, "LMFDB has no curve " + std::string(label));
  if (res->status != 200) fail(ErrorCode::Transport, "LMFDB returned HTTP " + std::to_string(res->status));
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::Transport, "LMFDB returned malformed JSON");
  }
  const auto& data = body.contains("data") ? body["data"] : body;
  if (!data.is_array()) fail(ErrorCode::Transport, "LMFDB response has no data array");
  if (data.empty()) fail(ErrorCode::NotFound, "LMFDB has no curve " + std::string(label));
  try {
    return from_json(data[0]);
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::Transport, "LMFDB record lacks expected fields");
  }
}

}  // namespace

std::string_view source_name(Source s) {
  switch (s) {
    case Source::Fixture: return "fixture";
    case Source::Api: return "api";
    case Source::User: return "user";
  }
  return "?";
}

EllipticCurve CurveRecord::curve() const {
  return EllipticCurve::from_ainvs({Rat(ainvs[0]), Rat(ainvs[1]), Rat(ainvs[2]), Rat(ainvs[3]), Rat(ainvs[4])});
}

std::string serialize(const CurveRecord& r) {
  std::ostringstream s;
  s << r.cremona_label << '\t' << (r.lmfdb_label.empty() ? "-" : r.lmfdb_label);
  for (const auto& a : r.ainvs) s << '\t' << a.get_str();
  s << '\t' << r.conductor.get_str() << '\t' << r.j.get_num().get_str() << '\t' << r.j.get_den().get_str() << '\t'
    << (r.source == Source::Fixture ? "fixture" : source_name(r.source));
  return s.str();
}

CurveRecord parse_record(std::string_view line) {
  auto rows = detail::tsv_rows(line);
  if (rows.size() != 1 || rows[0].size() != 11) fail(ErrorCode::InvalidArgument, "malformed curve record");
  const auto& c = rows[0];
  CurveRecord r;
  r.cremona_label = c[0];
  r.lmfdb_label = c[1] == "-" ? "" : c[1];
  for (int i = 0; i < 5; ++i) r.ainvs[i] = parse_int(c[2 + i]);
  r.conductor = parse_int(c[7]);
  r.j = make_rat(parse_int(c[8]), parse_int(c[9]));
  r.source = parse_source(c[10]);
  if (r.cremona_label.empty() || r.conductor <= 0) fail(ErrorCode::InvalidArgument, "malformed curve record");
  return r;
}

bool is_cremona_label(std::string_view s) {
  static const std::regex re("[1-9][0-9]*[a-z]+[1-9][0-9]*");
  return std::regex_match(s.begin(), s.end(), re);
}

bool is_lmfdb_label(std::string_view s) {
  static const std::regex re("[1-9][0-9]*\\.[a-z]+[1-9][0-9]*");
  return std::regex_match(s.begin(), s.end(), re);
}

const std::vector<CurveRecord>& fixtures() {
  static const std::vector<CurveRecord> f = [] {
    std::vector<CurveRecord> v;
    for (const auto& row : detail::tsv_rows(embedded::curves)) {
      std::string line;
      for (size_t i = 0; i < row.size(); ++i) line += (i ? "\t" : "") + row[i];
      v.push_back(parse_record(line));
    }
    return v;
  }();
  return f;
}

CurveRecord fetch_curve(std::string_view label, const FetchOptions& opt) {
  if (!is_cremona_label(label) && !is_lmfdb_label(label))
    fail(ErrorCode::NotFound, "not a curve label: " + std::string(label));
  for (const auto& r : fixtures())
    if (matches(r, label)) return r;
  if (opt.offline) fail(ErrorCode::NotFound, "no fixture for " + std::string(label) + " (offline)");
  std::string cache = opt.cache_path.empty() ? env_or("CYCLOTORS_CACHE", "") : opt.cache_path;
  if (!cache.empty()) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    for (const auto& r : read_cache(cache))
      if (matches(r, label)) return r;
  }
  CurveRecord r = query_api(label, opt);
  if (!cache.empty()) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    bool present = false;
    for (const auto& c : read_cache(cache)) present = present || c == r;
    if (!present) append_cache(cache, r);
  }
  return r;
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> v;
    for (const auto& row : detail::tsv_rows(embedded::corpus)) {
      if (row.size() != 4) throw std::logic_error("malformed corpus row");
      CorpusEntry e{row[0], row[1], row[2], {}};
      if (row[3] != "-") {
        std::stringstream ss(row[3]);
        std::string item;
        while (std::getline(ss, item, ',')) {
          size_t k = item.find(':');
          e.checks.emplace_back(std::stoull(item.substr(0, k)), item.substr(k + 1));
        }
      }
      v.push_back(std::move(e));
    }
    return v;
  }();
  return entries;
}

CorpusStatus corpus_status(const FetchOptions& opt) {
  CorpusStatus st;
  for (const auto& e : corpus_entries()) {
    try {
      if (e.cremona != "-") {
        st.available.push_back({e, fetch_curve(e.cremona, opt)});
      } else if (opt.offline) {
        st.missing.push_back(e.cited_label + ": no confirmed fixture (offline)");
      } else {
        st.available.push_back({e, fetch_curve(e.cited_label, opt)});
      }
    } catch (const Error& err) {
      st.missing.push_back(e.cited_label + ": " + err.what());
    }
  }
  return st;
}

std::vector<CorpusItem> corpus(const FetchOptions& opt) {
  CorpusStatus st = corpus_status(opt);
  if (!st.missing.empty()) fail(ErrorCode::Configuration, "corpus label unavailable: " + st.missing.front());
  return st.available;
}

}  // namespace cyclotors
