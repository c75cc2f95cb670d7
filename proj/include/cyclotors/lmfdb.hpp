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

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cyclotors/elliptic.hpp"

namespace cyclotors {

enum class Source { Fixture, Api, User };
std::string_view source_name(Source s);

struct CurveRecord {
  std::string cremona_label;
  std::string lmfdb_label;  // may be empty
  std::array<Int, 5> ainvs;
  Int conductor;
  Rat j;
  Source source = Source::Fixture;

  EllipticCurve curve() const;
  bool operator==(const CurveRecord& o) const = default;
};

// One tab-separated line without the trailing newline.
std::string serialize(const CurveRecord& r);
CurveRecord parse_record(std::string_view line);

bool is_cremona_label(std::string_view s);
bool is_lmfdb_label(std::string_view s);

struct FetchOptions {
  bool offline = false;
  // Empty: use CYCLOTORS_CACHE if set, else no cache.
  std::string cache_path;
  // Empty: use CYCLOTORS_LMFDB_URL if set, else https://www.lmfdb.org.
  std::string api_base;
  int timeout_seconds = 20;

  static FetchOptions offline_only() {
    FetchOptions o;
    o.offline = true;
    return o;
  }
};

const std::vector<CurveRecord>& fixtures();
CurveRecord fetch_curve(std::string_view label, const FetchOptions& opt = {});

struct CorpusEntry {
  std::string cited_label;
  std::string cremona;  // "-" when unresolved
  std::string role;
  std::vector<std::pair<uint64_t, std::string>> checks;  // (N, expected shape)
};

struct CorpusItem {
  CorpusEntry entry;
  CurveRecord record;
};

const std::vector<CorpusEntry>& corpus_entries();
// Every corpus curve; a label that cannot be resolved raises a configuration error naming it.
std::vector<CorpusItem> corpus(const FetchOptions& opt = FetchOptions::offline_only());

struct CorpusStatus {
  std::vector<CorpusItem> available;
  std::vector<std::string> missing;  // "label: reason"
};
CorpusStatus corpus_status(const FetchOptions& opt = FetchOptions::offline_only());

}  // namespace cyclotors
