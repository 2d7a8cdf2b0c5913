// Copyright 2026 The Chant Authors
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

#include "chant/prosody.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "chant/errors.hpp"

namespace chant {

namespace {

std::size_t count_consonantal(std::span<const Letter> letters) {
  return static_cast<std::size_t>(std::count_if(
      letters.begin(), letters.end(),
      [](const Letter& l) { return l.is_consonantal(); }));
}

// Clusters whose weight-making effect is optional: pr, br, kr and a cluster
// opening with h.
bool is_optional_cluster(std::span<const Letter> cluster) {
  if (cluster.size() != 2) return false;
  const auto& first = cluster[0].text;
  const auto& second = cluster[1].text;
  if (first == "h") return true;
  return second == "r" && (first == "p" || first == "b" || first == "k");
}

}  // namespace

Weight isolated_weight(const Unit& unit) {
  if (unit.vowel.is_long_vowel()) return Weight::Guru;
  if (!unit.post_vowel.empty() && unit.post_vowel.back().is_coda_mark()) {
    return Weight::Guru;
  }
  if (count_consonantal(unit.post_vowel) >= 2) return Weight::Guru;
  return Weight::Laghu;
}

std::vector<Weight> contextual_weights(std::span<const Unit> units,
                                       const WeightOptions& options) {
  std::vector<Weight> out;
  out.reserve(units.size());
  std::vector<Letter> cluster;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const Unit& unit = units[i];
    if (isolated_weight(unit) == Weight::Guru) {
      out.push_back(Weight::Guru);
      continue;
    }
    cluster.clear();
    for (const auto& l : unit.post_vowel) {
      if (l.is_consonantal()) cluster.push_back(l);
    }
    if (!unit.quarter_final && i + 1 < units.size()) {
      for (const auto& l : units[i + 1].pre_vowel) {
        if (l.is_consonantal()) cluster.push_back(l);
      }
    }
    Weight w = Weight::Laghu;
    if (cluster.size() >= 2 &&
        (options.promote_prbrkrh || !is_optional_cluster(cluster))) {
      w = Weight::Guru;
    }
    out.push_back(w);
  }
  return out;
}

std::vector<WeightedUnit> weigh_units(std::span<const Unit> units,
                                      const WeightOptions& options) {
  const auto contextual = contextual_weights(units, options);
  std::vector<WeightedUnit> out;
  out.reserve(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    out.push_back({units[i], isolated_weight(units[i]), contextual[i]});
  }
  return out;
}

std::string weight_pattern(std::span<const WeightedUnit> units) {
  std::string out;
  for (const auto& u : units) out.push_back(u.contextual == Weight::Guru ? '1' : '0');
  return out;
}

std::vector<int> MetreRecord::caesuras_for(std::size_t quarter) const {
  const int length = syllables_per_quarter.at(quarter);
  std::vector<int> out;
  for (int c : caesura_positions) {
    if (c >= 1 && c <= length) out.push_back(c);
  }
  out.push_back(length);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Database parsing

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_ints(std::string_view value, std::size_t line) {
  std::vector<int> out;
  for (auto field : split_commas(value)) {
    int v = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw MetreDbError(line, "not an integer: '" + std::string(field) + "'");
    }
    out.push_back(v);
  }
  return out;
}

struct PendingRecord {
  std::size_t first_line = 0;
  std::optional<std::string> name;
  std::optional<std::vector<int>> syllables;
  std::optional<std::vector<std::string>> pattern;
  std::optional<std::vector<int>> caesura;
  std::optional<std::vector<int>> pitch_q13;
  std::optional<std::vector<int>> pitch_q24;

  bool empty() const {
    return !name && !syllables && !pattern && !caesura && !pitch_q13 &&
           !pitch_q24;
  }
};

MetreRecord finish(const PendingRecord& p) {
  const std::size_t line = p.first_line;
  auto require = [&](bool present, const char* field) {
    if (!present) throw MetreDbError(line, std::string("missing field '") + field + "'");
  };
  require(p.name.has_value(), "name");
  require(p.syllables.has_value(), "syllables");
  require(p.caesura.has_value(), "caesura");
  require(p.pitch_q13.has_value(), "pitch_q13");
  require(p.pitch_q24.has_value(), "pitch_q24");

  MetreRecord r;
  r.name = *p.name;
  if (r.name.empty()) throw MetreDbError(line, "empty name");
  if (p.syllables->size() != 4) {
    throw MetreDbError(line, "syllables needs 4 values");
  }
  for (std::size_t q = 0; q < 4; ++q) {
    const int n = (*p.syllables)[q];
    if (n <= 0) throw MetreDbError(line, "syllable counts must be positive");
    r.syllables_per_quarter[q] = n;
  }
  if (p.pattern) {
    if (p.pattern->size() != 4) throw MetreDbError(line, "pattern needs 4 values");
    std::array<std::string, 4> patterns;
    for (std::size_t q = 0; q < 4; ++q) {
      const std::string& pat = (*p.pattern)[q];
      if (pat.size() != static_cast<std::size_t>(r.syllables_per_quarter[q])) {
        throw MetreDbError(line, "pattern length differs from syllable count");
      }
      if (pat.find_first_not_of("01x") != std::string::npos) {
        throw MetreDbError(line, "pattern may only contain 0, 1 and x");
      }
      patterns[q] = pat;
    }
    r.pattern_per_quarter = std::move(patterns);
  }
  const int longest = *std::max_element(r.syllables_per_quarter.begin(),
                                        r.syllables_per_quarter.end());
  for (int c : *p.caesura) {
    if (c < 1 || c > longest) throw MetreDbError(line, "caesura out of range");
  }
  r.caesura_positions = *p.caesura;
  for (std::size_t q = 0; q < 4; ++q) {
    const auto& row = q % 2 == 0 ? *p.pitch_q13 : *p.pitch_q24;
    if (row.size() != static_cast<std::size_t>(r.syllables_per_quarter[q])) {
      throw MetreDbError(line, "pitch array length differs from syllable count");
    }
    for (int v : row) {
      if (v < kLowestPitch || v > kHighestPitch) {
        throw MetreDbError(line, "pitch value outside [-7, 4]");
      }
    }
    r.pitch_arrays[q] = row;
  }
  return r;
}

}  // namespace

std::vector<MetreRecord> parse_metre_db(std::string_view text) {
  std::vector<MetreRecord> out;
  PendingRecord pending;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (!pending.empty()) out.push_back(finish(pending));
    pending = PendingRecord{};
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw MetreDbError(line_no, "expected 'key: value'");
    }
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (pending.empty()) pending.first_line = line_no;

    auto set_once = [&](auto& slot, auto v) {
      if (slot) throw MetreDbError(line_no, "duplicate field '" + std::string(key) + "'");
      slot = std::move(v);
    };
    if (key == "name") {
      set_once(pending.name, std::string(value));
    } else if (key == "syllables") {
      set_once(pending.syllables, parse_ints(value, line_no));
    } else if (key == "pattern") {
      std::vector<std::string> patterns;
      for (auto f : split_commas(value)) patterns.emplace_back(f);
      set_once(pending.pattern, std::move(patterns));
    } else if (key == "caesura") {
      set_once(pending.caesura, parse_ints(value, line_no));
    } else if (key == "pitch_q13") {
      set_once(pending.pitch_q13, parse_ints(value, line_no));
    } else if (key == "pitch_q24") {
      set_once(pending.pitch_q24, parse_ints(value, line_no));
    } else {
      throw MetreDbError(line_no, "unknown field '" + std::string(key) + "'");
    }
  }
  flush();
  return out;
}

std::vector<MetreRecord> load_metre_db(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open metre database " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_metre_db(buffer.str());
}

std::string_view builtin_metre_db_text() {
  static constexpr std::string_view kText =
#include "chant_builtin_metres.inc"
      ;
  return kText;
}

const std::vector<MetreRecord>& builtin_metre_db() {
  static const std::vector<MetreRecord> db =
      parse_metre_db(builtin_metre_db_text());
  return db;
}

// ---------------------------------------------------------------------------
// Classification

bool metre_matches(const MetreRecord& record,
                   const std::array<std::string, 4>& patterns) {
  for (std::size_t q = 0; q < 4; ++q) {
    const std::string& observed = patterns[q];
    if (observed.size() !=
        static_cast<std::size_t>(record.syllables_per_quarter[q])) {
      return false;
    }
    if (!record.pattern_per_quarter) continue;
    const std::string& expected = (*record.pattern_per_quarter)[q];
    for (std::size_t j = 0; j + 1 < observed.size(); ++j) {
      if (expected[j] != 'x' && expected[j] != observed[j]) return false;
    }
  }
  return true;
}

const MetreRecord& classify_metre(const std::array<std::string, 4>& patterns,
                                  std::span<const MetreRecord> db) {
  for (const auto& record : db) {
    if (metre_matches(record, patterns)) return record;
  }
  std::string observed;
  for (std::size_t q = 0; q < 4; ++q) {
    if (q) observed += " | ";
    observed += patterns[q] + " (" + std::to_string(patterns[q].size()) + ")";
  }
  throw NoMatchingMetre(observed);
}

std::span<const int> pitch_array(const MetreRecord& metre,
                                 std::size_t quarter_index) {
  return metre.pitch_arrays.at(quarter_index);
}

std::vector<int> VerseAnalysis::pitches(std::size_t quarter) const {
  if (metre) {
    const auto row = pitch_array(*metre, quarter);
    return {row.begin(), row.end()};
  }
  return std::vector<int>(quarters.at(quarter).size(), 0);
}

std::vector<int> VerseAnalysis::caesuras(std::size_t quarter) const {
  if (metre) return metre->caesuras_for(quarter);
  return {static_cast<int>(quarters.at(quarter).size())};
}

namespace {

std::vector<std::vector<WeightedUnit>> cut(
    const std::vector<WeightedUnit>& units, std::span<const std::size_t> ends) {
  std::vector<std::vector<WeightedUnit>> out;
  std::size_t begin = 0;
  for (std::size_t end : ends) {
    out.emplace_back(units.begin() + static_cast<std::ptrdiff_t>(begin),
                     units.begin() + static_cast<std::ptrdiff_t>(end));
    begin = end;
  }
  return out;
}

std::array<std::string, 4> patterns_of(
    const std::vector<std::vector<WeightedUnit>>& quarters) {
  std::array<std::string, 4> out;
  for (std::size_t q = 0; q < 4; ++q) out[q] = weight_pattern(quarters[q]);
  return out;
}

VerseAnalysis make_analysis(std::vector<std::vector<WeightedUnit>> quarters,
                            std::optional<MetreRecord> metre) {
  VerseAnalysis a;
  for (const auto& q : quarters) a.n_per_quarter.push_back(q.size());
  a.quarters = std::move(quarters);
  a.metre = std::move(metre);
  return a;
}

}  // namespace

VerseAnalysis analyze_verse(std::span<const Unit> units,
                            std::span<const MetreRecord> db,
                            const AnalysisOptions& options) {
  if (units.empty()) throw NoMatchingMetre("an empty verse");
  const auto weighted = weigh_units(units, options.weights);

  // Segment ends from explicit separators.
  std::vector<std::size_t> marker_ends;
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    if (weighted[i].unit.quarter_final || i + 1 == weighted.size()) {
      marker_ends.push_back(i + 1);
    }
  }

  if (marker_ends.size() == 4) {
    auto quarters = cut(weighted, marker_ends);
    const auto patterns = patterns_of(quarters);
    for (const auto& record : db) {
      if (metre_matches(record, patterns)) return make_analysis(std::move(quarters), record);
    }
  } else {
    for (const auto& record : db) {
      std::vector<std::size_t> ends;
      std::size_t total = 0;
      for (int n : record.syllables_per_quarter) {
        total += static_cast<std::size_t>(n);
        ends.push_back(total);
      }
      if (total != weighted.size()) continue;
      const bool aligned = std::all_of(
          marker_ends.begin(), marker_ends.end(), [&](std::size_t m) {
            return std::find(ends.begin(), ends.end(), m) != ends.end();
          });
      if (!aligned) continue;
      auto quarters = cut(weighted, ends);
      if (metre_matches(record, patterns_of(quarters))) {
        return make_analysis(std::move(quarters), record);
      }
    }
  }

  if (options.require_metre) {
    std::string observed;
    for (auto q : cut(weighted, marker_ends)) {
      if (!observed.empty()) observed += " | ";
      observed += weight_pattern(q) + " (" + std::to_string(q.size()) + ")";
    }
    throw NoMatchingMetre(observed);
  }
  return make_analysis(cut(weighted, marker_ends), std::nullopt);
}

}  // namespace chant
