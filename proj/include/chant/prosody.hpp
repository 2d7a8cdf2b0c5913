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

// Syllable weights, metre classification and per-quarter pitch contours.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chant/unit_splitter.hpp"

namespace chant {

enum class Weight : std::uint8_t { Laghu = 0, Guru = 1 };

constexpr int beats_of(Weight w) { return w == Weight::Guru ? 2 : 1; }
constexpr int bit_of(Weight w) { return static_cast<int>(w); }

struct WeightOptions {
  // Let pr/br/kr and h-initial clusters make a short vowel heavy.
  bool promote_prbrkrh = false;
};

struct WeightedUnit {
  Unit unit;
  Weight isolated = Weight::Laghu;    // weight of the unit on its own
  Weight contextual = Weight::Laghu;  // weight given the following unit
};

/// Guru when the vowel is long, the unit ends in a coda mark, or the unit's
/// own tail holds two or more consonants. A single trailing consonant does
/// not make a unit heavy.
Weight isolated_weight(const Unit& unit);

/// Weight of each unit considering the consonants between its vowel and the
/// next vowel: the unit's tail plus the next unit's onset. Never looks past
/// a quarter-final unit.
std::vector<Weight> contextual_weights(std::span<const Unit> units,
                                       const WeightOptions& options = {});

std::vector<WeightedUnit> weigh_units(std::span<const Unit> units,
                                      const WeightOptions& options = {});

/// "0"/"1" string of contextual weights.
std::string weight_pattern(std::span<const WeightedUnit> units);

inline constexpr int kLowestPitch = -7;  // sa
inline constexpr int kHighestPitch = 4;  // ni

struct MetreRecord {
  std::string name;
  std::array<int, 4> syllables_per_quarter{};
  // Per-quarter patterns over '0' (laghu), '1' (guru) and 'x' (either).
  // Absent for metres defined by syllable count only.
  std::optional<std::array<std::string, 4>> pattern_per_quarter;
  // 1-based syllable positions after which a pause falls, in every quarter.
  std::vector<int> caesura_positions;
  std::array<std::vector<int>, 4> pitch_arrays;

  /// Caesura positions that fall inside or at the end of quarter q; the
  /// quarter end is always included.
  std::vector<int> caesuras_for(std::size_t quarter) const;

  friend bool operator==(const MetreRecord&, const MetreRecord&) = default;
};

/// Parses the metre database text format:
///
///   # comment
///   name: Upajāti
///   syllables: 11,11,11,11
///   pattern: x1011001011,x1011001011,x1011001011,x1011001011
///   caesura: 11
///   pitch_q13: 0,0,1,2,2,0,0,1,-1,0,-1
///   pitch_q24: 0,1,0,0,0,0,-1,0,1,1,1
///
/// Records are separated by blank lines; `pattern` is optional. Throws
/// MetreDbError.
std::vector<MetreRecord> parse_metre_db(std::string_view text);
std::vector<MetreRecord> load_metre_db(const std::filesystem::path& path);

/// Anuṣṭup, Indravajrā, Upendravajrā and Upajāti.
const std::vector<MetreRecord>& builtin_metre_db();
std::string_view builtin_metre_db_text();

/// First record whose syllable counts and (when present) patterns match the
/// observed quarter patterns. The last syllable of each quarter matches
/// either weight. Throws NoMatchingMetre.
const MetreRecord& classify_metre(const std::array<std::string, 4>& patterns,
                                  std::span<const MetreRecord> db);

/// True when the four observed patterns fit the record.
bool metre_matches(const MetreRecord& record,
                   const std::array<std::string, 4>& patterns);

std::span<const int> pitch_array(const MetreRecord& metre,
                                 std::size_t quarter_index);

struct VerseAnalysis {
  std::vector<std::vector<WeightedUnit>> quarters;
  // Absent when classification failed and a flat contour was allowed.
  std::optional<MetreRecord> metre;
  std::vector<std::size_t> n_per_quarter;

  /// Pitch contour for quarter q; all zeros without a metre.
  std::vector<int> pitches(std::size_t quarter) const;
  /// Caesurae for quarter q; just the quarter end without a metre.
  std::vector<int> caesuras(std::size_t quarter) const;
};

struct AnalysisOptions {
  WeightOptions weights;
  bool require_metre = true;
};

/// Weighs the units, divides them into quarters and identifies the metre.
/// Explicit quarter separators are used when there are exactly four;
/// otherwise each record's syllable counts are tried as cut points, which
/// must agree with any separators present.
VerseAnalysis analyze_verse(std::span<const Unit> units,
                            std::span<const MetreRecord> db,
                            const AnalysisOptions& options = {});

}  // namespace chant
