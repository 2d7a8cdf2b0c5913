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

#include <gtest/gtest.h>

#include <algorithm>

#include "chant/errors.hpp"
#include "chant/prosody.hpp"
#include "chant/sandhi.hpp"
#include "oracles.hpp"

namespace chant {
namespace {

std::vector<Unit> units_of(std::string_view text) {
  return split_into_units(sandhi::apply_all(tokenize(text)));
}

std::vector<int> bits(const std::vector<Weight>& w) {
  std::vector<int> out;
  for (auto x : w) out.push_back(bit_of(x));
  return out;
}

std::vector<int> isolated_bits(std::string_view text) {
  std::vector<int> out;
  for (const auto& u : units_of(text)) out.push_back(bit_of(isolated_weight(u)));
  return out;
}

std::vector<int> contextual_bits(std::string_view text, WeightOptions o = {}) {
  return bits(contextual_weights(units_of(text), o));
}

TEST(Weights, SampleQuarterOne) {
  const auto quarter = "vande gurūṇāṃ caraṇāravinde";
  EXPECT_EQ(isolated_bits(quarter), (std::vector<int>{0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(contextual_bits(quarter), (std::vector<int>{1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1}));
}

TEST(Weights, Isolated) {
  EXPECT_EQ(isolated_bits("kārt"), (std::vector<int>{1}));
  EXPECT_EQ(isolated_bits("rat"), (std::vector<int>{0}));
  EXPECT_EQ(isolated_bits("vatsa"), (std::vector<int>{0, 0}));
  EXPECT_EQ(isolated_bits("duḥkha"), (std::vector<int>{1, 0}));
  EXPECT_EQ(isolated_bits("kṛtsna"), (std::vector<int>{0, 0}));
  EXPECT_EQ(isolated_bits("kārtsnyam"), (std::vector<int>{1, 0}));
  EXPECT_EQ(isolated_bits("dhairya"), (std::vector<int>{1, 0}));
}

TEST(Weights, ContextualClusters) {
  EXPECT_EQ(contextual_bits("ajñā"), (std::vector<int>{1, 1}));
  EXPECT_EQ(contextual_bits("rāma"), (std::vector<int>{1, 0}));
  EXPECT_EQ(contextual_bits("manas"), (std::vector<int>{0, 0}));
  EXPECT_EQ(contextual_bits("putra"), (std::vector<int>{1, 0}));
  // Word boundaries do not block weight.
  EXPECT_EQ(contextual_bits("manas tu"), (std::vector<int>{0, 1, 0}));
  // Quarter boundaries do.
  EXPECT_EQ(contextual_bits("manas\ntu"), (std::vector<int>{0, 0, 0}));
}

TEST(Weights, OptionalClusterPromotion) {
  EXPECT_EQ(contextual_bits("sapriyaḥ"), (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(contextual_bits("sapriyaḥ", {.promote_prbrkrh = true}), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(contextual_bits("brahma"), (std::vector<int>{0, 0}));
  EXPECT_EQ(contextual_bits("brahma", {.promote_prbrkrh = true}), (std::vector<int>{1, 0}));
  // After correction vahni holds "nh", which is always heavy.
  EXPECT_EQ(contextual_bits("vahni"), (std::vector<int>{1, 0}));
  // Other clusters are always heavy.
  EXPECT_EQ(contextual_bits("vatra"), (std::vector<int>{1, 0}));
}

TEST(MetreDb, BuiltinPitchTables) {
  const auto& db = builtin_metre_db();
  ASSERT_EQ(db.size(), 4u);
  const std::vector<int> q13_8{0, 1, 1, 2, 2, 0, 1, 1};
  const std::vector<int> q24_8{0, 1, -1, 0, 0, 1, 1, 1};
  const std::vector<int> q13_11{0, 0, 1, 2, 2, 0, 0, 1, -1, 0, -1};
  const std::vector<int> q24_11{0, 1, 0, 0, 0, 0, -1, 0, 1, 1, 1};
  EXPECT_EQ(db[0].pitch_arrays[0], q13_8);
  EXPECT_EQ(db[0].pitch_arrays[1], q24_8);
  EXPECT_EQ(db[0].pitch_arrays[2], q13_8);
  EXPECT_EQ(db[0].pitch_arrays[3], q24_8);
  for (std::size_t i = 1; i < db.size(); ++i) {
    EXPECT_EQ(db[i].pitch_arrays[0], q13_11) << db[i].name;
    EXPECT_EQ(db[i].pitch_arrays[1], q24_11) << db[i].name;
    EXPECT_EQ(db[i].pitch_arrays[2], q13_11) << db[i].name;
    EXPECT_EQ(db[i].pitch_arrays[3], q24_11) << db[i].name;
  }
  for (const auto& r : db) {
    for (const auto& arr : r.pitch_arrays) {
      for (int p : arr) {
        EXPECT_GE(p, kLowestPitch);
        EXPECT_LE(p, kHighestPitch);
      }
    }
  }
}

TEST(MetreDb, CaesuraAlwaysIncludesQuarterEnd) {
  const MetreRecord r{"m", {8, 8, 8, 8}, std::nullopt, {4}, {}};
  EXPECT_EQ(r.caesuras_for(0), (std::vector<int>{4, 8}));
}

TEST(MetreDb, ParseErrors) {
  const std::string good =
      "name: X\nsyllables: 2,2,2,2\ncaesura: 2\npitch_q13: 0,1\npitch_q24: 1,0\n";
  EXPECT_EQ(parse_metre_db(good).size(), 1u);
  EXPECT_THROW(parse_metre_db("name: X\n"), MetreDbError);
  EXPECT_THROW(parse_metre_db("syllables 2,2,2,2\n"), MetreDbError);
  EXPECT_THROW(
      parse_metre_db("name: X\nsyllables: 2,2,2,2\ncaesura: 2\npitch_q13: 0,9\npitch_q24: 1,0\n"),
      MetreDbError);
  EXPECT_THROW(
      parse_metre_db("name: X\nsyllables: 2,2,2,2\ncaesura: 2\npitch_q13: 0\npitch_q24: 1,0\n"),
      MetreDbError);
  EXPECT_THROW(parse_metre_db(good + "pattern: 01,01,01,0q\n"), MetreDbError);
  EXPECT_THROW(load_metre_db("/nonexistent/metres.txt"), Error);
}

TEST(MetreDb, TextRoundTrip) {
  const auto parsed = parse_metre_db(builtin_metre_db_text());
  EXPECT_EQ(parsed, builtin_metre_db());
}

TEST(Classify, PatternsWithAnceps) {
  const auto& db = builtin_metre_db();
  const std::string indra = "11011001011";
  const std::string upendra = "01011001011";
  EXPECT_EQ(classify_metre({indra, indra, indra, indra}, db).name, "Indravajrā");
  EXPECT_EQ(classify_metre({upendra, upendra, upendra, upendra}, db).name, "Upendravajrā");
  EXPECT_EQ(classify_metre({indra, upendra, indra, indra}, db).name, "Upajāti");
  // Final syllable of a quarter may be light.
  EXPECT_EQ(classify_metre({"11011001010", indra, indra, indra}, db).name, "Indravajrā");
  EXPECT_EQ(classify_metre({"01010101", "11111111", "00000000", "10101010"}, db).name,
            "Anuṣṭup");
  EXPECT_THROW(classify_metre({"0", "0", "0", "0"}, db), NoMatchingMetre);
  EXPECT_THROW(classify_metre({"11111001011", indra, indra, indra}, db), NoMatchingMetre);
}

TEST(Analyze, SampleVerse) {
  const auto analysis = analyze_verse(units_of(oracle::kSampleVerse), builtin_metre_db());
  ASSERT_TRUE(analysis.metre);
  EXPECT_EQ(analysis.metre->name, "Upajāti");
  EXPECT_EQ(analysis.n_per_quarter, (std::vector<std::size_t>{11, 11, 11, 11}));
  EXPECT_EQ(analysis.pitches(1), (std::vector<int>{0, 1, 0, 0, 0, 0, -1, 0, 1, 1, 1}));
  EXPECT_EQ(analysis.caesuras(3), (std::vector<int>{11}));
}

TEST(Analyze, SegmentsUnmarkedVerseByCounts) {
  std::string flat = oracle::kSampleVerse;
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  flat.erase(std::remove(flat.begin(), flat.end(), '|'), flat.end());
  const auto analysis = analyze_verse(units_of(flat), builtin_metre_db());
  ASSERT_TRUE(analysis.metre);
  EXPECT_EQ(analysis.metre->name, "Upajāti");
  EXPECT_EQ(analysis.n_per_quarter, (std::vector<std::size_t>{11, 11, 11, 11}));
}

TEST(Analyze, NoMetre) {
  const auto units = units_of("rāma\nsītā\nhari\nom");
  EXPECT_THROW(analyze_verse(units, builtin_metre_db()), NoMatchingMetre);
  const auto flat = analyze_verse(units, builtin_metre_db(), {.require_metre = false});
  EXPECT_FALSE(flat.metre);
  EXPECT_EQ(flat.n_per_quarter, (std::vector<std::size_t>{2, 2, 2, 1}));
  EXPECT_EQ(flat.pitches(0), (std::vector<int>{0, 0}));
  EXPECT_THROW(analyze_verse({}, builtin_metre_db()), NoMatchingMetre);
}

TEST(Analyze, T_E_And_T_A_FromOracle) {
  const auto analysis = analyze_verse(units_of(oracle::kSampleVerse), builtin_metre_db());
  const std::vector<int> expected_te{18, 18, 17, 18};
  for (std::size_t q = 0; q < 4; ++q) {
    std::vector<int> v;
    for (const auto& u : analysis.quarters[q]) v.push_back(bit_of(u.contextual));
    EXPECT_EQ(oracle::beats_sum(v), expected_te[q]);
  }
}

}  // namespace
}  // namespace chant
