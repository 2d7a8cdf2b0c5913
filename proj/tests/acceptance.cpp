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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chant/dsp.hpp"
#include "chant/sandhi.hpp"
#include "chant/synthesis.hpp"
#include "chant/wav.hpp"
#include "oracles.hpp"

namespace {

using namespace chant;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream why;

  template <typename A, typename B>
  void eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) fail(what);
  }
  void that(bool condition, const std::string& what) {
    if (!condition) fail(what);
  }
  void fail(const std::string& what) {
    if (!ok) why << "; ";
    ok = false;
    why << what;
  }
};

std::vector<std::string> unit_texts(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& u : split_into_units(sandhi::apply_all(tokenize(text)))) {
    out.push_back(u.text());
  }
  return out;
}

std::string fixed(std::string_view text) { return sandhi::apply_all(tokenize(text)).render(); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* const kQuarterOne = "vande gurūṇāṃ caraṇāravinde";

void unit_split_golden(Check& c) {
  const auto start = Clock::now();
  c.eq(unit_texts(kQuarterOne),
       std::vector<std::string>{"van", "de", "gu", "rū", "ṇāṃ", "ca", "ra", "ṇā", "ra", "vin", "de"},
       "quarter 1 units");
  c.eq(unit_texts("kārtsnyam"), std::vector<std::string>{"kārt", "snyam"}, "kārtsnyam");
  c.eq(unit_texts("kāryam"), std::vector<std::string>{"kār", "yam"}, "kāryam");
  c.eq(unit_texts("ajñā"), std::vector<std::string>{"a", "jñā"}, "ajñā");
  c.eq(unit_texts("sapriyaḥ"), std::vector<std::string>{"sa", "pri", "yaḥ"}, "sapriyaḥ");
  c.eq(unit_texts("gurūṇām").front(), std::string("gu"), "gurūṇām");
  c.that(seconds_since(start) < 1.0, "runtime over 1 s");
}

void weight_vectors(Check& c) {
  const auto weighted = weigh_units(split_into_units(sandhi::apply_all(tokenize(kQuarterOne))));
  std::vector<int> t, v;
  for (const auto& w : weighted) {
    t.push_back(bit_of(w.isolated));
    v.push_back(bit_of(w.contextual));
  }
  c.eq(v, std::vector<int>{1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1}, "contextual v");
  c.eq(t, std::vector<int>{0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1}, "isolated t");
  c.eq(oracle::beats_sum(v), 18, "T_E oracle");
  c.eq(oracle::beats_sum(t), 16, "T_A oracle");
  std::vector<Weight> vw, tw;
  for (const auto& w : weighted) {
    vw.push_back(w.contextual);
    tw.push_back(w.isolated);
  }
  c.eq(expected_time(vw), 18, "T_E");
  c.eq(actual_time(tw), 16, "T_A");
}

void sandhi_corrections(Check& c) {
  c.eq(fixed("vahni"), std::string("vanhi"), "vahni");
  c.eq(fixed("samnyāsa"), std::string("sannyāsa"), "samnyāsa");
  const auto merged = sandhi::apply_all(tokenize("namaḥ śivāya"));
  c.eq(merged.render(), std::string("namaśśivāya"), "namaḥ śivāya");
  c.eq(merged.words().size(), std::size_t{1}, "namaśśivāya is one word");
  c.eq(fixed("rāmaḥ karoti"), std::string("rāmaz karoti"), "visarga + k");
  c.eq(fixed("rāmaḥ pibati"), std::string("rāmaf pibati"), "visarga + p");
}

void pitch_tables(Check& c) {
  const auto db = load_metre_db(CHANT_METRE_DB);
  const MetreRecord* anustup = nullptr;
  std::vector<const MetreRecord*> elevens;
  for (const auto& r : db) {
    if (r.name == "Anuṣṭup") anustup = &r;
    if (r.syllables_per_quarter == std::array<int, 4>{11, 11, 11, 11}) elevens.push_back(&r);
  }
  c.that(anustup != nullptr, "Anuṣṭup record");
  c.that(!elevens.empty(), "11-syllable records");
  const std::vector<int> t3_13{0, 1, 1, 2, 2, 0, 1, 1}, t3_24{0, 1, -1, 0, 0, 1, 1, 1};
  const std::vector<int> t4_13{0, 0, 1, 2, 2, 0, 0, 1, -1, 0, -1};
  const std::vector<int> t4_24{0, 1, 0, 0, 0, 0, -1, 0, 1, 1, 1};
  if (anustup) {
    for (std::size_t q = 0; q < 4; ++q) {
      const auto p = pitch_array(*anustup, q);
      c.eq(std::vector<int>(p.begin(), p.end()), q % 2 == 0 ? t3_13 : t3_24,
           "8-syllable quarter " + std::to_string(q + 1));
    }
  }
  for (const auto* r : elevens) {
    for (std::size_t q = 0; q < 4; ++q) {
      const auto p = pitch_array(*r, q);
      c.eq(std::vector<int>(p.begin(), p.end()), q % 2 == 0 ? t4_13 : t4_24,
           r->name + " quarter " + std::to_string(q + 1));
    }
  }
  for (const auto& r : db) {
    for (const auto& a : r.pitch_arrays) {
      for (int p : a) c.that(p >= -7 && p <= 4, r.name + " value out of range");
    }
  }
}

void dsp_laws(Check& c) {
  const auto start = Clock::now();
  constexpr int kRate = 44100;
  const AudioClip tone{oracle::sine(440, 1.0, kRate), kRate};
  for (int s = -7; s <= 4; ++s) {
    const auto out = dsp::pitch_shift(tone, s);
    const double target = 440.0 * std::pow(2.0, s / 12.0);
    const double peak = oracle::peak_frequency(out.samples, kRate, target / 1.5, target * 1.5);
    c.that(std::abs(peak - target) <= 0.01 * target,
           "shift " + std::to_string(s) + " peak " + std::to_string(peak));
    c.that(std::abs(static_cast<long>(out.frames()) - static_cast<long>(tone.frames())) <= 1,
           "shift " + std::to_string(s) + " length");
  }
  const auto stretched = dsp::time_stretch(tone, 2.0);
  c.that(std::abs(static_cast<long>(stretched.frames()) - 2 * static_cast<long>(tone.frames())) <= 1,
         "stretch length");
  const double peak = oracle::peak_frequency(stretched.samples, kRate, 300, 600);
  c.that(std::abs(peak - 440.0) <= 4.4, "stretch peak " + std::to_string(peak));
  const double elapsed = seconds_since(start);
  c.that(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
}

void beat_conservation(Check& c) {
  std::mt19937 rng(2026);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 24)(rng);
    std::vector<TimedUnit> units(static_cast<std::size_t>(n));
    std::vector<int> v;
    for (auto& u : units) {
      const int vb = std::uniform_int_distribution<int>(0, 1)(rng);
      const int tb = vb ? std::uniform_int_distribution<int>(0, 1)(rng) : 0;
      u.isolated = tb ? Weight::Guru : Weight::Laghu;
      u.contextual = vb ? Weight::Guru : Weight::Laghu;
      u.unit.word_final = std::bernoulli_distribution(0.4)(rng);
      v.push_back(vb);
    }
    units.back().unit.word_final = true;
    int beats = 0;
    for (const auto& u : adjust_beat(units)) beats += u.render_beats + u.trailing_silence_beats;
    if (beats != oracle::beats_sum(v)) ++failures;
  }
  c.eq(failures, 0, std::to_string(failures) + " of 1000 cases");
}

void end_to_end_duration(Check& c) {
  const auto start = Clock::now();
  Config config;
  config.beat_seconds = 0.5;
  const auto path = std::filesystem::temp_directory_path() / "chant_acceptance_verse.wav";
  const auto s = synthesize(oracle::kSampleVerse, config, nullptr, path);
  const double elapsed = seconds_since(start);
  c.that(s.analysis.metre && s.analysis.metre->name == "Upajāti", "metre");
  c.eq(s.timed.size(), std::size_t{4}, "quarters");
  // Duration formula: sum over quarters of T_E plus one beat for the
  // quarter-end caesura.
  long beats = 0;
  for (std::size_t q = 0; q < 4; ++q) {
    std::vector<int> v;
    for (const auto& u : s.timed[q]) v.push_back(bit_of(u.contextual));
    beats += oracle::beats_sum(v);
    beats += 1;
  }
  const auto wav = read_wav(path);
  std::filesystem::remove(path);
  const long expected = std::lround(static_cast<double>(beats) * 0.5 * wav.sample_rate);
  const long slack = static_cast<long>(s.joins * config.crossfade_frames());
  const long frames = static_cast<long>(wav.frames());
  c.that(std::abs(frames - expected) <= slack,
         "frames " + std::to_string(frames) + " vs " + std::to_string(expected) + " +- " +
             std::to_string(slack));
  c.that(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
}

void lossless_split(Check& c) {
  std::mt19937 rng(8);
  int failures = 0;
  std::string example;
  for (int i = 0; i < 1000; ++i) {
    const auto letters = oracle::random_word(rng);
    std::string text;
    for (const auto& l : letters) text += l;
    try {
      const auto units = split_into_units(tokenize(text));
      std::string rebuilt;
      bool one_nucleus = true;
      for (const auto& u : units) {
        rebuilt += u.text();
        one_nucleus = one_nucleus && u.vowel.is_vowel();
        for (const auto& l : u.pre_vowel) one_nucleus = one_nucleus && !l.is_vowel();
        for (const auto& l : u.post_vowel) one_nucleus = one_nucleus && !l.is_vowel();
      }
      const auto vowels = static_cast<std::size_t>(
          std::count_if(letters.begin(), letters.end(),
                        [](const std::string& l) { return oracle::is_vowel_text(l); }));
      if (rebuilt != text || !one_nucleus || units.size() != vowels) {
        ++failures;
        example = text;
      }
    } catch (const std::exception& e) {
      ++failures;
      example = text + " (" + e.what() + ")";
    }
  }
  c.eq(failures, 0, std::to_string(failures) + " of 1000 cases, e.g. " + example);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"unit-split golden set", unit_split_golden},
      {"weight vectors", weight_vectors},
      {"sandhi corrections", sandhi_corrections},
      {"pitch tables", pitch_tables},
      {"DSP laws", dsp_laws},
      {"beat conservation", beat_conservation},
      {"end-to-end duration", end_to_end_duration},
      {"lossless split", lossless_split},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                c.ok ? "" : ": ", c.why.str().c_str());
    if (!c.ok) ++failed;
  }
  return failed;
}
