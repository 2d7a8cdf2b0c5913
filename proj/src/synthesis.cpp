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

#include "chant/synthesis.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "chant/dsp.hpp"
#include "chant/errors.hpp"
#include "chant/sandhi.hpp"
#include "chant/wav.hpp"

namespace chant {

void Config::validate() const {
  if (!(beat_seconds > 0)) throw std::invalid_argument("beat must be positive");
  if (sample_rate <= 0) throw std::invalid_argument("sample rate must be positive");
  if (!(base_freq > 0)) throw std::invalid_argument("base frequency must be positive");
  if (crossfade_ms < 0) throw std::invalid_argument("crossfade must not be negative");
  if (clip_dir && !std::filesystem::is_directory(*clip_dir)) {
    throw std::invalid_argument("clip directory " + clip_dir->string() +
                                " does not exist");
  }
}

std::size_t Config::crossfade_frames() const {
  return crossfade ? dsp::crossfade_frames(crossfade_ms, sample_rate) : 0;
}

int expected_time(std::span<const Weight> contextual) {
  return std::accumulate(contextual.begin(), contextual.end(), 0,
                         [](int sum, Weight w) { return sum + bit_of(w) + 1; });
}

int actual_time(std::span<const Weight> isolated) {
  return expected_time(isolated);
}

std::vector<TimedUnit> adjust_beat(std::vector<TimedUnit> units) {
  for (auto& u : units) {
    u.render_beats = bit_of(u.isolated) + 1;
    u.trailing_silence_beats = 0;
    if (bit_of(u.isolated) < bit_of(u.contextual)) {
      // Silence may not break a word, so inside one the unit is held.
      if (u.unit.word_final) {
        u.trailing_silence_beats = 1;
      } else {
        u.render_beats = bit_of(u.contextual) + 1;
      }
    }
  }
  return units;
}

std::vector<TimedUnit> time_quarter(const VerseAnalysis& analysis,
                                    std::size_t quarter) {
  const auto& units = analysis.quarters.at(quarter);
  const auto pitches = analysis.pitches(quarter);
  if (pitches.size() < units.size()) {
    throw Error("quarter " + std::to_string(quarter + 1) + " has " +
                std::to_string(units.size()) + " units but only " +
                std::to_string(pitches.size()) + " pitch values");
  }
  std::vector<TimedUnit> timed;
  timed.reserve(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    TimedUnit t;
    t.unit = units[i].unit;
    t.isolated = units[i].isolated;
    t.contextual = units[i].contextual;
    t.pitch = pitches[i];
    timed.push_back(std::move(t));
  }
  return adjust_beat(std::move(timed));
}

std::vector<AudioClip> quarter_pieces(std::span<const TimedUnit> timed,
                                      std::span<const int> caesuras,
                                      const ClipProvider& store,
                                      const Config& config) {
  std::vector<AudioClip> pieces;
  const AudioClip beat_of_silence =
      dsp::silence(1, config.beat_seconds, store.sample_rate());
  for (std::size_t i = 0; i < timed.size(); ++i) {
    const TimedUnit& u = timed[i];
    const ClipRequest request{
        u.unit.text(), u.render_beats == 2 ? Weight::Guru : Weight::Laghu,
        config.beat_seconds};
    AudioClip clip = store.get_clip(request);
    if (config.apply_pitch) clip = dsp::pitch_shift(clip, u.pitch);
    pieces.push_back(std::move(clip));
    for (int s = 0; s < u.trailing_silence_beats; ++s) {
      pieces.push_back(beat_of_silence);
    }
    const int position = static_cast<int>(i) + 1;
    if (std::find(caesuras.begin(), caesuras.end(), position) != caesuras.end()) {
      pieces.push_back(beat_of_silence);
    }
  }
  return pieces;
}

AudioClip render_quarter(const VerseAnalysis& analysis, std::size_t quarter,
                         const ClipProvider& store, const Config& config) {
  const auto timed = time_quarter(analysis, quarter);
  const auto caesuras = analysis.caesuras(quarter);
  const auto pieces = quarter_pieces(timed, caesuras, store, config);
  return dsp::concat(pieces, config.crossfade_frames());
}

std::vector<MetreRecord> metre_db_for(const Config& config) {
  if (config.metre_db_path) return load_metre_db(*config.metre_db_path);
  return builtin_metre_db();
}

namespace {

template <typename F>
auto stage(const char* name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    std::throw_with_nested(PipelineError(name, e.what()));
  }
}

}  // namespace

Synthesis scan(std::string_view verse_text, const Config& config) {
  Synthesis s;
  stage("configuration", [&] { config.validate(); });

  s.latin = stage("transliteration", [&] {
    const bool devanagari =
        config.script == Script::Devanagari ||
        (config.script == Script::Auto && contains_devanagari(verse_text));
    return devanagari ? devanagari_to_latin(verse_text) : std::string(verse_text);
  });
  auto stream = stage("tokenization", [&] { return tokenize(s.latin); });
  if (stream.letters.empty()) {
    throw PipelineError("metre identification", "empty verse");
  }
  s.corrected = stage("sandhi correction",
                      [&] { return sandhi::apply_all(std::move(stream)); });
  s.units = stage("unit split", [&] { return split_into_units(s.corrected); });
  s.analysis = stage("metre identification", [&] {
    const auto db = metre_db_for(config);
    AnalysisOptions options;
    options.weights.promote_prbrkrh = config.promote_prbrkrh;
    options.require_metre = config.require_metre;
    return analyze_verse(s.units, db, options);
  });
  s.timed = stage("beat adjustment", [&] {
    std::vector<std::vector<TimedUnit>> timed;
    for (std::size_t q = 0; q < s.analysis.quarters.size(); ++q) {
      timed.push_back(time_quarter(s.analysis, q));
    }
    return timed;
  });
  return s;
}

Synthesis synthesize(std::string_view verse_text, const Config& config,
                     const ClipProvider* store,
                     const std::optional<std::filesystem::path>& output) {
  Synthesis s = scan(verse_text, config);

  std::unique_ptr<ClipProvider> owned;
  if (store == nullptr) {
    owned = stage("clip retrieval", [&]() -> std::unique_ptr<ClipProvider> {
      if (config.clip_dir) return load_clip_dir(*config.clip_dir, config.sample_rate);
      return std::make_unique<SyntheticVoice>(config.base_freq, config.sample_rate);
    });
    store = owned.get();
  }
  const ClipCache cache(*store);

  const std::size_t quarters = s.timed.size();
  std::vector<std::vector<AudioClip>> pieces(quarters);
  stage("clip retrieval", [&] {
    auto render = [&](std::size_t q) {
      const auto caesuras = s.analysis.caesuras(q);
      return quarter_pieces(s.timed[q], caesuras, cache, config);
    };
    if (config.parallel && quarters > 1) {
      std::vector<std::future<std::vector<AudioClip>>> jobs;
      for (std::size_t q = 0; q < quarters; ++q) {
        jobs.push_back(std::async(std::launch::async, render, q));
      }
      for (std::size_t q = 0; q < quarters; ++q) pieces[q] = jobs[q].get();
    } else {
      for (std::size_t q = 0; q < quarters; ++q) pieces[q] = render(q);
    }
  });

  stage("concatenation", [&] {
    std::vector<AudioClip> all;
    for (auto& q : pieces) {
      for (auto& piece : q) all.push_back(std::move(piece));
    }
    s.joins = all.empty() ? 0 : all.size() - 1;
    s.audio = dsp::concat(all, config.crossfade_frames());
  });

  if (output) stage("output", [&] { write_wav(s.audio, *output); });
  return s;
}

}  // namespace chant
