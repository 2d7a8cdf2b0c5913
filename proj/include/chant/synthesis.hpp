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

// The full verse pipeline: transliteration, sandhi correction, unit split,
// metre identification, beat adjustment, pitch application and rendering.

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chant/audio_clip.hpp"
#include "chant/audio_store.hpp"
#include "chant/config.hpp"
#include "chant/prosody.hpp"
#include "chant/transliteration.hpp"
#include "chant/unit_splitter.hpp"

namespace chant {

struct TimedUnit {
  Unit unit;
  Weight isolated = Weight::Laghu;
  Weight contextual = Weight::Laghu;
  int pitch = 0;
  int render_beats = 1;
  int trailing_silence_beats = 0;
};

/// Beats the quarter should take: sum of (v + 1).
int expected_time(std::span<const Weight> contextual);
/// Beats the units take on their own: sum of (t + 1).
int actual_time(std::span<const Weight> isolated);

/// Makes each unit that is lighter on its own than in context fill its
/// expected beats: a word-final unit is followed by one beat of silence, any
/// other unit is held for the extra beat. Afterwards the rendered beats plus
/// silences sum to expected_time().
std::vector<TimedUnit> adjust_beat(std::vector<TimedUnit> units);

/// Timed units of quarter q with pitches assigned.
std::vector<TimedUnit> time_quarter(const VerseAnalysis& analysis,
                                    std::size_t quarter);

/// Clips and silences of one quarter in playback order, before joining.
std::vector<AudioClip> quarter_pieces(std::span<const TimedUnit> timed,
                                      std::span<const int> caesuras,
                                      const ClipProvider& store,
                                      const Config& config);

/// One quarter rendered: a clip per unit pitched by its note value, extra
/// silences from adjust_beat, and one beat of silence at each caesura.
AudioClip render_quarter(const VerseAnalysis& analysis, std::size_t quarter,
                         const ClipProvider& store, const Config& config);

struct Synthesis {
  std::string latin;
  LetterStream corrected;
  std::vector<Unit> units;
  VerseAnalysis analysis;
  std::vector<std::vector<TimedUnit>> timed;
  AudioClip audio;
  // Number of joins between pieces in `audio`.
  std::size_t joins = 0;
};

/// Runs everything up to (not including) audio rendering.
Synthesis scan(std::string_view verse_text, const Config& config);

/// Renders the verse. Uses `store` when given, otherwise the clip directory
/// from the config or the synthetic voice. Writes `output` when set.
/// Failures are rethrown as PipelineError naming the stage, with the
/// original exception nested.
Synthesis synthesize(std::string_view verse_text, const Config& config,
                     const ClipProvider* store = nullptr,
                     const std::optional<std::filesystem::path>& output = std::nullopt);

/// Metre database named by the config, or the built-in one.
std::vector<MetreRecord> metre_db_for(const Config& config);

}  // namespace chant
