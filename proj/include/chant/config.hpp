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

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>

#include "chant/audio_store.hpp"

namespace chant {

enum class Script { Auto, Latin, Devanagari };

/// Engine settings shared by the library, the CLI and the Python module.
struct Config {
  double beat_seconds = kDefaultBeatSeconds;
  int sample_rate = kDefaultSampleRate;
  double base_freq = kDefaultBaseFrequency;
  bool crossfade = true;
  double crossfade_ms = 5.0;
  bool promote_prbrkrh = false;
  std::optional<std::filesystem::path> metre_db_path;
  std::optional<std::filesystem::path> clip_dir;
  bool require_metre = true;
  Script script = Script::Auto;
  bool apply_pitch = true;
  bool parallel = true;

  /// Throws std::invalid_argument.
  void validate() const;

  /// Overlap applied at every join, zero when crossfading is off.
  std::size_t crossfade_frames() const;
};

}  // namespace chant
