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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace chant {

inline constexpr int kDefaultSampleRate = 44100;

/// Mono 16-bit PCM buffer.
struct AudioClip {
  std::vector<std::int16_t> samples;
  int sample_rate = kDefaultSampleRate;

  std::size_t frames() const { return samples.size(); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }

  friend bool operator==(const AudioClip&, const AudioClip&) = default;
};

/// Frames covering `seconds` at `sample_rate`, rounded to nearest.
inline std::size_t frames_for(double seconds, int sample_rate) {
  return static_cast<std::size_t>(std::llround(seconds * sample_rate));
}

}  // namespace chant
