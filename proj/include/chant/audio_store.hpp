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

// Sources of per-unit audio clips.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "chant/audio_clip.hpp"
#include "chant/prosody.hpp"

namespace chant {

/// Beat length the original unit recordings were made at: laghu units were
/// held for one 2 s beat, guru units for two.
inline constexpr double kRecordingBeatSeconds = 2.0;
inline constexpr double kDefaultBeatSeconds = 0.5;
inline constexpr double kDefaultBaseFrequency = 220.0;

struct ClipRequest {
  std::string unit_text;
  Weight weight = Weight::Laghu;  // fixes the duration: 1 or 2 beats
  double beat_seconds = kDefaultBeatSeconds;
};

/// Frames a clip for `request` must have at `sample_rate`.
std::size_t expected_frames(const ClipRequest& request, int sample_rate);

class ClipProvider {
 public:
  virtual ~ClipProvider() = default;

  /// A clip of exactly expected_frames(request, sample_rate()) frames.
  virtual AudioClip get_clip(const ClipRequest& request) const = 0;
  virtual int sample_rate() const = 0;
};

/// Deterministic stand-in voice: a harmonic tone on a fixed fundamental,
/// shaped per vowel, with short noise bursts for the consonants before and
/// after it.
class SyntheticVoice final : public ClipProvider {
 public:
  explicit SyntheticVoice(double base_frequency = kDefaultBaseFrequency,
                          int sample_rate = kDefaultSampleRate);

  AudioClip get_clip(const ClipRequest& request) const override;
  int sample_rate() const override { return sample_rate_; }
  double base_frequency() const { return base_frequency_; }

 private:
  double base_frequency_;
  int sample_rate_;
};

/// Same as SyntheticVoice(base_frequency, sample_rate).get_clip(request).
AudioClip synth_clip(const ClipRequest& request, double base_frequency,
                     int sample_rate = kDefaultSampleRate);

/// Recorded units from a directory of `<unit>_<l|g>.wav` files (mono 16-bit
/// PCM, any rate). Files are resampled to the engine rate on load. Served
/// clips are fitted to the requested duration: differences under 5% are
/// padded or trimmed, larger ones time-stretched (up to 16x either way).
/// When only the other weight's recording exists it is stretched to fit.
class ClipDirectory final : public ClipProvider {
 public:
  /// Throws BadWav for malformed files and Error for an unreadable path.
  explicit ClipDirectory(const std::filesystem::path& dir,
                         int sample_rate = kDefaultSampleRate);

  /// Throws ClipUnavailable when the unit has no recording.
  AudioClip get_clip(const ClipRequest& request) const override;
  int sample_rate() const override { return sample_rate_; }
  std::size_t size() const { return clips_.size(); }

 private:
  struct Recording {
    AudioClip clip;
    std::filesystem::path path;
  };
  std::map<std::pair<std::string, Weight>, Recording> clips_;
  int sample_rate_;
};

std::unique_ptr<ClipProvider> load_clip_dir(const std::filesystem::path& dir,
                                            int sample_rate = kDefaultSampleRate);

/// Memoizes another provider for the duration of one render. Safe for
/// concurrent get_clip calls.
class ClipCache final : public ClipProvider {
 public:
  explicit ClipCache(const ClipProvider& inner) : inner_(inner) {}

  AudioClip get_clip(const ClipRequest& request) const override;
  int sample_rate() const override { return inner_.sample_rate(); }
  std::size_t size() const;
  void clear();

 private:
  using Key = std::tuple<std::string, Weight, double>;
  const ClipProvider& inner_;
  mutable std::mutex mutex_;
  mutable std::map<Key, AudioClip> clips_;
};

}  // namespace chant
