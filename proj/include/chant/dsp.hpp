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

// Clip-level signal processing: time-preserving pitch shift, pitch-preserving
// time stretch (WSOLA), silence, concatenation and resampling.

#pragma once

#include <cstddef>
#include <span>

#include "chant/audio_clip.hpp"

namespace chant::dsp {

inline constexpr int kMaxShiftSemitones = 12;
inline constexpr double kMinStretch = 0.5;
inline constexpr double kMaxStretch = 4.0;

/// Frequency ratio of an equal-tempered interval.
double semitone_ratio(double semitones);

/// Scales every frequency by 2^(semitones/12) and keeps the length. A zero
/// shift returns the clip unchanged. |semitones| must not exceed 12.
AudioClip pitch_shift(const AudioClip& clip, int semitones);

/// Changes the duration by `factor` in [0.5, 4] without changing pitch.
/// Factor 1 returns the clip unchanged.
AudioClip time_stretch(const AudioClip& clip, double factor);

/// Stretches to exactly `frames` samples; the implied factor must lie in
/// [0.5, 4].
AudioClip time_stretch_to(const AudioClip& clip, std::size_t frames);

AudioClip silence(int beats, double beat_seconds, int sample_rate);

/// Joins clips end to end. With crossfade_frames > 0 each join overlaps the
/// neighbours with an equal-power fade, shortening the result by the overlap
/// (clamped to the shorter neighbour). Throws SampleRateMismatch.
AudioClip concat(std::span<const AudioClip> clips,
                 std::size_t crossfade_frames = 0);

/// Linear-interpolation resampling.
AudioClip resample(const AudioClip& clip, int sample_rate);

/// Equal-power crossfade length used by the renderer, in frames.
std::size_t crossfade_frames(double milliseconds, int sample_rate);

double rms(const AudioClip& clip);

}  // namespace chant::dsp
