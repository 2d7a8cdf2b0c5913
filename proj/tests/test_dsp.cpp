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

#include <cmath>
#include <stdexcept>

#include "chant/dsp.hpp"
#include "chant/errors.hpp"
#include "oracles.hpp"

namespace chant {
namespace {

constexpr int kRate = 44100;

AudioClip tone(double freq, double seconds) {
  return AudioClip{oracle::sine(freq, seconds, kRate), kRate};
}

TEST(Dsp, ZeroShiftAndUnitStretchAreIdentity) {
  const auto clip = tone(440, 0.3);
  EXPECT_EQ(dsp::pitch_shift(clip, 0), clip);
  EXPECT_EQ(dsp::time_stretch(clip, 1.0), clip);
  EXPECT_EQ(dsp::time_stretch_to(clip, clip.frames()), clip);
}

TEST(Dsp, PitchShiftMovesPeakAndKeepsLength) {
  const auto clip = tone(440, 0.5);
  for (int s : {-12, -7, -3, 2, 4, 7, 12}) {
    const auto shifted = dsp::pitch_shift(clip, s);
    EXPECT_EQ(shifted.frames(), clip.frames()) << s;
    const double target = 440.0 * std::pow(2.0, s / 12.0);
    const double peak = oracle::peak_frequency(shifted.samples, kRate, target / 1.5, target * 1.5);
    EXPECT_NEAR(peak, target, 0.01 * target) << s;
  }
}

TEST(Dsp, PitchShiftRange) {
  const auto clip = tone(440, 0.1);
  EXPECT_THROW(dsp::pitch_shift(clip, 13), std::invalid_argument);
  EXPECT_THROW(dsp::pitch_shift(clip, -13), std::invalid_argument);
  EXPECT_DOUBLE_EQ(dsp::semitone_ratio(12), 2.0);
}

TEST(Dsp, TimeStretchKeepsPitch) {
  const auto clip = tone(330, 0.5);
  for (double f : {0.5, 0.8, 1.5, 2.0, 3.0}) {
    const auto out = dsp::time_stretch(clip, f);
    EXPECT_NEAR(static_cast<double>(out.frames()), f * static_cast<double>(clip.frames()), 1.0);
    const double peak = oracle::peak_frequency(out.samples, kRate, 200, 500);
    EXPECT_NEAR(peak, 330.0, 3.3) << f;
  }
  EXPECT_THROW(dsp::time_stretch(clip, 0.4), std::invalid_argument);
  EXPECT_THROW(dsp::time_stretch(clip, 4.5), std::invalid_argument);
  EXPECT_EQ(dsp::time_stretch_to(clip, 30000).frames(), 30000u);
}

TEST(Dsp, StretchPreservesLevel) {
  const auto clip = tone(440, 0.5);
  const double before = dsp::rms(clip);
  const double after = dsp::rms(dsp::time_stretch(clip, 2.0));
  EXPECT_NEAR(after / before, 1.0, 0.1);
}

TEST(Dsp, Silence) {
  const auto s = dsp::silence(3, 0.5, kRate);
  EXPECT_EQ(s.frames(), 66150u);
  EXPECT_EQ(dsp::rms(s), 0.0);
  EXPECT_THROW(dsp::silence(0, 0.5, kRate), std::invalid_argument);
}

TEST(Dsp, ConcatLengthsAndCrossfade) {
  const auto a = tone(440, 0.1);
  const auto b = tone(660, 0.2);
  const std::vector<AudioClip> clips{a, b, a};
  EXPECT_EQ(dsp::concat(clips).frames(), 2 * a.frames() + b.frames());
  EXPECT_EQ(dsp::concat(clips, 221).frames(), 2 * a.frames() + b.frames() - 2 * 221);
  // Overlap is clamped to the shorter neighbour.
  const std::vector<AudioClip> tiny{AudioClip{{1, 2, 3}, kRate}, AudioClip{{4, 5}, kRate}};
  EXPECT_EQ(dsp::concat(tiny, 100).frames(), 3u);
  const std::vector<AudioClip> mixed{a, AudioClip{{}, 22050}};
  EXPECT_THROW(dsp::concat(mixed), SampleRateMismatch);
  EXPECT_EQ(dsp::crossfade_frames(5, kRate), 221u);
  EXPECT_EQ(dsp::crossfade_frames(0, kRate), 0u);
}

TEST(Dsp, EqualPowerCrossfadeIsSmooth) {
  // Two identical constant-level DC clips: an equal-power fade of correlated
  // signals peaks at sqrt(2) in the middle and never drops below the level.
  const AudioClip a{std::vector<std::int16_t>(1000, 1000), kRate};
  const std::vector<AudioClip> clips{a, a};
  const auto out = dsp::concat(clips, 200);
  for (std::size_t i = 800; i < 1000; ++i) {
    EXPECT_GE(out.samples[i], 999);
    EXPECT_LE(out.samples[i], 1415);
  }
}

TEST(Dsp, Resample) {
  const auto clip = tone(440, 0.5);
  const auto down = dsp::resample(clip, 22050);
  EXPECT_EQ(down.sample_rate, 22050);
  EXPECT_NEAR(static_cast<double>(down.frames()), clip.frames() / 2.0, 1.0);
  EXPECT_NEAR(oracle::peak_frequency(down.samples, 22050, 300, 600), 440.0, 2.0);
  EXPECT_EQ(dsp::resample(clip, kRate), clip);
}

}  // namespace
}  // namespace chant
