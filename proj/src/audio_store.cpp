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

#include "chant/audio_store.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "chant/dsp.hpp"
#include "chant/errors.hpp"
#include "chant/transliteration.hpp"
#include "chant/wav.hpp"

namespace chant {

std::size_t expected_frames(const ClipRequest& request, int sample_rate) {
  if (!(request.beat_seconds > 0)) {
    throw std::invalid_argument("beat_seconds must be positive");
  }
  return frames_for(beats_of(request.weight) * request.beat_seconds,
                    sample_rate);
}

// ---------------------------------------------------------------------------
// Synthetic voice

namespace {

constexpr double kFullScale = 32767.0;
constexpr double kTonePeak = 0.55;
constexpr double kNoisePeak = 0.2;
constexpr double kMaxPeak = 0.8;

// Widest duration change a recording may be fitted by.
constexpr double kMinFit = 1.0 / 16.0;
constexpr double kMaxFit = 16.0;

std::uint32_t fnv1a(std::string_view text, std::uint32_t salt) {
  std::uint32_t h = 2166136261u ^ salt;
  for (unsigned char c : text) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

// Relative amplitudes of harmonics 1-4. The fundamental always dominates.
std::array<double, 4> timbre(std::string_view vowel) {
  struct Entry {
    std::string_view vowel;
    std::array<double, 4> harmonics;
  };
  static constexpr Entry kTimbres[] = {
      {"a", {1.0, 0.55, 0.35, 0.20}},  {"ā", {1.0, 0.55, 0.35, 0.20}},
      {"i", {1.0, 0.25, 0.15, 0.30}},  {"ī", {1.0, 0.25, 0.15, 0.30}},
      {"u", {1.0, 0.40, 0.10, 0.05}},  {"ū", {1.0, 0.40, 0.10, 0.05}},
      {"ṛ", {1.0, 0.50, 0.40, 0.10}},  {"ṝ", {1.0, 0.50, 0.40, 0.10}},
      {"ḷ", {1.0, 0.45, 0.20, 0.20}},  {"e", {1.0, 0.35, 0.30, 0.25}},
      {"ai", {1.0, 0.50, 0.30, 0.30}}, {"o", {1.0, 0.50, 0.20, 0.10}},
      {"au", {1.0, 0.55, 0.25, 0.10}},
  };
  for (const auto& e : kTimbres) {
    if (e.vowel == vowel) return e.harmonics;
  }
  return {1.0, 0.5, 0.25, 0.125};
}

// Low-passed noise, coloured per letter so different consonants differ.
void add_burst(std::vector<double>& out, std::size_t begin, std::size_t length,
               const Letter& letter, std::uint32_t salt) {
  std::minstd_rand rng(fnv1a(letter.text, salt));
  const double colour =
      0.15 + 0.7 * static_cast<double>(fnv1a(letter.text, 7u) % 1000) / 1000.0;
  const double level = letter.category == Category::Consonant ||
                               letter.category == Category::Sibilant
                           ? kNoisePeak
                           : 0.6 * kNoisePeak;
  double state = 0.0;
  for (std::size_t n = 0; n < length && begin + n < out.size(); ++n) {
    const double white =
        2.0 * static_cast<double>(rng() - rng.min()) /
            static_cast<double>(rng.max() - rng.min()) -
        1.0;
    state += colour * (white - state);
    // Triangular envelope keeps the burst click-free.
    const double t = (static_cast<double>(n) + 0.5) / static_cast<double>(length);
    const double env = 1.0 - std::abs(2.0 * t - 1.0);
    out[begin + n] += level * env * std::clamp(state, -1.0, 1.0);
  }
}

}  // namespace

SyntheticVoice::SyntheticVoice(double base_frequency, int sample_rate)
    : base_frequency_(base_frequency), sample_rate_(sample_rate) {
  if (!(base_frequency >= 80.0 && base_frequency <= 1000.0)) {
    throw std::invalid_argument("base frequency must lie in [80, 1000] Hz");
  }
  if (sample_rate <= 0) throw std::invalid_argument("sample rate must be positive");
}

AudioClip SyntheticVoice::get_clip(const ClipRequest& request) const {
  const std::size_t frames = expected_frames(request, sample_rate_);

  LetterStream letters;
  try {
    letters = tokenize(request.unit_text);
  } catch (const Error&) {
    throw ClipUnavailable(request.unit_text);
  }
  const auto vowel = std::find_if(letters.letters.begin(), letters.letters.end(),
                                  [](const Letter& l) { return l.is_vowel(); });
  if (vowel == letters.letters.end() || !letters.word_breaks.empty()) {
    throw ClipUnavailable(request.unit_text);
  }
  const std::vector<Letter> onset(letters.letters.begin(), vowel);
  std::vector<Letter> coda;
  for (auto it = vowel + 1; it != letters.letters.end(); ++it) {
    if (!it->is_vowel()) coda.push_back(*it);
  }

  const double rate = sample_rate_;
  const auto harmonics = timbre(vowel->text);
  double weight_sum = 0.0;
  for (double h : harmonics) weight_sum += h;

  // Bursts take at most a fifth of the clip at each end.
  const std::size_t burst_cap = static_cast<std::size_t>(0.025 * rate);
  auto burst_length = [&](std::size_t count) -> std::size_t {
    if (count == 0) return 0;
    return std::min(burst_cap, frames / (5 * count));
  };
  const std::size_t onset_burst = burst_length(onset.size());
  const std::size_t coda_burst = burst_length(coda.size());
  const std::size_t onset_end = onset_burst * onset.size();
  const std::size_t coda_begin = frames - coda_burst * coda.size();

  const std::size_t attack =
      std::min<std::size_t>(static_cast<std::size_t>(0.02 * rate), frames / 8);
  const std::size_t release =
      std::min<std::size_t>(static_cast<std::size_t>(0.04 * rate), frames / 4);

  std::vector<double> signal(frames, 0.0);
  const double omega = 2.0 * std::numbers::pi * base_frequency_ / rate;
  for (std::size_t n = 0; n < frames; ++n) {
    double env = 1.0;
    if (attack > 0 && n < attack) env = static_cast<double>(n) / attack;
    if (release > 0 && n + release > frames) {
      env = std::min(env, static_cast<double>(frames - n) / release);
    }
    if (n < onset_end || n >= coda_begin) env *= 0.35;
    double tone = 0.0;
    for (std::size_t h = 0; h < harmonics.size(); ++h) {
      tone += harmonics[h] * std::sin(omega * static_cast<double>((h + 1) * n));
    }
    signal[n] = kTonePeak * env * tone / weight_sum;
  }
  for (std::size_t i = 0; i < onset.size(); ++i) {
    add_burst(signal, i * onset_burst, onset_burst, onset[i],
              static_cast<std::uint32_t>(i));
  }
  for (std::size_t i = 0; i < coda.size(); ++i) {
    add_burst(signal, coda_begin + i * coda_burst, coda_burst, coda[i],
              static_cast<std::uint32_t>(100 + i));
  }

  double peak = 0.0;
  for (double s : signal) peak = std::max(peak, std::abs(s));
  const double gain = peak > kMaxPeak ? kMaxPeak / peak : 1.0;

  AudioClip clip;
  clip.sample_rate = sample_rate_;
  clip.samples.resize(frames);
  for (std::size_t n = 0; n < frames; ++n) {
    clip.samples[n] = static_cast<std::int16_t>(
        std::lround(signal[n] * gain * kFullScale));
  }
  return clip;
}

AudioClip synth_clip(const ClipRequest& request, double base_frequency,
                     int sample_rate) {
  return SyntheticVoice(base_frequency, sample_rate).get_clip(request);
}

// ---------------------------------------------------------------------------
// Recorded clips

ClipDirectory::ClipDirectory(const std::filesystem::path& dir, int sample_rate)
    : sample_rate_(sample_rate) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error("clip directory " + dir.string() + " does not exist");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wav") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const std::string stem = path.stem().string();
    const auto underscore = stem.rfind('_');
    if (underscore == std::string::npos || underscore == 0 ||
        underscore + 2 != stem.size()) {
      continue;
    }
    const char tag = stem.back();
    if (tag != 'l' && tag != 'g') continue;
    const Weight weight = tag == 'g' ? Weight::Guru : Weight::Laghu;
    const std::string unit = normalize(std::string_view(stem).substr(0, underscore));
    clips_[{unit, weight}] =
        Recording{dsp::resample(read_wav(path), sample_rate_), path};
  }
}

AudioClip ClipDirectory::get_clip(const ClipRequest& request) const {
  const std::size_t expected = expected_frames(request, sample_rate_);
  const std::string unit = normalize(request.unit_text);
  const Weight other =
      request.weight == Weight::Guru ? Weight::Laghu : Weight::Guru;

  auto found = clips_.find({unit, request.weight});
  if (found == clips_.end()) found = clips_.find({unit, other});
  if (found == clips_.end()) throw ClipUnavailable(request.unit_text);

  const AudioClip& clip = found->second.clip;
  const std::size_t actual = clip.frames();
  if (actual == expected) return clip;

  const double mismatch =
      std::abs(static_cast<double>(actual) - static_cast<double>(expected)) /
      static_cast<double>(expected);
  if (mismatch < 0.05) {
    AudioClip fitted = clip;
    fitted.samples.resize(expected, 0);
    return fitted;
  }
  const double factor =
      static_cast<double>(expected) / static_cast<double>(std::max<std::size_t>(actual, 1));
  if (actual == 0 || factor < kMinFit || factor > kMaxFit) {
    throw BadWav(found->second.path.string(),
                 "duration cannot be fitted to " + std::to_string(expected) +
                     " frames");
  }
  // Large changes are made in steps the stretcher accepts.
  AudioClip fitted = clip;
  while (fitted.frames() != expected) {
    const double step = std::clamp(
        static_cast<double>(expected) / static_cast<double>(fitted.frames()),
        dsp::kMinStretch, dsp::kMaxStretch);
    const auto target = static_cast<std::size_t>(
        std::llround(static_cast<double>(fitted.frames()) * step));
    fitted = dsp::time_stretch_to(
        fitted, step == dsp::kMinStretch || step == dsp::kMaxStretch ? target : expected);
  }
  return fitted;
}

std::unique_ptr<ClipProvider> load_clip_dir(const std::filesystem::path& dir,
                                            int sample_rate) {
  return std::make_unique<ClipDirectory>(dir, sample_rate);
}

// ---------------------------------------------------------------------------
// Cache

AudioClip ClipCache::get_clip(const ClipRequest& request) const {
  Key key{request.unit_text, request.weight, request.beat_seconds};
  {
    std::lock_guard lock(mutex_);
    if (auto it = clips_.find(key); it != clips_.end()) return it->second;
  }
  AudioClip clip = inner_.get_clip(request);
  std::lock_guard lock(mutex_);
  // A concurrent caller may have inserted an equal clip meanwhile.
  clips_.try_emplace(std::move(key), clip);
  return clip;
}

std::size_t ClipCache::size() const {
  std::lock_guard lock(mutex_);
  return clips_.size();
}

void ClipCache::clear() {
  std::lock_guard lock(mutex_);
  clips_.clear();
}

}  // namespace chant
