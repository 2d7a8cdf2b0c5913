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

#include "chant/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "chant/errors.hpp"

namespace chant::dsp {

namespace {

std::vector<float> to_float(const AudioClip& clip) {
  std::vector<float> out(clip.samples.size());
  std::transform(clip.samples.begin(), clip.samples.end(), out.begin(),
                 [](std::int16_t s) { return static_cast<float>(s); });
  return out;
}

AudioClip from_float(std::span<const float> samples, int sample_rate) {
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(samples.size());
  std::transform(samples.begin(), samples.end(), clip.samples.begin(),
                 [](float s) {
                   const float r = std::nearbyint(s);
                   return static_cast<std::int16_t>(
                       std::clamp(r, -32768.0f, 32767.0f));
                 });
  return clip;
}

float interpolate(std::span<const float> x, double position) {
  if (x.empty() || position < 0) return 0.0f;
  const auto i = static_cast<std::size_t>(position);
  if (i + 1 >= x.size()) return i < x.size() ? x[i] : 0.0f;
  const auto frac = static_cast<float>(position - static_cast<double>(i));
  return x[i] + (x[i + 1] - x[i]) * frac;
}

std::vector<float> resample_linear(std::span<const float> x, double step,
                                   std::size_t length) {
  std::vector<float> out(length);
  for (std::size_t n = 0; n < length; ++n) {
    out[n] = interpolate(x, static_cast<double>(n) * step);
  }
  return out;
}

// Analysis frame of roughly 23-30 ms, a power of two.
std::size_t frame_length(int sample_rate) {
  std::size_t length = 256;
  while (static_cast<double>(length * 2) <= 0.03 * sample_rate) length *= 2;
  return length;
}

// Waveform-similarity overlap-add: frames are read from the input at the
// stretched hop, each nudged within a tolerance window to the offset whose
// content best continues the previously copied frame.
std::vector<float> wsola(std::span<const float> x, std::size_t out_length,
                         int sample_rate) {
  std::vector<float> y(out_length, 0.0f);
  if (x.empty() || out_length == 0) return y;

  const auto frame = static_cast<std::ptrdiff_t>(frame_length(sample_rate));
  const std::ptrdiff_t hop = frame / 2;
  const std::ptrdiff_t tolerance = frame / 4;
  constexpr std::ptrdiff_t kCorrelationStride = 4;
  const double input_hop =
      static_cast<double>(hop) * static_cast<double>(x.size()) /
      static_cast<double>(out_length);

  const auto input_length = static_cast<std::ptrdiff_t>(x.size());
  // Input is addressed with a lead-in of one hop of zeros.
  auto sample = [&](std::ptrdiff_t padded) -> float {
    const std::ptrdiff_t i = padded - hop;
    return i >= 0 && i < input_length ? x[static_cast<std::size_t>(i)] : 0.0f;
  };

  std::vector<float> window(static_cast<std::size_t>(frame));
  for (std::ptrdiff_t n = 0; n < frame; ++n) {
    window[static_cast<std::size_t>(n)] = static_cast<float>(
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                             static_cast<double>(frame)));
  }

  const auto padded_out = static_cast<std::ptrdiff_t>(out_length) + hop;
  std::vector<float> acc(static_cast<std::size_t>(padded_out + frame), 0.0f);
  std::vector<float> weight(acc.size(), 0.0f);

  auto correlation = [&](std::ptrdiff_t a, std::ptrdiff_t b) {
    double sum = 0.0;
    for (std::ptrdiff_t n = 0; n < frame; n += kCorrelationStride) {
      sum += static_cast<double>(sample(a + n)) * sample(b + n);
    }
    return sum;
  };

  std::ptrdiff_t previous = 0;
  for (std::ptrdiff_t k = 0; k * hop < padded_out; ++k) {
    const std::ptrdiff_t out_pos = k * hop;
    const auto ideal = static_cast<std::ptrdiff_t>(std::llround(
        static_cast<double>(hop) + static_cast<double>(k - 1) * input_hop));
    std::ptrdiff_t chosen = ideal;
    if (k > 0) {
      const std::ptrdiff_t natural = previous + hop;
      double best = correlation(natural, ideal);
      for (std::ptrdiff_t offset = -tolerance; offset <= tolerance; ++offset) {
        if (offset == 0) continue;
        const double score = correlation(natural, ideal + offset);
        if (score > best) {
          best = score;
          chosen = ideal + offset;
        }
      }
    }
    for (std::ptrdiff_t n = 0; n < frame; ++n) {
      const auto at = static_cast<std::size_t>(out_pos + n);
      const float w = window[static_cast<std::size_t>(n)];
      acc[at] += w * sample(chosen + n);
      weight[at] += w;
    }
    previous = chosen;
  }

  for (std::size_t i = 0; i < out_length; ++i) {
    const std::size_t at = i + static_cast<std::size_t>(hop);
    y[i] = weight[at] > 1e-3f ? acc[at] / weight[at] : acc[at];
  }
  return y;
}

}  // namespace

double semitone_ratio(double semitones) {
  return std::pow(2.0, semitones / 12.0);
}

AudioClip pitch_shift(const AudioClip& clip, int semitones) {
  if (semitones == 0) return clip;
  if (std::abs(semitones) > kMaxShiftSemitones) {
    throw std::invalid_argument("pitch shift of " + std::to_string(semitones) +
                                " semitones is out of range");
  }
  if (clip.samples.empty()) return clip;
  const double ratio = semitone_ratio(semitones);
  const auto x = to_float(clip);
  const auto squeezed_length = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::llround(static_cast<double>(x.size()) / ratio)));
  const auto squeezed = resample_linear(x, ratio, squeezed_length);
  return from_float(wsola(squeezed, x.size(), clip.sample_rate),
                    clip.sample_rate);
}

AudioClip time_stretch(const AudioClip& clip, double factor) {
  if (!(factor >= kMinStretch && factor <= kMaxStretch)) {
    throw std::invalid_argument("stretch factor " + std::to_string(factor) +
                                " is out of range");
  }
  if (factor == 1.0) return clip;
  return time_stretch_to(
      clip, static_cast<std::size_t>(std::llround(
                static_cast<double>(clip.samples.size()) * factor)));
}

AudioClip time_stretch_to(const AudioClip& clip, std::size_t frames) {
  if (frames == clip.samples.size()) return clip;
  if (clip.samples.empty()) {
    AudioClip out;
    out.sample_rate = clip.sample_rate;
    out.samples.assign(frames, 0);
    return out;
  }
  const double factor =
      static_cast<double>(frames) / static_cast<double>(clip.samples.size());
  // Allow rounding slack at the range ends.
  const double slack = 1.0 / static_cast<double>(clip.samples.size());
  if (factor < kMinStretch - slack || factor > kMaxStretch + slack) {
    throw std::invalid_argument("stretch factor " + std::to_string(factor) +
                                " is out of range");
  }
  return from_float(wsola(to_float(clip), frames, clip.sample_rate),
                    clip.sample_rate);
}

AudioClip silence(int beats, double beat_seconds, int sample_rate) {
  if (beats < 1 || !(beat_seconds > 0) || sample_rate <= 0) {
    throw std::invalid_argument("silence needs positive beats and durations");
  }
  AudioClip out;
  out.sample_rate = sample_rate;
  out.samples.assign(frames_for(beats * beat_seconds, sample_rate), 0);
  return out;
}

AudioClip concat(std::span<const AudioClip> clips,
                 std::size_t crossfade_frames) {
  AudioClip out;
  if (clips.empty()) return out;
  out.sample_rate = clips.front().sample_rate;
  std::size_t total = 0;
  for (const auto& c : clips) {
    if (c.sample_rate != out.sample_rate) {
      throw SampleRateMismatch(out.sample_rate, c.sample_rate);
    }
    total += c.samples.size();
  }
  out.samples.reserve(total);

  std::size_t previous_length = 0;
  for (const auto& c : clips) {
    const std::size_t overlap =
        std::min({crossfade_frames, previous_length, c.samples.size()});
    const std::size_t start = out.samples.size() - overlap;
    for (std::size_t j = 0; j < overlap; ++j) {
      const double theta = (static_cast<double>(j) + 0.5) /
                           static_cast<double>(overlap) * std::numbers::pi / 2;
      const double mixed = out.samples[start + j] * std::cos(theta) +
                           c.samples[j] * std::sin(theta);
      out.samples[start + j] = static_cast<std::int16_t>(
          std::clamp(std::nearbyint(mixed), -32768.0, 32767.0));
    }
    out.samples.insert(out.samples.end(),
                       c.samples.begin() + static_cast<std::ptrdiff_t>(overlap),
                       c.samples.end());
    previous_length = c.samples.size();
  }
  return out;
}

AudioClip resample(const AudioClip& clip, int sample_rate) {
  if (sample_rate <= 0) throw std::invalid_argument("sample rate must be positive");
  if (sample_rate == clip.sample_rate) return clip;
  const double step =
      static_cast<double>(clip.sample_rate) / static_cast<double>(sample_rate);
  const auto length = static_cast<std::size_t>(std::llround(
      static_cast<double>(clip.samples.size()) / step));
  return from_float(resample_linear(to_float(clip), step, length), sample_rate);
}

std::size_t crossfade_frames(double milliseconds, int sample_rate) {
  if (milliseconds <= 0) return 0;
  return frames_for(milliseconds / 1000.0, sample_rate);
}

double rms(const AudioClip& clip) {
  if (clip.samples.empty()) return 0.0;
  double sum = 0.0;
  for (auto s : clip.samples) sum += static_cast<double>(s) * s;
  return std::sqrt(sum / static_cast<double>(clip.samples.size()));
}

}  // namespace chant::dsp
