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

#include "chant/wav.hpp"

#include <cstdint>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>

#include "chant/errors.hpp"

namespace chant {

namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint32_t read_u32(const std::string& b, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24;
}

std::uint16_t read_u16(const std::string& b, std::size_t at) {
  return static_cast<std::uint16_t>(
      static_cast<unsigned char>(b[at]) |
      static_cast<unsigned char>(b[at + 1]) << 8);
}

void put_u32(std::string& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u16(std::string& b, std::uint16_t v) {
  b.push_back(static_cast<char>(v & 0xFF));
  b.push_back(static_cast<char>((v >> 8) & 0xFF));
}

struct Format {
  std::uint16_t tag;
  std::uint16_t channels;
  std::uint32_t sample_rate;
  std::uint16_t bits;
};

}  // namespace

AudioClip parse_wav(const std::string& bytes, const std::string& name) {
  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 ||
      bytes.compare(8, 4, "WAVE") != 0) {
    throw BadWav(name, "not a RIFF/WAVE file");
  }
  std::optional<Format> format;
  std::optional<std::pair<std::size_t, std::size_t>> data;

  std::size_t at = 12;
  while (at + 8 <= bytes.size()) {
    const std::string id = bytes.substr(at, 4);
    const std::size_t size = read_u32(bytes, at + 4);
    const std::size_t body = at + 8;
    if (body + size > bytes.size()) {
      // Some writers leave a streaming placeholder in the data size.
      if (id != "data") throw BadWav(name, "chunk '" + id + "' is truncated");
    }
    if (id == "fmt ") {
      if (size < 16) throw BadWav(name, "fmt chunk too short");
      format = Format{read_u16(bytes, body), read_u16(bytes, body + 2),
                      read_u32(bytes, body + 4), read_u16(bytes, body + 14)};
    } else if (id == "data") {
      data = {body, std::min(size, bytes.size() - body)};
      break;
    }
    at = body + size + (size & 1);
  }

  if (!format) throw BadWav(name, "missing fmt chunk");
  if (!data) throw BadWav(name, "missing data chunk");
  if (format->tag != kFormatPcm) {
    throw BadWav(name, "unsupported codec " + std::to_string(format->tag));
  }
  if (format->channels != 1) {
    throw BadWav(name, std::to_string(format->channels) + " channels; only mono is supported");
  }
  if (format->bits != 16) {
    throw BadWav(name, std::to_string(format->bits) + "-bit samples; only 16-bit is supported");
  }
  if (format->sample_rate == 0) throw BadWav(name, "zero sample rate");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(format->sample_rate);
  const auto [offset, length] = *data;
  clip.samples.resize(length / 2);
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    clip.samples[i] = static_cast<std::int16_t>(read_u16(bytes, offset + 2 * i));
  }
  return clip;
}

AudioClip read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadWav(path.string(), "cannot open");
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  return parse_wav(bytes, path.string());
}

std::string encode_wav(const AudioClip& clip) {
  const auto data_bytes = static_cast<std::uint32_t>(clip.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate) * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  out += "data";
  put_u32(out, data_bytes);
  for (auto s : clip.samples) put_u16(out, static_cast<std::uint16_t>(s));
  return out;
}

void write_wav(const AudioClip& clip, const std::filesystem::path& path) {
  const std::string bytes = encode_wav(clip);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("cannot write " + path.string());
}

}  // namespace chant
