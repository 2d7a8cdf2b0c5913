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

#include <filesystem>
#include <string>

#include "chant/audio_clip.hpp"

namespace chant {

/// Reads a RIFF/WAVE file holding mono 16-bit PCM (format code 1). Unknown
/// chunks are skipped. Throws BadWav.
AudioClip read_wav(const std::filesystem::path& path);

/// In-memory variant of read_wav; `name` is used in error messages.
AudioClip parse_wav(const std::string& bytes, const std::string& name = "<memory>");

/// Writes a canonical 44-byte-header WAV. Throws Error on I/O failure.
void write_wav(const AudioClip& clip, const std::filesystem::path& path);
std::string encode_wav(const AudioClip& clip);

}  // namespace chant
