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

#include "chant/errors.hpp"

#include <cstdio>

#include "chant/utf8.hpp"

namespace chant {

namespace {

std::string describe(char32_t cp) {
  char hex[16];
  std::snprintf(hex, sizeof(hex), "U+%04X", static_cast<unsigned>(cp));
  std::string out = hex;
  if (cp >= 0x20 && cp != 0x7F) {
    out += " '";
    utf8::append(out, cp);
    out += "'";
  }
  return out;
}

}  // namespace

UnsupportedCodePoint::UnsupportedCodePoint(std::size_t position, char32_t cp)
    : Error("unsupported code point " + describe(cp) + " at position " +
            std::to_string(position)),
      position_(position),
      code_point_(cp) {}

UnknownCharacter::UnknownCharacter(std::size_t position, char32_t cp)
    : Error("unknown character " + describe(cp) + " at position " +
            std::to_string(position)),
      position_(position),
      code_point_(cp) {}

}  // namespace chant
