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

#include <string>
#include <vector>

#include "chant/transliteration.hpp"

namespace chant {

/// One pronounceable syllabic unit: optional onset consonants, exactly one
/// vowel nucleus and an optional tail.
struct Unit {
  std::vector<Letter> pre_vowel;
  Letter vowel;
  std::vector<Letter> post_vowel;
  bool word_final = false;
  // Last unit before an explicit quarter separator.
  bool quarter_final = false;

  std::string text() const;

  friend bool operator==(const Unit&, const Unit&) = default;
};

/// Splits a sandhi-corrected stream into units.
///
/// With k the nucleus and k1, k2, k3 the letters after it in the word:
///   - letters up to the first vowel form the onset;
///   - vowel 'a' directly followed by vowel 'i'/'u' is the diphthong ai/au;
///   - k1 anusvāra/visarga (or z/f): the unit takes it and closes;
///   - k1 = r and k2 a non-vowel: take r, and also k2 when k3 is a
///     non-vowel (kārt-snyam, kār-yam);
///   - k1 a non-vowel followed by a vowel: close after the vowel (gu-rū);
///   - k1k2 = jñ or kṣ: close after the vowel (a-jñā);
///   - short k followed by pr/br/kr or by h: close after the vowel
///     (sa-priyaḥ);
///   - otherwise k1 joins the unit (van-de);
///   - letters after the last vowel of a word all join the last unit.
///
/// Throws NoVowelInWord and MalformedTail (a coda mark anywhere except
/// directly after a vowel, or not last in a word-final tail).
std::vector<Unit> split_into_units(const LetterStream& stream);

/// Unit texts joined with a space after word-final units and a newline after
/// quarter-final ones. Equals stream.render() for the source stream.
std::string render_units(const std::vector<Unit>& units);

}  // namespace chant
