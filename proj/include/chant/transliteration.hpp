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

// Devanagari to IAST conversion and tokenization of IAST text into
// categorized Sanskrit letters.
//
// IAST is the only internal representation. Input is NFC-composed for the
// diacritics used by Sanskrit and alternate spellings are canonicalized:
//   r̥ -> ṛ, r̥̄ -> ṝ, l̥ -> ḷ, m̐ / ṁ -> ṃ.
// Whitespace separates words. Newline, '|', '||', danda and double danda
// separate quarters (runs of separators collapse into one break).

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chant {

enum class Category {
  Vowel,
  Consonant,  // stops and nasals
  SemiVowel,
  Sibilant,
  Aspirate,
  Anusvara,
  Visarga,
  Jihvamuliya,  // 'z', visarga before k/kh
  Upadhmaniya,  // 'f', visarga before p/ph
};

enum class VowelLength { Short, Long, NotApplicable };

struct Letter {
  std::string text;
  Category category = Category::Vowel;
  VowelLength vowel_length = VowelLength::NotApplicable;

  bool is_vowel() const { return category == Category::Vowel; }
  bool is_short_vowel() const { return vowel_length == VowelLength::Short; }
  bool is_long_vowel() const { return vowel_length == VowelLength::Long; }

  // Consonants, semivowels, sibilants and the aspirate. These are the
  // letters that count toward a consonant cluster.
  bool is_consonantal() const {
    return category == Category::Consonant ||
           category == Category::SemiVowel ||
           category == Category::Sibilant || category == Category::Aspirate;
  }

  // Anusvāra, visarga and the two visarga allophones.
  bool is_coda_mark() const {
    return category == Category::Anusvara || category == Category::Visarga ||
           category == Category::Jihvamuliya ||
           category == Category::Upadhmaniya;
  }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Looks up a single letter by its IAST spelling (alternate spellings are
/// accepted). Throws UnknownLetter.
Letter classify(std::string_view letter_text);

/// Canonical spellings of every letter the tokenizer can produce.
std::span<const std::string_view> alphabet();

std::string_view category_name(Category category);

struct LetterStream {
  std::vector<Letter> letters;
  // A break before letter i means letter i starts a new word. Strictly
  // increasing, each in [1, letters.size()).
  std::vector<std::size_t> word_breaks;
  // Subset of word_breaks where a new quarter begins.
  std::vector<std::size_t> quarter_breaks;

  bool is_word_break(std::size_t index) const;
  bool is_quarter_break(std::size_t index) const;

  /// Half-open [begin, end) letter ranges, one per word.
  std::vector<std::pair<std::size_t, std::size_t>> words() const;

  /// Letters joined with a space at word breaks and a newline at quarter
  /// breaks. Inverse of tokenize() on normalized text.
  std::string render() const;

  friend bool operator==(const LetterStream&, const LetterStream&) = default;
};

/// NFC composition of Sanskrit diacritics plus canonicalization of the
/// alternate spellings listed above.
std::u32string normalize(std::u32string_view text);
std::string normalize(std::string_view text);

/// True when any code point lies in U+0900-U+097F.
bool contains_devanagari(std::string_view text);

/// Throws UnsupportedCodePoint(position) where position is the code point
/// index in the input.
std::string devanagari_to_latin(std::string_view text);

/// Greedy longest-match tokenization. Throws UnknownCharacter with the code
/// point index within the normalized text.
LetterStream tokenize(std::string_view text);

}  // namespace chant
