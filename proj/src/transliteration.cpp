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

#include "chant/transliteration.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "chant/errors.hpp"
#include "chant/utf8.hpp"

namespace chant {

namespace {

struct LetterSpec {
  std::string_view text;
  Category category;
  VowelLength length;
};

using enum Category;
constexpr auto S = VowelLength::Short;
constexpr auto L = VowelLength::Long;
constexpr auto NA = VowelLength::NotApplicable;

constexpr std::array<LetterSpec, 50> kLetters{{
    {"a", Vowel, S},          {"ā", Vowel, L},          {"i", Vowel, S},
    {"ī", Vowel, L},          {"u", Vowel, S},          {"ū", Vowel, L},
    {"ṛ", Vowel, S},          {"ṝ", Vowel, L},          {"ḷ", Vowel, S},
    {"e", Vowel, L},          {"ai", Vowel, L},         {"o", Vowel, L},
    {"au", Vowel, L},

    {"k", Consonant, NA},     {"kh", Consonant, NA},    {"g", Consonant, NA},
    {"gh", Consonant, NA},    {"ṅ", Consonant, NA},     {"c", Consonant, NA},
    {"ch", Consonant, NA},    {"j", Consonant, NA},     {"jh", Consonant, NA},
    {"ñ", Consonant, NA},     {"ṭ", Consonant, NA},     {"ṭh", Consonant, NA},
    {"ḍ", Consonant, NA},     {"ḍh", Consonant, NA},    {"ṇ", Consonant, NA},
    {"t", Consonant, NA},     {"th", Consonant, NA},    {"d", Consonant, NA},
    {"dh", Consonant, NA},    {"n", Consonant, NA},     {"p", Consonant, NA},
    {"ph", Consonant, NA},    {"b", Consonant, NA},     {"bh", Consonant, NA},
    {"m", Consonant, NA},

    {"y", SemiVowel, NA},     {"r", SemiVowel, NA},     {"l", SemiVowel, NA},
    {"v", SemiVowel, NA},

    {"ś", Sibilant, NA},      {"ṣ", Sibilant, NA},      {"s", Sibilant, NA},

    {"h", Aspirate, NA},      {"ṃ", Anusvara, NA},      {"ḥ", Visarga, NA},
    {"z", Jihvamuliya, NA},   {"f", Upadhmaniya, NA},
}};

struct Alphabet {
  std::array<std::string_view, kLetters.size()> texts;
  std::array<std::u32string, kLetters.size()> code_points;
};

const Alphabet& alphabet_table() {
  static const Alphabet table = [] {
    Alphabet a;
    for (std::size_t i = 0; i < kLetters.size(); ++i) {
      a.texts[i] = kLetters[i].text;
      a.code_points[i] = utf8::decode(kLetters[i].text);
    }
    return a;
  }();
  return table;
}

Letter make_letter(const LetterSpec& spec) {
  return Letter{std::string(spec.text), spec.category, spec.length};
}

// Combining marks that appear in decomposed IAST.
constexpr char32_t kMacron = 0x0304;
constexpr char32_t kDotBelow = 0x0323;
constexpr char32_t kRingBelow = 0x0325;
constexpr char32_t kDotAbove = 0x0307;
constexpr char32_t kTilde = 0x0303;
constexpr char32_t kAcute = 0x0301;
constexpr char32_t kCandrabindu = 0x0310;

std::optional<char32_t> compose(char32_t base, char32_t mark) {
  struct Pair {
    char32_t base, mark, composed;
  };
  static constexpr Pair kPairs[] = {
      {U'a', kMacron, U'ā'},       {U'i', kMacron, U'ī'},
      {U'u', kMacron, U'ū'},       {U'r', kDotBelow, U'ṛ'},
      {U'r', kRingBelow, U'ṛ'},    {U'ṛ', kMacron, U'ṝ'},
      {U'l', kDotBelow, U'ḷ'},     {U'l', kRingBelow, U'ḷ'},
      {U'n', kDotAbove, U'ṅ'},     {U'n', kTilde, U'ñ'},
      {U'n', kDotBelow, U'ṇ'},     {U't', kDotBelow, U'ṭ'},
      {U'd', kDotBelow, U'ḍ'},     {U's', kDotBelow, U'ṣ'},
      {U's', kAcute, U'ś'},        {U'h', kDotBelow, U'ḥ'},
      {U'm', kDotBelow, U'ṃ'},     {U'm', kDotAbove, U'ṃ'},
      {U'm', kCandrabindu, U'ṃ'},
  };
  for (const auto& p : kPairs) {
    if (p.base == base && p.mark == mark) return p.composed;
  }
  return std::nullopt;
}

bool is_word_separator(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\r';
}

bool is_quarter_separator(char32_t cp) {
  return cp == U'\n' || cp == U'|' || cp == 0x0964 || cp == 0x0965;
}

}  // namespace

Letter classify(std::string_view letter_text) {
  const std::string normalized = normalize(letter_text);
  for (const auto& spec : kLetters) {
    if (spec.text == normalized) return make_letter(spec);
  }
  throw UnknownLetter(std::string(letter_text));
}

std::span<const std::string_view> alphabet() {
  return alphabet_table().texts;
}

std::string_view category_name(Category category) {
  switch (category) {
    case Vowel: return "vowel";
    case Consonant: return "consonant";
    case SemiVowel: return "semivowel";
    case Sibilant: return "sibilant";
    case Aspirate: return "aspirate";
    case Anusvara: return "anusvara";
    case Visarga: return "visarga";
    case Jihvamuliya: return "jihvamuliya";
    case Upadhmaniya: return "upadhmaniya";
  }
  return "?";
}

bool LetterStream::is_word_break(std::size_t index) const {
  return std::binary_search(word_breaks.begin(), word_breaks.end(), index);
}

bool LetterStream::is_quarter_break(std::size_t index) const {
  return std::binary_search(quarter_breaks.begin(), quarter_breaks.end(),
                            index);
}

std::vector<std::pair<std::size_t, std::size_t>> LetterStream::words() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (letters.empty()) return out;
  std::size_t begin = 0;
  for (std::size_t b : word_breaks) {
    out.emplace_back(begin, b);
    begin = b;
  }
  out.emplace_back(begin, letters.size());
  return out;
}

std::string LetterStream::render() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (is_quarter_break(i)) {
      out.push_back('\n');
    } else if (is_word_break(i)) {
      out.push_back(' ');
    }
    out += letters[i].text;
  }
  return out;
}

std::u32string normalize(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (!out.empty()) {
      if (auto composed = compose(out.back(), cp)) {
        out.back() = *composed;
        continue;
      }
    }
    // ṁ is the common dot-above anusvāra spelling.
    out.push_back(cp == U'ṁ' ? U'ṃ' : cp);
  }
  return out;
}

std::string normalize(std::string_view text) {
  return utf8::encode(normalize(utf8::decode(text)));
}

bool contains_devanagari(std::string_view text) {
  for (char32_t cp : utf8::decode(text)) {
    if (cp >= 0x0900 && cp <= 0x097F) return true;
  }
  return false;
}

std::string devanagari_to_latin(std::string_view text) {
  struct Mapping {
    char32_t cp;
    std::string_view latin;
  };
  static constexpr Mapping kConsonants[] = {
      {0x0915, "k"},  {0x0916, "kh"}, {0x0917, "g"},  {0x0918, "gh"},
      {0x0919, "ṅ"},  {0x091A, "c"},  {0x091B, "ch"}, {0x091C, "j"},
      {0x091D, "jh"}, {0x091E, "ñ"},  {0x091F, "ṭ"},  {0x0920, "ṭh"},
      {0x0921, "ḍ"},  {0x0922, "ḍh"}, {0x0923, "ṇ"},  {0x0924, "t"},
      {0x0925, "th"}, {0x0926, "d"},  {0x0927, "dh"}, {0x0928, "n"},
      {0x092A, "p"},  {0x092B, "ph"}, {0x092C, "b"},  {0x092D, "bh"},
      {0x092E, "m"},  {0x092F, "y"},  {0x0930, "r"},  {0x0932, "l"},
      {0x0935, "v"},  {0x0936, "ś"},  {0x0937, "ṣ"},  {0x0938, "s"},
      {0x0939, "h"},
  };
  static constexpr Mapping kVowels[] = {
      {0x0905, "a"}, {0x0906, "ā"},  {0x0907, "i"}, {0x0908, "ī"},
      {0x0909, "u"}, {0x090A, "ū"},  {0x090B, "ṛ"}, {0x0960, "ṝ"},
      {0x090C, "ḷ"}, {0x090F, "e"},  {0x0910, "ai"}, {0x0913, "o"},
      {0x0914, "au"},
  };
  static constexpr Mapping kVowelSigns[] = {
      {0x093E, "ā"}, {0x093F, "i"},  {0x0940, "ī"}, {0x0941, "u"},
      {0x0942, "ū"}, {0x0943, "ṛ"},  {0x0944, "ṝ"}, {0x0962, "ḷ"},
      {0x0947, "e"}, {0x0948, "ai"}, {0x094B, "o"}, {0x094C, "au"},
  };
  static constexpr Mapping kOthers[] = {
      {0x0901, "ṃ"},  {0x0902, "ṃ"}, {0x0903, "ḥ"},
      {0x0964, "|"},  {0x0965, "||"},
  };
  constexpr char32_t kVirama = 0x094D;

  auto find = [](std::span<const Mapping> table,
                 char32_t cp) -> std::optional<std::string_view> {
    for (const auto& m : table) {
      if (m.cp == cp) return m.latin;
    }
    return std::nullopt;
  };

  const std::u32string input = utf8::decode(text);
  std::string out;
  bool pending_a = false;  // a bare consonant carries an inherent 'a'
  for (std::size_t i = 0; i < input.size(); ++i) {
    const char32_t cp = input[i];
    if (pending_a) {
      if (cp == kVirama) {
        pending_a = false;
        continue;
      }
      if (auto sign = find(kVowelSigns, cp)) {
        out += *sign;
        pending_a = false;
        continue;
      }
      out += "a";
      pending_a = false;
    }
    if (auto consonant = find(kConsonants, cp)) {
      out += *consonant;
      pending_a = true;
    } else if (auto vowel = find(kVowels, cp)) {
      out += *vowel;
    } else if (auto other = find(kOthers, cp)) {
      out += *other;
    } else if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
               cp == U'|') {
      utf8::append(out, cp);
    } else {
      // Stray signs, nukta forms, avagraha, digits and anything outside the
      // block are rejected.
      throw UnsupportedCodePoint(i, cp);
    }
  }
  if (pending_a) out += "a";
  return out;
}

LetterStream tokenize(std::string_view text) {
  const std::u32string input = normalize(utf8::decode(text));
  const Alphabet& table = alphabet_table();

  LetterStream stream;
  enum class Pending { None, Word, Quarter } pending = Pending::None;

  std::size_t i = 0;
  while (i < input.size()) {
    const char32_t cp = input[i];
    if (is_word_separator(cp)) {
      if (pending == Pending::None) pending = Pending::Word;
      ++i;
      continue;
    }
    if (is_quarter_separator(cp)) {
      pending = Pending::Quarter;
      ++i;
      continue;
    }

    std::size_t best = kLetters.size();
    std::size_t best_length = 0;
    for (std::size_t k = 0; k < kLetters.size(); ++k) {
      const std::u32string& letter = table.code_points[k];
      if (letter.size() <= best_length) continue;
      if (input.compare(i, letter.size(), letter) == 0) {
        best = k;
        best_length = letter.size();
      }
    }
    if (best == kLetters.size()) throw UnknownCharacter(i, cp);

    if (!stream.letters.empty() && pending != Pending::None) {
      const std::size_t index = stream.letters.size();
      stream.word_breaks.push_back(index);
      if (pending == Pending::Quarter) stream.quarter_breaks.push_back(index);
    }
    pending = Pending::None;
    stream.letters.push_back(make_letter(kLetters[best]));
    i += best_length;
  }
  return stream;
}

}  // namespace chant
