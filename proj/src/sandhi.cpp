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

#include "chant/sandhi.hpp"

#include <algorithm>
#include <optional>
#include <string_view>

namespace chant::sandhi {

namespace {

bool is(const Letter& letter, std::string_view text) {
  return letter.text == text;
}

// Nasal of the row a stop or nasal belongs to.
std::optional<std::string_view> row_nasal(const Letter& letter) {
  if (letter.category != Category::Consonant) return std::nullopt;
  struct Row {
    std::string_view members[5];
    std::string_view nasal;
  };
  static constexpr Row kRows[] = {
      {{"k", "kh", "g", "gh", "ṅ"}, "ṅ"},
      {{"c", "ch", "j", "jh", "ñ"}, "ñ"},
      {{"ṭ", "ṭh", "ḍ", "ḍh", "ṇ"}, "ṇ"},
      {{"t", "th", "d", "dh", "n"}, "n"},
      {{"p", "ph", "b", "bh", "m"}, "m"},
  };
  for (const auto& row : kRows) {
    for (auto member : row.members) {
      if (member == letter.text) return row.nasal;
    }
  }
  return std::nullopt;
}

bool is_sibilant(const Letter& letter) {
  return letter.category == Category::Sibilant;
}

}  // namespace

LetterStream correct_hn(LetterStream stream) {
  auto& letters = stream.letters;
  // Bubble each n in front of the run of h's before it so the result is a
  // fixed point even for runs like "hhn".
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (is(letters[i], "h") && is(letters[i + 1], "n") &&
          !stream.is_word_break(i + 1)) {
        std::swap(letters[i], letters[i + 1]);
        changed = true;
      }
    }
  }
  return stream;
}

LetterStream correct_anusvara(LetterStream stream) {
  auto& letters = stream.letters;
  // Right to left so that each decision sees an already final neighbour.
  for (std::size_t i = letters.size(); i-- > 1;) {
    const std::size_t at = i - 1;
    if (stream.is_word_break(i)) continue;
    Letter& nasal = letters[at];
    if (!is(nasal, "ṃ") && !is(nasal, "m")) continue;
    if (auto target = row_nasal(letters[i])) {
      nasal = classify(*target);
    }
  }
  return stream;
}

LetterStream correct_visarga(LetterStream stream) {
  auto& letters = stream.letters;
  std::vector<std::size_t> merged;
  for (std::size_t b : stream.word_breaks) {
    if (stream.is_quarter_break(b)) continue;
    if (is(letters[b - 1], "ḥ") && is_sibilant(letters[b])) {
      letters[b - 1] = letters[b];
      merged.push_back(b);
    }
  }
  std::erase_if(stream.word_breaks, [&](std::size_t b) {
    return std::binary_search(merged.begin(), merged.end(), b);
  });
  return stream;
}

LetterStream correct_visarga_aspirates(LetterStream stream) {
  auto& letters = stream.letters;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (!is(letters[i], "ḥ") || stream.is_quarter_break(i + 1)) continue;
    const Letter& next = letters[i + 1];
    if (is(next, "k") || is(next, "kh")) {
      letters[i] = classify("z");
    } else if (is(next, "p") || is(next, "ph")) {
      letters[i] = classify("f");
    }
  }
  return stream;
}

LetterStream apply_all(LetterStream stream) {
  stream = correct_hn(std::move(stream));
  stream = correct_anusvara(std::move(stream));
  stream = correct_visarga(std::move(stream));
  return correct_visarga_aspirates(std::move(stream));
}

}  // namespace chant::sandhi
