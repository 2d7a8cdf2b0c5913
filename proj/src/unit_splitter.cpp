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

#include "chant/unit_splitter.hpp"

#include <algorithm>

#include "chant/errors.hpp"

namespace chant {

std::string Unit::text() const {
  std::string out;
  for (const auto& l : pre_vowel) out += l.text;
  out += vowel.text;
  for (const auto& l : post_vowel) out += l.text;
  return out;
}

namespace {

bool is(const Letter& letter, std::string_view text) {
  return letter.text == text;
}

bool closes_before_conjunct(const Letter& k1, const Letter& k2) {
  return (is(k1, "j") && is(k2, "ñ")) || (is(k1, "k") && is(k2, "ṣ"));
}

bool is_muta_cum_liquida(const Letter& k1, const Letter& k2) {
  return is(k2, "r") && (is(k1, "p") || is(k1, "b") || is(k1, "k"));
}

class WordSplitter {
 public:
  WordSplitter(const std::vector<Letter>& letters, std::size_t begin,
               std::size_t end, std::size_t word_index)
      : letters_(letters), pos_(begin), end_(end), word_(word_index) {}

  void run(std::vector<Unit>& out) {
    const std::size_t first = out.size();
    while (pos_ < end_) {
      Unit unit;
      take_onset(unit);
      if (pos_ == end_) {
        // Only reachable for a word without any vowel; trailing consonants
        // are otherwise absorbed by the previous unit's tail.
        throw NoVowelInWord(word_);
      }
      take_nucleus(unit);
      take_tail(unit);
      unit.word_final = pos_ == end_;
      out.push_back(std::move(unit));
    }
    if (out.size() == first) throw NoVowelInWord(word_);
  }

 private:
  const Letter& at(std::size_t i) const { return letters_[i]; }

  void take_onset(Unit& unit) {
    while (pos_ < end_ && !at(pos_).is_vowel()) {
      if (at(pos_).is_coda_mark()) {
        throw MalformedTail(word_, "'" + at(pos_).text + "' does not follow a vowel");
      }
      unit.pre_vowel.push_back(at(pos_++));
    }
  }

  void take_nucleus(Unit& unit) {
    unit.vowel = at(pos_++);
    if (is(unit.vowel, "a") && pos_ < end_ &&
        (is(at(pos_), "i") || is(at(pos_), "u"))) {
      unit.vowel = classify("a" + at(pos_++).text);
    }
  }

  void take(Unit& unit) { unit.post_vowel.push_back(at(pos_++)); }

  void take_tail(Unit& unit) {
    const auto next_vowel = std::find_if(
        letters_.begin() + static_cast<std::ptrdiff_t>(pos_),
        letters_.begin() + static_cast<std::ptrdiff_t>(end_),
        [](const Letter& l) { return l.is_vowel(); });
    if (next_vowel == letters_.begin() + static_cast<std::ptrdiff_t>(end_)) {
      take_word_end(unit);
      return;
    }
    const auto vowel_index =
        static_cast<std::size_t>(next_vowel - letters_.begin());
    if (pos_ == vowel_index) return;  // hiatus

    const Letter& k1 = at(pos_);
    if (k1.is_coda_mark()) {
      take(unit);
      return;
    }
    // A vowel follows somewhere, so k2 exists.
    const Letter& k2 = at(pos_ + 1);
    if (is(k1, "r") && !k2.is_vowel()) {
      const bool k3_non_vowel = pos_ + 2 < end_ && !at(pos_ + 2).is_vowel();
      take(unit);
      if (k3_non_vowel) take(unit);
      return;
    }
    if (k2.is_vowel()) return;
    if (closes_before_conjunct(k1, k2)) return;
    if (unit.vowel.is_short_vowel() &&
        (is_muta_cum_liquida(k1, k2) || is(k1, "h"))) {
      return;
    }
    take(unit);
  }

  void take_word_end(Unit& unit) {
    const std::size_t tail_begin = pos_;
    while (pos_ < end_) take(unit);
    for (std::size_t i = tail_begin; i < end_; ++i) {
      if (at(i).is_coda_mark() && (i != tail_begin || i + 1 != end_)) {
        throw MalformedTail(word_, "'" + at(i).text +
                                       "' must directly follow the vowel "
                                       "and end the word");
      }
    }
  }

  const std::vector<Letter>& letters_;
  std::size_t pos_;
  std::size_t end_;
  std::size_t word_;
};

}  // namespace

std::vector<Unit> split_into_units(const LetterStream& stream) {
  std::vector<Unit> units;
  const auto words = stream.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    const auto [begin, end] = words[w];
    WordSplitter(stream.letters, begin, end, w).run(units);
    units.back().quarter_final = stream.is_quarter_break(end);
  }
  return units;
}

std::string render_units(const std::vector<Unit>& units) {
  std::string out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    out += units[i].text();
    if (i + 1 == units.size()) break;
    if (units[i].quarter_final) {
      out.push_back('\n');
    } else if (units[i].word_final) {
      out.push_back(' ');
    }
  }
  return out;
}

}  // namespace chant
