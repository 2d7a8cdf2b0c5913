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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace chant {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedCodePoint : public Error {
 public:
  UnsupportedCodePoint(std::size_t position, char32_t code_point);
  std::size_t position() const { return position_; }
  char32_t code_point() const { return code_point_; }

 private:
  std::size_t position_;
  char32_t code_point_;
};

class UnknownCharacter : public Error {
 public:
  UnknownCharacter(std::size_t position, char32_t code_point);
  std::size_t position() const { return position_; }
  char32_t code_point() const { return code_point_; }

 private:
  std::size_t position_;
  char32_t code_point_;
};

class UnknownLetter : public Error {
 public:
  explicit UnknownLetter(const std::string& text)
      : Error("unknown letter '" + text + "'") {}
};

class NoVowelInWord : public Error {
 public:
  explicit NoVowelInWord(std::size_t word_index)
      : Error("word " + std::to_string(word_index) + " has no vowel"),
        word_index_(word_index) {}
  std::size_t word_index() const { return word_index_; }

 private:
  std::size_t word_index_;
};

class MalformedTail : public Error {
 public:
  MalformedTail(std::size_t word_index, const std::string& detail)
      : Error("word " + std::to_string(word_index) + ": " + detail),
        word_index_(word_index) {}
  std::size_t word_index() const { return word_index_; }

 private:
  std::size_t word_index_;
};

class NoMatchingMetre : public Error {
 public:
  explicit NoMatchingMetre(const std::string& observed)
      : Error("no matching metre for " + observed), observed_(observed) {}
  const std::string& observed() const { return observed_; }

 private:
  std::string observed_;
};

class MetreDbError : public Error {
 public:
  MetreDbError(std::size_t line, const std::string& detail)
      : Error("metre db line " + std::to_string(line) + ": " + detail) {}
};

class ClipUnavailable : public Error {
 public:
  explicit ClipUnavailable(const std::string& unit_text)
      : Error("no audio clip for unit '" + unit_text + "'"),
        unit_text_(unit_text) {}
  const std::string& unit_text() const { return unit_text_; }

 private:
  std::string unit_text_;
};

class BadWav : public Error {
 public:
  BadWav(const std::string& path, const std::string& detail)
      : Error(path + ": " + detail), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class SampleRateMismatch : public Error {
 public:
  SampleRateMismatch(int expected, int actual)
      : Error("sample rate mismatch: " + std::to_string(expected) + " vs " +
              std::to_string(actual)) {}
};

/// Wraps an upstream error with the pipeline stage it escaped from.
class PipelineError : public Error {
 public:
  PipelineError(std::string stage, const std::string& cause)
      : Error(stage + ": " + cause), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace chant
