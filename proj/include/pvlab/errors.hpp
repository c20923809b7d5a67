// Copyright 2026 The pvlab Authors
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
#include <vector>

namespace pvlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  /// Short error identifier, e.g. "ParseError".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define PVLAB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

PVLAB_DEFINE_ERROR(InadmissibleType)
PVLAB_DEFINE_ERROR(IndexOutOfRange)
PVLAB_DEFINE_ERROR(DuplicateIndex)
PVLAB_DEFINE_ERROR(EmptyCircledSet)
PVLAB_DEFINE_ERROR(NotCircled)
PVLAB_DEFINE_ERROR(NotAdjacent)
PVLAB_DEFINE_ERROR(EmptyLevelOne)
PVLAB_DEFINE_ERROR(NonGenericPoint)
PVLAB_DEFINE_ERROR(EmptySubset)
PVLAB_DEFINE_ERROR(NotRegular)
PVLAB_DEFINE_ERROR(NotRelativeInvariant)
PVLAB_DEFINE_ERROR(DegenerateInvariant)
PVLAB_DEFINE_ERROR(IdentityViolation)
PVLAB_DEFINE_ERROR(NotSkew)
PVLAB_DEFINE_ERROR(OddSize)
PVLAB_DEFINE_ERROR(NoAdjacentCircles)
PVLAB_DEFINE_ERROR(UnknownModel)
PVLAB_DEFINE_ERROR(InvalidParameter)

#undef PVLAB_DEFINE_ERROR

/// Malformed diagram text. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::string input, std::size_t column, std::string expected)
      : Error("ParseError", describe(input, column, expected)),
        input_(std::move(input)),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& input() const noexcept { return input_; }

  /// Two-line rendering of the input with a caret under the column.
  std::string caret() const {
    return input_ + "\n" + std::string(column_ - 1, ' ') + "^";
  }

 private:
  static std::string describe(const std::string& input, std::size_t column,
                              const std::string& expected) {
    return "expected " + expected + " at column " + std::to_string(column) +
           " in \"" + input + "\"";
  }

  std::string input_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace pvlab
