// Copyright 2026 The apk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APK_ERRORS_H_
#define APK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apk {

// Argument outside the documented domain of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rank index outside [1, length].
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Request exceeds an enumeration bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed input file row.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a semantic constraint.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apk

#endif  // APK_ERRORS_H_
