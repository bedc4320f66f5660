// Copyright 2026 The SQNN Authors. All Rights Reserved.
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

#ifndef SQNN_ERRORS_H_
#define SQNN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqnn {

// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural problem with an input file: wrong header, bad version,
// truncation.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A record that could not be parsed. line() is 1-based.
class ParseError : public FormatError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : FormatError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Optimization produced a non-finite loss. iteration() is the index of the
// offending iteration (0 = initial evaluation).
class TrainingError : public std::runtime_error {
 public:
  TrainingError(int iteration, const std::string& what)
      : std::runtime_error("iteration " + std::to_string(iteration) + ": " + what),
        iteration_(iteration) {}

  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace sqnn

#endif  // SQNN_ERRORS_H_
