// Copyright 2026 The seqsub Authors.
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

#ifndef SEQSUB_ERRORS_H_
#define SEQSUB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace seqsub {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input data (files, ids, sequences).
class InputError : public Error {
 public:
  using Error::Error;
};

// A row-level parse failure; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Inconsistent or infeasible configuration (flags, fold counts, caps).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration refused because it would exceed the cap.
class SizeError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// A metric whose denominator vanishes (e.g. tau with |Q| < 2).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

// An internal invariant was broken. Indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqsub

#endif  // SEQSUB_ERRORS_H_
