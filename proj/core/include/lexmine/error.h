// Copyright 2026 The lexmine Authors.
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

#ifndef LEXMINE_ERROR_H_
#define LEXMINE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexmine {

// Base class for every error raised by the library. kind() is a stable,
// machine-readable tag used by the command-line tool when reporting failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept { return "error"; }
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
  const char *kind() const noexcept override { return "invalid_argument"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char *kind() const noexcept override { return "io"; }
};

class NumericalError : public Error {
 public:
  using Error::Error;
  const char *kind() const noexcept override { return "numerical"; }
};

// Malformed input file. line() is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  const char *kind() const noexcept override { return "parse"; }
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Invalid UTF-8. offset() is the byte offset of the first bad sequence.
class DecodeError : public Error {
 public:
  explicit DecodeError(size_t offset)
      : Error("invalid UTF-8 at byte offset " + std::to_string(offset)),
        offset_(offset) {}
  const char *kind() const noexcept override { return "decode"; }
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

}  // namespace lexmine

#endif  // LEXMINE_ERROR_H_
