// Copyright 2026 The Hypertag Authors.
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

// Exception types shared by every module. Callers (the CLI in particular)
// map these onto exit codes, so each failure class gets its own type.

#ifndef HYPERTAG_ERROR_H_
#define HYPERTAG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypertag {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad tagset, rules or scheme configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed corpus or text input. Line numbers are 1-based; 0 means the
// error is not tied to a line.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Not enough symbols to estimate the requested statistic.
class DataError : public Error {
 public:
  using Error::Error;
};

// The chunker could not analyse a sentence.
class ChunkError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypertag

#endif  // HYPERTAG_ERROR_H_
