// Copyright 2026 The trigauge Authors
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

#ifndef TRIGAUGE_ERROR_H_
#define TRIGAUGE_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trigauge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or records input. `line()` is 1-based, 0 when the
// error is not tied to a line (e.g. empty input).
class ParseError : public Error {
 public:
  ParseError(std::uint64_t line, const std::string& what)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

// A caller-supplied value violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle was asked to count a graph above its vertex limit.
class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Two counting kernels returned different counts for the same graph.
class KernelMismatch : public Error {
 public:
  using Error::Error;
};

// Fewer than two usable points, or no spread in N_e.
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trigauge

#endif  // TRIGAUGE_ERROR_H_
