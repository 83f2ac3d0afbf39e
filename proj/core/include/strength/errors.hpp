// Copyright 2026 The Strength Authors
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

#ifndef STRENGTH_ERRORS_HPP_
#define STRENGTH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strength {

// Base class for every error raised by the library. Search outcomes that are
// not errors (budget exhaustion, proven infeasibility) are reported through
// status enums on the result types instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied parameter is out of its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `offset` is the byte position of the first bad byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// str_f(G) is undefined for a graph without edges.
class UndefinedStrengthError : public Error {
 public:
  using Error::Error;
};

// A bijection onto [1, p] was expected but not supplied.
class InvalidNumberingError : public Error {
 public:
  using Error::Error;
};

// A stored artifact (fixture, sequence, certificate) does not match the data
// it claims to describe.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace strength

#endif  // STRENGTH_ERRORS_HPP_
