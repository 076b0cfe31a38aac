// Copyright 2026 The readorder Authors.
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

#ifndef READORDER_ERROR_H_
#define READORDER_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace readorder {

enum class ErrorCode {
  kParse,
  kIo,
  kDuplicateId,
  kInvalidBox,
  kUnknownId,
  kNotPermutation,
  kEmptyBlock,
  kInvalidArgument,
};

// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input line. `line()` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message,
             ErrorCode code = ErrorCode::kParse)
      : Error(code, line == 0 ? message
                              : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace readorder

#endif  // READORDER_ERROR_H_
