// Copyright 2026 The duflo Authors
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
#include <string_view>

namespace duflo {

enum class ErrorCode {
  NonzeroConstantTerm,
  UnknownForm,
  NotCentral,
  NotPolynomialInCasimir,
  NotRadial,
  DegreeTooLarge,
  ResidualNotInSpan,
  IndexOutOfRange,
  UnsupportedAlgebra,
  NotInvertible,
  InvalidArgument,
  SyntaxError,
  ExponentNegative,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the expression parser; `position()` is a 0-based byte offset
/// into the source text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace duflo
