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

#include "duflo/error.hpp"

namespace duflo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::UnknownForm: return "UnknownForm";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotPolynomialInCasimir: return "NotPolynomialInCasimir";
    case ErrorCode::NotRadial: return "NotRadial";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ResidualNotInSpan: return "ResidualNotInSpan";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ExponentNegative: return "ExponentNegative";
  }
  return "Unknown";
}

}  // namespace duflo
