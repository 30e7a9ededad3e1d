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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "duflo/io/expr.hpp"

namespace duflo {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
};

enum class Suite { Symmetrization, Duflo, Expmap, Parser, All };

/// symmetrization, duflo, expmap, parser, all.
Suite parse_suite(std::string_view name);

/// Runs the exact end-to-end checks of the chosen suite. Every check is an
/// equality of exact values; there are no tolerances.
std::vector<CriterionResult> run_suite(Suite suite);

/// Random well-formed syntax tree with at most max_depth levels.
Expr random_expr(std::mt19937_64& rng, int max_depth);

/// parse_expr(print_expr(t)) == t for `count` random trees.
CriterionResult check_parser_round_trip(std::size_t count, std::uint64_t seed);

}  // namespace duflo
