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

#include <array>
#include <string_view>

namespace duflo {

/// The quantization maps S(su(2)) -> U(su(2)) the engine knows about.
enum class MapKind {
  Sym,       // symmetric (PBW) quantization Q_S
  Duflo,     // Q_D = Q_S o j^{1/2}(d)
  DufloMod,  // Q_D on invariants, continued as a module map
  SymMod,    // Q_S on invariants, continued as a module map
  Npp,       // ||E||^{2n} -> 1/8^n, continued as a module map
};

inline constexpr std::array<MapKind, 5> kAllMapKinds = {
    MapKind::Sym, MapKind::Duflo, MapKind::DufloMod, MapKind::SymMod, MapKind::Npp};

/// CLI names: sym, duflo, duflo-mod, sym-mod, npp.
std::string_view to_string(MapKind kind);
/// Throws Error(InvalidArgument) for unknown names.
MapKind parse_map_kind(std::string_view name);

}  // namespace duflo
