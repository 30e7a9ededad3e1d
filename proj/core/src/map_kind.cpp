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

#include "duflo/quantmaps/map_kind.hpp"

#include <string>

#include "duflo/error.hpp"

namespace duflo {

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Sym: return "sym";
    case MapKind::Duflo: return "duflo";
    case MapKind::DufloMod: return "duflo-mod";
    case MapKind::SymMod: return "sym-mod";
    case MapKind::Npp: return "npp";
  }
  return "unknown";
}

MapKind parse_map_kind(std::string_view name) {
  for (MapKind kind : kAllMapKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown map '" + std::string(name) + "'");
}

}  // namespace duflo
