// Copyright 2026 The switchpot Authors.
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

#ifndef SWITCHPOT_SRC_PLACEMENT_COUNTER_HPP_
#define SWITCHPOT_SRC_PLACEMENT_COUNTER_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "switchpot/dag.hpp"

namespace switchpot::detail {

// Where each live envelope-carrying arc sits at one boundary. Exactly one
// entry per envelope; `location` is an opaque small integer.
using BoundarySnapshot = std::vector<std::pair<ArcId, std::uint32_t>>;

// For every boundary, the number of distinct envelope->location maps over all
// switch configurations. Throws EnumerationInfeasible past `budget`.
std::vector<BigInt> count_placements(const SwitchingDag& dag, const std::vector<BoundarySnapshot>& boundaries,
                                     std::uint32_t locationCount, std::uint64_t budget);

}  // namespace switchpot::detail

#endif  // SWITCHPOT_SRC_PLACEMENT_COUNTER_HPP_
