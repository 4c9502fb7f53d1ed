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

#ifndef SWITCHPOT_CYCLIC_SHIFT_HPP_
#define SWITCHPOT_CYCLIC_SHIFT_HPP_

#include <cstdint>
#include <vector>

#include "switchpot/dag.hpp"

namespace switchpot {

struct ShiftPath {
  std::vector<NodeId> nodes;
  std::vector<ArcId> arcs;
};

// Row visited at level l by the path of input w under shift k:
// floor(w / 2^l) * 2^l + ((w + k) mod 2^l).
constexpr std::uint32_t fft_shift_row(std::uint32_t w, std::uint32_t l, std::uint32_t k) {
  const std::uint32_t span = 1u << l;
  return (w / span) * span + ((w + k) % span);
}

// The n node-disjoint paths of build_fft(n) realizing i -> (i+k) mod n.
// Throws std::invalid_argument for bad n or k, std::logic_error if the
// construction ever produced non-adjacent or intersecting paths.
std::vector<ShiftPath> fft_shift_paths(const SwitchingDag& fft, std::uint32_t k);
std::vector<ShiftPath> fft_shift_paths(std::uint32_t n, std::uint32_t k);

enum class ShiftVerdict { kRealizable, kNotRealizable, kIndeterminate };

const char* to_string(ShiftVerdict v);

struct ShiftCheck {
  std::vector<ShiftVerdict> perShift;                    // index k
  std::vector<std::vector<std::vector<ArcId>>> witness;  // [k][i] arcs, when realizable
  std::uint64_t statesExplored = 0;

  // Realizable only if every shift is; indeterminate beats not-realizable
  // only when no shift was refuted.
  ShiftVerdict overall() const;
};

inline constexpr std::uint64_t kDefaultShiftBudget = std::uint64_t{1} << 22;

// Budget from SWITCHPOT_SEARCH_BUDGET when set, else the default.
std::uint64_t shift_budget_from_env();

// Searches, for every k, for n arc-disjoint paths from inputLabeling[i] to
// outputLabeling[(i+k) mod n]. `budget` caps search states per shift.
ShiftCheck realizes_all_cyclic_shifts(const SwitchingDag& dag, const std::vector<NodeId>& inputLabeling,
                                      const std::vector<NodeId>& outputLabeling,
                                      std::uint64_t budget = kDefaultShiftBudget);
// True iff `paths` (arc lists) are n pairwise arc-disjoint directed paths,
// path i running from inputLabeling[i] to outputLabeling[(i+k) mod n].
bool check_shift_witness(const SwitchingDag& dag, const std::vector<NodeId>& inputLabeling,
                         const std::vector<NodeId>& outputLabeling, std::uint32_t k,
                         const std::vector<std::vector<ArcId>>& paths);

// Natural labelings (inputOrder / outputOrder).
ShiftCheck realizes_all_cyclic_shifts(const SwitchingDag& dag, std::uint64_t budget = kDefaultShiftBudget);

}  // namespace switchpot

#endif  // SWITCHPOT_CYCLIC_SHIFT_HPP_
