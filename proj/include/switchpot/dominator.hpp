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

#ifndef SWITCHPOT_DOMINATOR_HPP_
#define SWITCHPOT_DOMINATOR_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "switchpot/dag.hpp"

namespace switchpot {

// Nodes u such that every input-to-u path meets W (W itself included),
// sorted ascending.
std::vector<NodeId> dominated_set(const SwitchingDag& dag, const std::vector<NodeId>& W);

struct DominatorResult {
  std::uint32_t k = 0;
  std::uint64_t Dk = 0;
  std::vector<NodeId> witness;
  double boundHK = 0;        // 2k log2 k
  double boundImproved = 0;  // k log2 2k
  std::uint64_t subsetsVisited = 0;
};

class SubsetSearchInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

// Budget from SWITCHPOT_SUBSET_BUDGET when set, else the default.
std::uint64_t subset_budget_from_env();

// Exact D(k) over all size-k node subsets, in colexicographic order.
DominatorResult D_k_bruteforce(const SwitchingDag& dag, std::uint32_t k,
                               std::uint64_t budget = kDefaultSubsetBudget);

// k log2(2k); rejects k < 2.
double improved_bound(double k);
// 2k log2 k; rejects k < 2.
double hong_kung_bound(double k);

}  // namespace switchpot

#endif  // SWITCHPOT_DOMINATOR_HPP_
