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

#ifndef SWITCHPOT_NETWORKS_HPP_
#define SWITCHPOT_NETWORKS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "switchpot/dag.hpp"

namespace switchpot {

// Node id of <w,l> in the level-structured families below.
constexpr NodeId level_node(std::uint32_t n, std::uint32_t w, std::uint32_t l) { return l * n + w; }

// Butterfly DAG: <w,l> -> <w',l+1> iff w' == w or w' == w ^ 2^l.
// Ports at every node follow the neighbour's row, ascending.
SwitchingDag build_fft(std::uint32_t n);

// Balanced merging network: <w,l> -> <w,l+1> and to its mirror inside the
// current block of size s = n/2^l, i.e. w' = (i+1)s - 1 - (w mod s), i = w/s.
SwitchingDag build_bmn(std::uint32_t n);

// log n merging blocks chained so that the last level of block b is the first
// level of block b+1. Levels 0..(log n)^2; one Block entry per merger.
SwitchingDag build_pbsn(std::uint32_t n);

// Re-rooted copy of one recorded block, with its first level as inputs and
// its last level as outputs.
SwitchingDag extract_block(const SwitchingDag& dag, std::size_t block);

enum class NetworkKind { kSorting, kRouting };

// Lines are 0-based. Every comparator/switch (i, j) has i < j; a sorting
// comparator sends the minimum to line i.
struct ComparatorNetwork {
  std::uint32_t width = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> stages;
  NetworkKind kind = NetworkKind::kSorting;

  std::size_t comparatorCount() const;
};

// Throws std::invalid_argument on out-of-range lines or a line used twice in
// one stage.
void check_network(const ComparatorNetwork& net);

ComparatorNetwork build_bitonic(std::uint32_t n);
ComparatorNetwork build_benes(std::uint32_t n);

// Runs a sorting network on concrete keys.
std::vector<int> apply_network(const ComparatorNetwork& net, std::vector<int> keys);

// Two internal nodes (min, max) per comparator, each fed by the current node
// of both lines. Output j receives two parallel arcs from the last node of
// line j. Node ids: inputs, then comparator nodes in stage order, then outputs.
SwitchingDag comparator_network_to_dag(const ComparatorNetwork& net);

}  // namespace switchpot

#endif  // SWITCHPOT_NETWORKS_HPP_
