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

#include "placement_counter.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "switchpot/potential.hpp"

namespace switchpot::detail {
namespace {

// Keeps the distinct-placement sets of one batch under this many bytes.
constexpr std::uint64_t kMemoryCap = std::uint64_t{256} << 20;

}  // namespace

std::vector<BigInt> count_placements(const SwitchingDag& dag, const std::vector<BoundarySnapshot>& boundaries,
                                     std::uint32_t locationCount, std::uint64_t budget) {
  const std::uint64_t configs = checked_configuration_count(dag, budget);
  const std::uint32_t n = dag.switchingSize();
  for (const auto& b : boundaries) {
    if (b.size() != n) throw std::logic_error("boundary does not hold every envelope exactly once");
  }
  const std::size_t width = locationCount <= 0xff ? 1 : locationCount <= 0xffff ? 2 : 4;

  // Identical snapshots share one count.
  std::map<BoundarySnapshot, std::size_t> uniqueIndex;
  std::vector<std::size_t> slot(boundaries.size());
  std::vector<const BoundarySnapshot*> unique;
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    auto [it, fresh] = uniqueIndex.emplace(boundaries[i], unique.size());
    if (fresh) unique.push_back(&boundaries[i]);
    slot[i] = it->second;
  }

  const std::uint64_t perBoundary = std::max<std::uint64_t>(1, configs * (n * width + 64));
  const std::size_t batch = static_cast<std::size_t>(std::max<std::uint64_t>(1, kMemoryCap / perBoundary));
  std::vector<BigInt> counts(unique.size());
  std::string key(n * width, '\0');
  for (std::size_t lo = 0; lo < unique.size(); lo += batch) {
    const std::size_t hi = std::min(unique.size(), lo + batch);
    std::vector<std::unordered_set<std::string>> seen(hi - lo);
    for_each_configuration(dag, 0, configs, [&](const SwitchConfiguration& c) {
      const std::vector<EnvelopeId> env = envelopes_on_arcs(dag, c);
      for (std::size_t b = lo; b < hi; ++b) {
        for (auto [arc, loc] : *unique[b]) {
          const std::size_t at = (env[arc] - 1) * width;
          for (std::size_t k = 0; k < width; ++k) key[at + k] = static_cast<char>(loc >> (8 * k) & 0xff);
        }
        seen[b - lo].insert(key);
      }
    });
    for (std::size_t b = lo; b < hi; ++b) counts[b] = seen[b - lo].size();
  }
  std::vector<BigInt> out(boundaries.size());
  for (std::size_t i = 0; i < boundaries.size(); ++i) out[i] = counts[slot[i]];
  return out;
}

}  // namespace switchpot::detail
