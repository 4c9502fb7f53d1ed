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

#ifndef SWITCHPOT_POTENTIAL_HPP_
#define SWITCHPOT_POTENTIAL_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "switchpot/dag.hpp"

namespace switchpot {

// Per internal node v: map[v][k] = out-port (0-based) taken by the envelope
// entering on in-port k (0-based). Entries for non-internal nodes are empty.
struct SwitchConfiguration {
  std::vector<std::vector<std::uint32_t>> map;
  bool operator==(const SwitchConfiguration&) const = default;
};

// rho[j-1] = eout number reached from ein arc j; values are 1-based.
struct RealizedPermutation {
  std::vector<std::uint32_t> rho;
  bool operator==(const RealizedPermutation&) const = default;
  auto operator<=>(const RealizedPermutation&) const = default;
};

std::string to_string(const RealizedPermutation& p);

// Straight-through setting (identity bijection) at every internal node.
SwitchConfiguration identity_configuration(const SwitchingDag& dag);

// Throws std::invalid_argument for a missing node or a non-bijection.
void check_configuration(const SwitchingDag& dag, const SwitchConfiguration& config);

RealizedPermutation realized_permutation(const SwitchingDag& dag, const SwitchConfiguration& config);

// Envelope (ein number) sitting on each arc after the run of `config`.
std::vector<EnvelopeId> envelopes_on_arcs(const SwitchingDag& dag, const SwitchConfiguration& config);

// prod over internal nodes of delta_out(v)!.
BigInt configuration_count(const SwitchingDag& dag);

// Decodes a mixed-radix index: digit of internal node v (in id order, least
// significant first) is the lexicographic rank of its local bijection.
SwitchConfiguration configuration_from_index(const SwitchingDag& dag, const BigInt& index);

class EnumerationInfeasible : public std::runtime_error {
 public:
  EnumerationInfeasible(const BigInt& count, std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

// Budget from SWITCHPOT_ENUM_BUDGET when set, else the default.
std::uint64_t enumeration_budget_from_env();

// Visits every configuration with index in [begin, end) in counter order.
// The callback sees the same object, updated in place.
void for_each_configuration(const SwitchingDag& dag, std::uint64_t begin, std::uint64_t end,
                            const std::function<void(const SwitchConfiguration&)>& fn);

// Throws EnumerationInfeasible when the count exceeds `budget`.
std::uint64_t checked_configuration_count(const SwitchingDag& dag, std::uint64_t budget);

struct PotentialOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
};

struct PermutationHash {
  std::size_t operator()(const RealizedPermutation& p) const noexcept;
};
using PermutationSet = std::unordered_set<RealizedPermutation, PermutationHash>;

// Distinct realized permutations over configuration indices [begin, end).
PermutationSet realized_permutations(const SwitchingDag& dag, std::uint64_t begin, std::uint64_t end);

// All distinct realized permutations; ranges are processed on `threads`
// workers and merged by set union.
PermutationSet realized_permutations(const SwitchingDag& dag, const PotentialOptions& options = {});

struct PotentialResult {
  BigInt gamma;
  BigInt configurations;
  double log2Gamma() const { return log2_big(gamma); }
};

PotentialResult switching_potential_exact(const SwitchingDag& dag, const PotentialOptions& options = {});

enum class Family { kFft, kBmn, kSortingNetwork, kPermutationNetwork };

// Accepts fft, bmn, sorting-net, permutation-net.
Family parse_family(const std::string& name);
const char* to_string(Family f);

struct AnalyticPotential {
  Family family;
  std::uint32_t n = 0;
  double log2Gamma = 0;  // exact value, or a lower bound when isLowerBound
  bool isLowerBound = false;
};

AnalyticPotential switching_potential_analytic(Family family, std::uint32_t n);

// log2(u!) by compensated summation of log2 k.
double log2_factorial(std::uint64_t u);

}  // namespace switchpot

#endif  // SWITCHPOT_POTENTIAL_HPP_
