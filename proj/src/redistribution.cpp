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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "placement_counter.hpp"
#include "switchpot/bsp_schedule.hpp"

namespace switchpot {
namespace {

constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();

// p e <= N, with e to 16 digits as a rational.
bool within_placement_regime(std::uint64_t p, std::uint64_t n) {
  const BigInt eNum("2718281828459045");
  const BigInt eDen("1000000000000000");
  return BigInt(p) * eNum <= BigInt(n) * eDen;
}

}  // namespace

RedistributionTrace redistribution_trace(const SwitchingDag& dag, const BspSchedule& envSched, std::uint64_t budget) {
  const ScheduleCheck check = validate_envelope_schedule(dag, envSched);
  if (!check.ok()) throw std::invalid_argument("redistribution_trace: " + check.message);
  const auto steps = static_cast<std::uint32_t>(envSched.supersteps.size());
  const std::uint32_t p = envSched.p;

  std::vector<std::uint32_t> stepOf(dag.nodeCount(), kNever);
  std::vector<ProcId> owner(dag.nodeCount(), 0);
  for (auto [u, proc] : envSched.inputPlacement) owner[u] = proc;
  for (std::uint32_t s = 0; s < steps; ++s) {
    const auto& work = envSched.supersteps[s].work;
    for (std::size_t i = 0; i < work.size(); ++i) {
      for (NodeId v : work[i]) {
        stepOf[v] = s;
        owner[v] = static_cast<ProcId>(i);
      }
    }
  }
  std::vector<std::vector<std::pair<std::uint32_t, ProcId>>> hops(dag.arcCount());
  for (std::uint32_t s = 0; s < steps; ++s) {
    for (const Message& m : envSched.supersteps[s].messages) hops[m.payload].emplace_back(s, m.to);
  }

  // Boundary b sits before superstep b; b = steps is after the last one.
  std::vector<detail::BoundarySnapshot> snaps(steps + 1);
  RedistributionTrace t;
  t.p = p;
  const CostReport cost = communication_complexity(envSched);
  for (std::size_t s = 0; s < cost.degree.size(); ++s) {
    if (cost.degree[s] > 1) {
      throw std::invalid_argument("redistribution_trace: superstep " + std::to_string(s) + " has degree " +
                                  std::to_string(cost.degree[s]) + "; decompose to degree 1 first");
    }
  }
  t.H = cost.H;
  t.holdings.assign(steps + 1, std::vector<std::uint32_t>(p, 0));
  for (const Arc& a : dag.arcs()) {
    const std::uint32_t from = dag.kind(a.src) == NodeKind::kInput ? 0 : stepOf[a.src] + 1;
    const std::uint32_t until = dag.kind(a.dst) == NodeKind::kOutput ? steps : stepOf[a.dst];
    ProcId at = owner[a.src];
    std::size_t next = 0;
    for (std::uint32_t b = from; b <= until; ++b) {
      while (next < hops[a.id].size() && hops[a.id][next].first + 1 <= b) at = hops[a.id][next++].second;
      snaps[b].emplace_back(a.id, at);
      ++t.holdings[b][at];
    }
  }
  t.eta = detail::count_placements(dag, snaps, p, budget);
  t.uFinal = *std::max_element(t.holdings.back().begin(), t.holdings.back().end());
  return t;
}

SandwichCheck check_final_placements_lower(const BigInt& gamma, const RedistributionTrace& t, std::uint32_t N) {
  SandwichCheck c;
  const std::uint32_t u = t.uFinal;
  BigInt uFact = 1;
  for (std::uint32_t k = 2; k <= u; ++k) uFact *= k;
  const BigInt lhs = boost::multiprecision::pow(gamma, u);
  const BigInt rhs = boost::multiprecision::pow(t.eta.back(), u) * boost::multiprecision::pow(uFact, N);
  c.ok = lhs <= rhs;
  c.detail = "gamma=" + gamma.str() + " U=" + std::to_string(u) + " eta_end=" + t.eta.back().str() +
             (c.ok ? " satisfies" : " violates") + " gamma^U <= eta^U (U!)^N";
  return c;
}

SandwichCheck check_placements_upper(const RedistributionTrace& t, std::uint32_t N) {
  SandwichCheck c;
  const BigInt& eta = t.eta.back();
  const auto ph = static_cast<unsigned>(t.p * t.H);
  if (within_placement_regime(t.p, N)) {
    c.ok = eta * boost::multiprecision::pow(BigInt(t.p), ph) <= boost::multiprecision::pow(BigInt(N), ph);
    c.detail = "eta_end=" + eta.str() + (c.ok ? " <= " : " > ") + "(N/p)^(pH) with N=" + std::to_string(N) +
               " p=" + std::to_string(t.p) + " H=" + std::to_string(t.H);
  } else {
    const double lhs = log2_big(eta) * std::numbers::ln2;
    const double rhs = static_cast<double>(N) * static_cast<double>(t.H) / std::numbers::e;
    c.ok = lhs <= rhs * (1 + 1e-12) + 1e-12;
    c.detail = "ln eta_end=" + std::to_string(lhs) + (c.ok ? " <= " : " > ") + "N H / e=" + std::to_string(rhs);
  }
  return c;
}

SandwichCheck check_superstep_growth(const RedistributionTrace& t) {
  SandwichCheck c;
  c.ok = true;
  for (std::size_t j = 0; j + 1 < t.eta.size(); ++j) {
    BigInt factor = 1;
    for (std::uint32_t held : t.holdings[j]) {
      if (held >= 1) factor *= held;
    }
    if (t.eta[j + 1] > t.eta[j] * factor) {
      c.ok = false;
      c.detail = "boundary " + std::to_string(j + 1) + ": eta grows from " + t.eta[j].str() + " to " +
                 t.eta[j + 1].str() + ", more than the factor " + factor.str();
      return c;
    }
  }
  c.detail = "growth bounded at all " + std::to_string(t.eta.size() - 1) + " boundaries";
  return c;
}

}  // namespace switchpot
