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

#ifndef SWITCHPOT_ENVELOPE_GAME_HPP_
#define SWITCHPOT_ENVELOPE_GAME_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "switchpot/dag.hpp"
#include "switchpot/potential.hpp"

namespace switchpot {

struct Move {
  ArcId arc = 0;
  EnvelopeId envelope = 0;
  bool operator==(const Move&) const = default;
};

// initialPlacement[e-1] is the input node holding envelope e.
struct EnvelopeRun {
  std::vector<NodeId> initialPlacement;
  std::vector<Move> moves;
  bool operator==(const EnvelopeRun&) const = default;
};

enum class RunStatus { kOk, kRuleViolation, kStructuralError };

struct RunCheck {
  RunStatus status = RunStatus::kOk;
  int rule = 0;           // 1..6 for rule violations
  std::size_t move = 0;   // 1-based; 0 = initial placement, moves.size() = final state
  std::string message;
  bool ok() const { return status == RunStatus::kOk; }
};

// Replays the run and reports the earliest problem. Structural errors
// (unknown arc or envelope, wrong placement length) are distinct from rule
// violations.
RunCheck validate_run(const SwitchingDag& dag, const EnvelopeRun& run);

// Envelope e starts at the input owning ein arc e. Nodes are switched in
// `nodeOrder` (a topological order); every arrival at a node precedes its
// departures, arcs at a node are taken by port.
EnvelopeRun run_from_configuration(const SwitchingDag& dag, const SwitchConfiguration& config,
                                   std::span<const NodeId> nodeOrder);
// Uses the DAG's smallest-id-first topological order.
EnvelopeRun run_from_configuration(const SwitchingDag& dag, const SwitchConfiguration& config);

// Maps each envelope's first arc (ein) to its last arc (eout). Throws
// std::invalid_argument for an invalid run.
RealizedPermutation run_permutation(const SwitchingDag& dag, const EnvelopeRun& run);

// Every permutation reachable by some legal run, by depth-first play over
// the choice of which waiting envelope takes which free out-arc. Intended for
// tiny DAGs.
PermutationSet game_permutations(const SwitchingDag& dag);

}  // namespace switchpot

#endif  // SWITCHPOT_ENVELOPE_GAME_HPP_
