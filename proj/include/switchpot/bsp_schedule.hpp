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

#ifndef SWITCHPOT_BSP_SCHEDULE_HPP_
#define SWITCHPOT_BSP_SCHEDULE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "switchpot/dag.hpp"
#include "switchpot/envelope_game.hpp"
#include "switchpot/potential.hpp"

namespace switchpot {

// Value schedules evaluate nodes and ship node values; envelope schedules
// switch nodes and ship envelopes, identified by the arc they travel on.
enum class PayloadKind { kValue, kEnvelope };

const char* to_string(PayloadKind k);

struct Message {
  ProcId from = 0;
  ProcId to = 0;
  std::uint32_t payload = 0;  // node id (value) or arc id (envelope)
  bool operator==(const Message&) const = default;
};

// Local work happens first, then all messages are sent; they become usable
// in the next superstep.
struct Superstep {
  std::vector<std::vector<NodeId>> work;  // per processor, in execution order
  std::vector<Message> messages;
  bool operator==(const Superstep&) const = default;
};

struct BspSchedule {
  PayloadKind kind = PayloadKind::kValue;
  std::uint32_t p = 1;
  std::map<NodeId, ProcId> inputPlacement;
  std::vector<Superstep> supersteps;
  bool operator==(const BspSchedule&) const = default;
};

struct CostReport {
  std::uint64_t H = 0;
  std::uint64_t W = 0;
  std::uint64_t S = 0;
  std::vector<std::uint64_t> degree;  // h_j
  std::vector<std::uint64_t> work;    // w_j
  std::optional<double> g, l;         // carried only for T = W + H g + S l

  std::optional<double> time() const;
};

// h_j = max over processors of max(sent, received).
CostReport communication_complexity(const BspSchedule& sched);

enum class ScheduleIssue {
  kOk,
  kStructural,
  kRecomputation,
  kMissing,
  kVisibility,
  kPayloadUnavailable,
  kEnvelopeRule,
};

const char* to_string(ScheduleIssue i);

struct ScheduleCheck {
  ScheduleIssue issue = ScheduleIssue::kOk;
  std::size_t superstep = 0;
  ProcId proc = 0;
  std::uint32_t item = 0;  // node or arc involved
  std::string message;
  bool ok() const { return issue == ScheduleIssue::kOk; }
};

// Value schedule: every non-input node evaluated exactly once, operands
// visible, message payloads held by their senders. Input nodes count as
// evaluated by their placement.
ScheduleCheck validate_evaluation(const SwitchingDag& dag, const BspSchedule& sched);

// Envelope schedule: each internal node switched once with all of its
// envelopes present; envelopes move (not copy) and end at their output's
// processor; outputs must be listed once all their envelopes are present.
ScheduleCheck validate_envelope_schedule(const SwitchingDag& dag, const BspSchedule& sched);

// Either of the above, by sched.kind.
ScheduleCheck validate_schedule(const SwitchingDag& dag, const BspSchedule& sched);

// Block placement, K = ceil(log n / log(n/p)) supersteps; superstep t
// evaluates levels (t b, min((t+1) b, log n)] with b = log(n/p), each row on
// the processor given by the top log p bits of its row with the current
// stage's bits removed. Requires build_fft(n) node ids.
BspSchedule valiant_fft_schedule(std::uint32_t n, std::uint32_t p);

// Splits every superstep of degree h > 1 into h supersteps of degree 1 via
// perfect matchings of the h-regular augmented message multigraph. Work goes
// to the first piece. H is preserved.
BspSchedule decompose_degree_one(const BspSchedule& sched);

// Turns a valid value schedule into an envelope schedule: same placement and
// work lists, one envelope message per hop of each arc crossing processors
// (relays reuse the original message chain), so H_B <= Delta H_A. Throws
// std::invalid_argument if `sched` does not validate.
BspSchedule evaluation_to_envelope_schedule(const SwitchingDag& dag, const BspSchedule& sched);

// The run the envelope schedule performs under `config`: nodes in
// (superstep, processor, position) order, each taking its in-arc moves.
EnvelopeRun induced_run(const SwitchingDag& dag, const BspSchedule& envSched,
                        const SwitchConfiguration& config);

struct RedistributionTrace {
  std::vector<BigInt> eta;                           // boundaries 1..S+1 (index 0 = before superstep 1)
  std::vector<std::vector<std::uint32_t>> holdings;  // [boundary][proc] envelopes held
  std::uint32_t uFinal = 0;
  std::uint64_t H = 0;
  std::uint32_t p = 0;
};

// Enumerates all configurations and counts distinct envelope->processor
// placements at each superstep boundary. Requires a valid envelope schedule
// whose supersteps all have degree <= 1.
RedistributionTrace redistribution_trace(const SwitchingDag& dag, const BspSchedule& envSched,
                                         std::uint64_t budget = std::uint64_t{1} << 20);

struct SandwichCheck {
  bool ok = false;
  std::string detail;
};

// gamma^U <= eta_end^U * (U!)^N, i.e. eta_end >= gamma / (U!)^(N/U).
SandwichCheck check_final_placements_lower(const BigInt& gamma, const RedistributionTrace& t, std::uint32_t N);
// eta_end <= (N/p)^(pH) when p e <= N, else log eta_end <= N H / e (nats).
SandwichCheck check_placements_upper(const RedistributionTrace& t, std::uint32_t N);
// eta_{j+1} <= eta_j * prod_{i: t_ij >= 1} t_ij at every boundary.
SandwichCheck check_superstep_growth(const RedistributionTrace& t);

}  // namespace switchpot

#endif  // SWITCHPOT_BSP_SCHEDULE_HPP_
