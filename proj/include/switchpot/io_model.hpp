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

#ifndef SWITCHPOT_IO_MODEL_HPP_
#define SWITCHPOT_IO_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "switchpot/bsp_schedule.hpp"
#include "switchpot/dag.hpp"

namespace switchpot {

enum class IoStepKind { kLocal, kRead, kWrite };
enum class IoOpType { kIdle, kCompute, kEvict, kRead, kWrite };

const char* to_string(IoStepKind k);
const char* to_string(IoOpType t);

// item is a node (value schedules) or an arc (envelope schedules). kCompute
// on an envelope schedule switches node `item`.
struct IoOp {
  IoOpType type = IoOpType::kIdle;
  std::uint32_t item = 0;
  std::uint64_t address = 0;
  bool operator==(const IoOp&) const = default;
};

// All processors run the same kind of step; ops[i] is processor i's lane.
struct IoStep {
  IoStepKind kind = IoStepKind::kLocal;
  std::vector<IoOp> ops;
  bool operator==(const IoStep&) const = default;
};

struct IoSchedule {
  PayloadKind kind = PayloadKind::kValue;
  std::uint32_t p = 1;
  std::optional<std::uint64_t> memory;  // words per processor; nullopt = unbounded
  // Value schedules: input/output node -> address. Envelope schedules:
  // ein/eout arc -> address.
  std::map<std::uint32_t, std::uint64_t> initialLayout;
  std::map<std::uint32_t, std::uint64_t> finalLayout;
  std::vector<IoStep> steps;
  bool operator==(const IoSchedule&) const = default;
};

// Number of read and write steps.
std::uint64_t io_complexity(const IoSchedule& sched);

enum class IoIssue { kOk, kStructural, kRecomputation, kMissing, kCapacity, kConflict, kLayout };

const char* to_string(IoIssue i);

struct IoCheck {
  IoIssue issue = IoIssue::kOk;
  std::size_t step = 0;
  ProcId proc = 0;
  std::string message;
  bool ok() const { return issue == IoIssue::kOk; }
};

// Replays a value schedule: no recomputation, operands local, capacity
// respected, reads see the addressed value, final layout holds the outputs.
// Several processors may read one address in the same step; two writes to
// one address in a step conflict.
IoCheck validate_io_evaluation(const SwitchingDag& dag, const IoSchedule& sched);

// Replays an envelope schedule: envelopes move between shared slots and
// local memories, internal nodes are switched once with every in-arc
// envelope local, writes never overwrite a live envelope.
IoCheck validate_io_envelope(const SwitchingDag& dag, const IoSchedule& sched);

IoCheck validate_io(const SwitchingDag& dag, const IoSchedule& sched);

// Value schedule for build_fft(n): stages of independent sub-butterflies of
// size s = min(n/p, largest power of two with s + 2 <= m), each read,
// computed in place and written back to address = row.
IoSchedule blocked_fft_io_schedule(std::uint32_t n, std::uint32_t p, std::optional<std::uint64_t> memory);

// Envelope schedule following every value's journey in `sched`. Shared
// address x becomes slots x*D .. x*D+D-1 with D the larger of the max
// out-degree and the max output in-degree; memory grows by D; H_B <= D H_A.
IoSchedule evaluation_to_envelope_io(const SwitchingDag& dag, const IoSchedule& sched);

struct IoTrace {
  std::vector<BigInt> eta;            // before each I/O step, then after the end
  std::vector<IoStepKind> kinds;      // kind of I/O step j (between eta[j] and eta[j+1])
  std::vector<BigInt> writeFactor;    // prod of envelopes held by writing processors (1 for reads)
  std::uint64_t H = 0;
  std::uint32_t p = 1;
  std::optional<std::uint64_t> memory;
};

IoTrace io_redistribution_trace(const SwitchingDag& dag, const IoSchedule& envSched,
                                std::uint64_t budget = std::uint64_t{1} << 20);

// Reads never raise eta.
SandwichCheck check_io_reads(const IoTrace& t);
// eta_{j+1} <= eta_j * writeFactor_j at every write.
SandwichCheck check_io_writes(const IoTrace& t);
// eta_end <= min(m, N/p)^(pH), i.e. H >= log eta_end / (p log min(m, N/p)).
SandwichCheck check_io_placements_upper(const IoTrace& t, std::uint32_t N);

}  // namespace switchpot

#endif  // SWITCHPOT_IO_MODEL_HPP_
