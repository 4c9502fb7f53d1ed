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
#include <limits>
#include <stdexcept>

#include "switchpot/bsp_schedule.hpp"

namespace switchpot {
namespace {

constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();

struct Sent {
  std::uint32_t superstep;
  ProcId from, to;
};

}  // namespace

BspSchedule evaluation_to_envelope_schedule(const SwitchingDag& dag, const BspSchedule& sched) {
  const ScheduleCheck check = validate_evaluation(dag, sched);
  if (!check.ok()) throw std::invalid_argument("evaluation_to_envelope_schedule: " + check.message);
  const std::uint32_t p = sched.p;
  std::vector<ProcId> owner(dag.nodeCount(), 0);
  std::vector<std::uint32_t> step(dag.nodeCount(), 0);
  for (auto [u, proc] : sched.inputPlacement) owner[u] = proc;
  for (std::size_t s = 0; s < sched.supersteps.size(); ++s) {
    const auto& work = sched.supersteps[s].work;
    for (std::size_t i = 0; i < work.size(); ++i) {
      for (NodeId v : work[i]) {
        owner[v] = static_cast<ProcId>(i);
        step[v] = static_cast<std::uint32_t>(s);
      }
    }
  }
  // When each copy of a value first becomes usable, and which messages
  // carried it.
  std::vector<std::uint32_t> avail(dag.nodeCount() * static_cast<std::size_t>(p), kNever);
  for (NodeId v = 0; v < dag.nodeCount(); ++v) avail[v * p + owner[v]] = step[v];
  std::vector<std::vector<Sent>> carried(dag.nodeCount());
  for (std::size_t s = 0; s < sched.supersteps.size(); ++s) {
    const auto ss = static_cast<std::uint32_t>(s);
    for (const Message& m : sched.supersteps[s].messages) {
      carried[m.payload].push_back({ss, m.from, m.to});
      auto& slot = avail[m.payload * p + m.to];
      slot = std::min(slot, ss + 1);
    }
  }

  BspSchedule out;
  out.kind = PayloadKind::kEnvelope;
  out.p = p;
  out.inputPlacement = sched.inputPlacement;
  out.supersteps.resize(sched.supersteps.size());
  for (std::size_t s = 0; s < sched.supersteps.size(); ++s) out.supersteps[s].work = sched.supersteps[s].work;

  for (const Arc& a : dag.arcs()) {
    const NodeId u = a.src, v = a.dst;
    ProcId at = owner[v];
    std::uint32_t deadline = step[v];
    while (at != owner[u]) {
      const Sent* hop = nullptr;
      for (const Sent& m : carried[u]) {
        if (m.to == at && m.superstep + 1 <= deadline && avail[u * p + m.from] <= m.superstep) {
          if (hop == nullptr || m.superstep < hop->superstep) hop = &m;
        }
      }
      if (hop == nullptr) throw std::logic_error("no relay chain for a validated operand");
      out.supersteps[hop->superstep].messages.push_back({hop->from, hop->to, a.id});
      at = hop->from;
      deadline = hop->superstep;
    }
  }
  for (Superstep& st : out.supersteps) {
    std::stable_sort(st.messages.begin(), st.messages.end(), [](const Message& x, const Message& y) {
      return x.from != y.from ? x.from < y.from : x.payload < y.payload;
    });
  }
  return out;
}

EnvelopeRun induced_run(const SwitchingDag& dag, const BspSchedule& envSched, const SwitchConfiguration& config) {
  const std::vector<EnvelopeId> env = envelopes_on_arcs(dag, config);
  EnvelopeRun run;
  run.initialPlacement.resize(dag.switchingSize());
  for (ArcId a : dag.einArcs()) run.initialPlacement[dag.einNumber(a) - 1] = dag.arc(a).src;
  for (const Superstep& st : envSched.supersteps) {
    for (const auto& list : st.work) {
      for (NodeId v : list) {
        for (ArcId a : dag.inArcs(v)) run.moves.push_back({a, env[a]});
      }
    }
  }
  return run;
}

}  // namespace switchpot
