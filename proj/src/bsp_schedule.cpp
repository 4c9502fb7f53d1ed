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

#include "switchpot/bsp_schedule.hpp"

#include <algorithm>
#include <limits>

namespace switchpot {

const char* to_string(PayloadKind k) { return k == PayloadKind::kValue ? "value" : "envelope"; }

const char* to_string(ScheduleIssue i) {
  switch (i) {
    case ScheduleIssue::kOk:
      return "ok";
    case ScheduleIssue::kStructural:
      return "structural";
    case ScheduleIssue::kRecomputation:
      return "recomputation";
    case ScheduleIssue::kMissing:
      return "missing";
    case ScheduleIssue::kVisibility:
      return "visibility";
    case ScheduleIssue::kPayloadUnavailable:
      return "payload unavailable";
    case ScheduleIssue::kEnvelopeRule:
      return "envelope rule";
  }
  return "?";
}

std::optional<double> CostReport::time() const {
  if (!g || !l) return std::nullopt;
  return static_cast<double>(W) + static_cast<double>(H) * *g + static_cast<double>(S) * *l;
}

CostReport communication_complexity(const BspSchedule& sched) {
  CostReport r;
  r.S = sched.supersteps.size();
  std::vector<std::uint64_t> sent(sched.p), recv(sched.p);
  for (const Superstep& s : sched.supersteps) {
    std::fill(sent.begin(), sent.end(), 0);
    std::fill(recv.begin(), recv.end(), 0);
    for (const Message& m : s.messages) {
      if (m.from < sched.p) ++sent[m.from];
      if (m.to < sched.p) ++recv[m.to];
    }
    std::uint64_t h = 0, w = 0;
    for (std::uint32_t i = 0; i < sched.p; ++i) h = std::max({h, sent[i], recv[i]});
    for (const auto& list : s.work) w = std::max<std::uint64_t>(w, list.size());
    r.degree.push_back(h);
    r.work.push_back(w);
    r.H += h;
    r.W += w;
  }
  return r;
}

namespace {

constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();

ScheduleCheck issue(ScheduleIssue kind, std::size_t s, ProcId proc, std::uint32_t item, std::string msg) {
  ScheduleCheck c;
  c.issue = kind;
  c.superstep = s;
  c.proc = proc;
  c.item = item;
  c.message = std::string(to_string(kind)) + " in superstep " + std::to_string(s) + ", processor " +
              std::to_string(proc) + ": " + msg;
  return c;
}

std::optional<ScheduleCheck> check_structure(const SwitchingDag& dag, const BspSchedule& sched,
                                             PayloadKind expected) {
  if (sched.kind != expected) {
    return issue(ScheduleIssue::kStructural, 0, 0, 0,
                 std::string("expected a ") + to_string(expected) + " schedule");
  }
  if (sched.p == 0) return issue(ScheduleIssue::kStructural, 0, 0, 0, "p must be positive");
  for (NodeId u : dag.inputOrder()) {
    auto it = sched.inputPlacement.find(u);
    if (it == sched.inputPlacement.end()) {
      return issue(ScheduleIssue::kStructural, 0, 0, u, "input node " + std::to_string(u) + " has no placement");
    }
  }
  for (auto [u, proc] : sched.inputPlacement) {
    if (u >= dag.nodeCount() || dag.kind(u) != NodeKind::kInput) {
      return issue(ScheduleIssue::kStructural, 0, proc, u, "placement names non-input node " + std::to_string(u));
    }
    if (proc >= sched.p) return issue(ScheduleIssue::kStructural, 0, proc, u, "placement processor out of range");
  }
  const std::size_t limit = expected == PayloadKind::kValue ? dag.nodeCount() : dag.arcCount();
  for (std::size_t s = 0; s < sched.supersteps.size(); ++s) {
    const Superstep& st = sched.supersteps[s];
    if (st.work.size() > sched.p) return issue(ScheduleIssue::kStructural, s, 0, 0, "more work lists than processors");
    for (std::size_t i = 0; i < st.work.size(); ++i) {
      for (NodeId v : st.work[i]) {
        if (v >= dag.nodeCount()) {
          return issue(ScheduleIssue::kStructural, s, static_cast<ProcId>(i), v, "unknown node " + std::to_string(v));
        }
      }
    }
    for (const Message& m : st.messages) {
      if (m.from >= sched.p || m.to >= sched.p || m.from == m.to) {
        return issue(ScheduleIssue::kStructural, s, m.from, m.payload,
                     "message " + std::to_string(m.from) + "->" + std::to_string(m.to) + " has bad endpoints");
      }
      if (m.payload >= limit) {
        return issue(ScheduleIssue::kStructural, s, m.from, m.payload, "unknown payload " + std::to_string(m.payload));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ScheduleCheck validate_evaluation(const SwitchingDag& dag, const BspSchedule& sched) {
  if (auto bad = check_structure(dag, sched, PayloadKind::kValue)) return *bad;
  const std::uint32_t p = sched.p;
  // avail[v * p + i]: first superstep in which processor i may use v.
  std::vector<std::uint32_t> avail(dag.nodeCount() * static_cast<std::size_t>(p), kNever);
  std::vector<char> done(dag.nodeCount(), 0);
  for (auto [u, proc] : sched.inputPlacement) {
    avail[u * p + proc] = 0;
    done[u] = 1;
  }
  // Where each node is first listed; an operand computed elsewhere in the
  // same superstep exists but is not yet visible.
  std::vector<std::pair<std::uint32_t, ProcId>> first(dag.nodeCount(), {kNever, 0});
  for (std::size_t s = sched.supersteps.size(); s-- > 0;) {
    const auto& work = sched.supersteps[s].work;
    for (std::size_t i = work.size(); i-- > 0;) {
      for (NodeId v : work[i]) first[v] = {static_cast<std::uint32_t>(s), static_cast<ProcId>(i)};
    }
  }
  for (std::size_t s = 0; s < sched.supersteps.size(); ++s) {
    const Superstep& st = sched.supersteps[s];
    const auto ss = static_cast<std::uint32_t>(s);
    for (std::size_t i = 0; i < st.work.size(); ++i) {
      const auto proc = static_cast<ProcId>(i);
      for (NodeId v : st.work[i]) {
        if (done[v]) {
          return issue(ScheduleIssue::kRecomputation, s, proc, v,
                       "node " + std::to_string(v) +
                           (dag.kind(v) == NodeKind::kInput ? " is an input (placed, not evaluated)" : " evaluated twice"));
        }
        for (ArcId a : dag.inArcs(v)) {
          const NodeId u = dag.arc(a).src;
          if (avail[u * p + proc] <= ss) continue;
          if (!done[u] && !(first[u].first == ss && first[u].second != proc)) {
            return issue(ScheduleIssue::kMissing, s, proc, v,
                         "operand " + std::to_string(u) + " of node " + std::to_string(v) + " not yet evaluated");
          }
          return issue(ScheduleIssue::kVisibility, s, proc, v,
                       "operand " + std::to_string(u) + " of node " + std::to_string(v) + " not visible on processor " +
                           std::to_string(proc));
        }
        done[v] = 1;
        avail[v * p + proc] = ss;
      }
    }
    for (const Message& m : st.messages) {
      if (avail[m.payload * p + m.from] > ss) {
        return issue(ScheduleIssue::kPayloadUnavailable, s, m.from, m.payload,
                     "value " + std::to_string(m.payload) + " not held by sender");
      }
    }
    for (const Message& m : st.messages) {
      auto& slot = avail[m.payload * p + m.to];
      slot = std::min(slot, ss + 1);
    }
  }
  for (NodeId v = 0; v < dag.nodeCount(); ++v) {
    if (!done[v]) {
      return issue(ScheduleIssue::kMissing, sched.supersteps.size(), 0, v, "node " + std::to_string(v) + " never evaluated");
    }
  }
  return {};
}

ScheduleCheck validate_envelope_schedule(const SwitchingDag& dag, const BspSchedule& sched) {
  if (auto bad = check_structure(dag, sched, PayloadKind::kEnvelope)) return *bad;
  constexpr std::uint32_t kAbsent = kNever;
  constexpr std::uint32_t kGone = kNever - 1;
  constexpr std::uint32_t kMoving = kNever - 2;
  std::vector<std::uint32_t> holder(dag.arcCount(), kAbsent);
  std::vector<ProcId> finisher(dag.nodeCount(), kNever);
  for (ArcId a : dag.einArcs()) holder[a] = sched.inputPlacement.at(dag.arc(a).src);
  for (std::size_t s = 0; s < sched.supersteps.size(); ++s) {
    const Superstep& st = sched.supersteps[s];
    for (std::size_t i = 0; i < st.work.size(); ++i) {
      const auto proc = static_cast<ProcId>(i);
      for (NodeId v : st.work[i]) {
        if (dag.kind(v) == NodeKind::kInput || finisher[v] != kNever) {
          return issue(ScheduleIssue::kRecomputation, s, proc, v, "node " + std::to_string(v) + " switched twice");
        }
        for (ArcId a : dag.inArcs(v)) {
          if (holder[a] != proc) {
            return issue(ScheduleIssue::kEnvelopeRule, s, proc, v,
                         "envelope on arc " + std::to_string(a) + " is not at processor " + std::to_string(proc) +
                             " when node " + std::to_string(v) + " is switched");
          }
        }
        finisher[v] = proc;
        if (dag.kind(v) == NodeKind::kOutput) continue;
        for (ArcId a : dag.inArcs(v)) holder[a] = kGone;
        for (ArcId a : dag.outArcs(v)) holder[a] = proc;
      }
    }
    std::vector<std::pair<ArcId, ProcId>> landing;
    for (const Message& m : st.messages) {
      if (holder[m.payload] != m.from) {
        return issue(ScheduleIssue::kPayloadUnavailable, s, m.from, m.payload,
                     "envelope on arc " + std::to_string(m.payload) + " not held by sender");
      }
      const NodeId w = dag.arc(m.payload).dst;
      if (dag.kind(w) == NodeKind::kOutput && finisher[w] != kNever) {
        return issue(ScheduleIssue::kEnvelopeRule, s, m.from, m.payload,
                     "envelope on arc " + std::to_string(m.payload) + " leaves its finished output");
      }
      holder[m.payload] = kMoving;
      landing.emplace_back(m.payload, m.to);
    }
    for (auto [a, to] : landing) holder[a] = to;
  }
  for (NodeId v = 0; v < dag.nodeCount(); ++v) {
    if (dag.kind(v) != NodeKind::kInput && finisher[v] == kNever) {
      return issue(ScheduleIssue::kMissing, sched.supersteps.size(), 0, v, "node " + std::to_string(v) + " never switched");
    }
  }
  return {};
}

ScheduleCheck validate_schedule(const SwitchingDag& dag, const BspSchedule& sched) {
  return sched.kind == PayloadKind::kValue ? validate_evaluation(dag, sched) : validate_envelope_schedule(dag, sched);
}

}  // namespace switchpot
