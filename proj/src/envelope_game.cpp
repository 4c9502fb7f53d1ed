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

#include "switchpot/envelope_game.hpp"

#include <algorithm>
#include <stdexcept>

namespace switchpot {
namespace {

RunCheck fail(RunStatus status, int rule, std::size_t move, std::string msg) {
  RunCheck c;
  c.status = status;
  c.rule = rule;
  c.move = move;
  c.message = status == RunStatus::kRuleViolation
                  ? "Rule " + std::to_string(rule) + " violated at move " + std::to_string(move) + ": " + msg
                  : "structural error at move " + std::to_string(move) + ": " + msg;
  return c;
}

}  // namespace

RunCheck validate_run(const SwitchingDag& dag, const EnvelopeRun& run) {
  const std::uint32_t n = dag.switchingSize();
  if (run.initialPlacement.size() != n) {
    return fail(RunStatus::kStructuralError, 0, 0,
                "placement lists " + std::to_string(run.initialPlacement.size()) + " envelopes, expected " +
                    std::to_string(n));
  }
  std::vector<NodeId> at(n + 1, kNoNode);
  std::vector<std::uint32_t> present(dag.nodeCount(), 0), arrived(dag.nodeCount(), 0);
  for (EnvelopeId e = 1; e <= n; ++e) {
    const NodeId u = run.initialPlacement[e - 1];
    if (u >= dag.nodeCount()) {
      return fail(RunStatus::kStructuralError, 0, 0, "envelope " + std::to_string(e) + " placed on unknown node");
    }
    if (dag.kind(u) != NodeKind::kInput) {
      return fail(RunStatus::kRuleViolation, 1, 0,
                  "envelope " + std::to_string(e) + " starts on non-input node " + std::to_string(u));
    }
    at[e] = u;
    ++present[u];
  }
  for (NodeId u : dag.inputOrder()) {
    if (present[u] != dag.outDegree(u)) {
      return fail(RunStatus::kRuleViolation, 1, 0,
                  "input " + std::to_string(u) + " holds " + std::to_string(present[u]) + " envelopes, expected " +
                      std::to_string(dag.outDegree(u)));
    }
  }
  std::vector<char> used(dag.arcCount(), 0);
  for (std::size_t k = 0; k < run.moves.size(); ++k) {
    const Move& m = run.moves[k];
    const std::size_t pos = k + 1;
    if (m.arc >= dag.arcCount()) return fail(RunStatus::kStructuralError, 0, pos, "unknown arc " + std::to_string(m.arc));
    if (m.envelope < 1 || m.envelope > n) {
      return fail(RunStatus::kStructuralError, 0, pos, "unknown envelope " + std::to_string(m.envelope));
    }
    const Arc& a = dag.arc(m.arc);
    if (at[m.envelope] != a.src) {
      return fail(RunStatus::kRuleViolation, 3, pos,
                  "envelope " + std::to_string(m.envelope) + " is not at the tail of arc " + std::to_string(a.id));
    }
    if (used[a.id]) return fail(RunStatus::kRuleViolation, 4, pos, "arc " + std::to_string(a.id) + " used twice");
    if (arrived[a.src] != dag.inDegree(a.src)) {
      return fail(RunStatus::kRuleViolation, 5, pos,
                  "node " + std::to_string(a.src) + " has " + std::to_string(arrived[a.src]) + " of " +
                      std::to_string(dag.inDegree(a.src)) + " arrivals");
    }
    used[a.id] = 1;
    --present[a.src];
    ++present[a.dst];
    ++arrived[a.dst];
    at[m.envelope] = a.dst;
  }
  for (EnvelopeId e = 1; e <= n; ++e) {
    if (dag.kind(at[e]) != NodeKind::kOutput) {
      return fail(RunStatus::kRuleViolation, 6, run.moves.size(),
                  "envelope " + std::to_string(e) + " ends on non-output node " + std::to_string(at[e]));
    }
  }
  for (NodeId w : dag.outputOrder()) {
    if (present[w] != dag.inDegree(w)) {
      return fail(RunStatus::kRuleViolation, 6, run.moves.size(),
                  "output " + std::to_string(w) + " holds " + std::to_string(present[w]) + " envelopes");
    }
  }
  return {};
}

EnvelopeRun run_from_configuration(const SwitchingDag& dag, const SwitchConfiguration& config,
                                   std::span<const NodeId> nodeOrder) {
  const std::vector<EnvelopeId> env = envelopes_on_arcs(dag, config);
  EnvelopeRun run;
  run.initialPlacement.resize(dag.switchingSize());
  for (ArcId a : dag.einArcs()) run.initialPlacement[dag.einNumber(a) - 1] = dag.arc(a).src;
  run.moves.reserve(dag.arcCount());
  for (NodeId v : nodeOrder) {
    for (ArcId a : dag.outArcs(v)) run.moves.push_back({a, env[a]});
  }
  return run;
}

EnvelopeRun run_from_configuration(const SwitchingDag& dag, const SwitchConfiguration& config) {
  if (!dag.isAcyclic()) throw std::invalid_argument("run_from_configuration: DAG is cyclic");
  return run_from_configuration(dag, config, *dag.topologicalOrder());
}

RealizedPermutation run_permutation(const SwitchingDag& dag, const EnvelopeRun& run) {
  const RunCheck check = validate_run(dag, run);
  if (!check.ok()) throw std::invalid_argument("run_permutation: " + check.message);
  const std::uint32_t n = dag.switchingSize();
  std::vector<ArcId> first(n + 1, kNoArc), last(n + 1, kNoArc);
  for (const Move& m : run.moves) {
    if (first[m.envelope] == kNoArc) first[m.envelope] = m.arc;
    last[m.envelope] = m.arc;
  }
  RealizedPermutation p;
  p.rho.assign(n, 0);
  for (EnvelopeId e = 1; e <= n; ++e) p.rho[dag.einNumber(first[e]) - 1] = dag.eoutNumber(last[e]);
  return p;
}

PermutationSet game_permutations(const SwitchingDag& dag) {
  if (!validate(dag).ok()) throw std::invalid_argument("game_permutations: " + validate(dag).first());
  const auto& order = *dag.topologicalOrder();
  const std::uint32_t n = dag.switchingSize();
  std::vector<std::vector<EnvelopeId>> waiting(dag.nodeCount());
  std::vector<ArcId> lastArc(n + 1, kNoArc);
  PermutationSet out;

  // Envelope e leaves its input on ein arc e.
  for (ArcId a : dag.einArcs()) {
    const EnvelopeId e = dag.einNumber(a);
    lastArc[e] = a;
    waiting[dag.arc(a).dst].push_back(e);
  }

  auto play = [&](auto&& self, std::size_t i) -> void {
    while (i < order.size() && dag.kind(order[i]) != NodeKind::kInternal) ++i;
    if (i == order.size()) {
      RealizedPermutation p;
      p.rho.assign(n, 0);
      for (EnvelopeId e = 1; e <= n; ++e) p.rho[e - 1] = dag.eoutNumber(lastArc[e]);
      out.insert(std::move(p));
      return;
    }
    const NodeId v = order[i];
    std::vector<EnvelopeId> here = waiting[v];
    std::sort(here.begin(), here.end());
    const auto outs = dag.outArcs(v);
    do {
      std::vector<ArcId> saved(here.size());
      for (std::size_t k = 0; k < here.size(); ++k) {
        saved[k] = lastArc[here[k]];
        lastArc[here[k]] = outs[k];
        waiting[dag.arc(outs[k]).dst].push_back(here[k]);
      }
      self(self, i + 1);
      for (std::size_t k = here.size(); k-- > 0;) {
        waiting[dag.arc(outs[k]).dst].pop_back();
        lastArc[here[k]] = saved[k];
      }
    } while (std::next_permutation(here.begin(), here.end()));
  };
  play(play, 0);
  return out;
}

}  // namespace switchpot
