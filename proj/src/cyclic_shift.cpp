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

#include "switchpot/cyclic_shift.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "switchpot/networks.hpp"

namespace switchpot {

const char* to_string(ShiftVerdict v) {
  switch (v) {
    case ShiftVerdict::kRealizable:
      return "realizable";
    case ShiftVerdict::kNotRealizable:
      return "not-realizable";
    case ShiftVerdict::kIndeterminate:
      return "indeterminate";
  }
  return "?";
}

std::vector<ShiftPath> fft_shift_paths(const SwitchingDag& fft, std::uint32_t k) {
  const std::uint32_t n = fft.inputCount();
  if (n < 2 || !is_power_of_two(n)) throw std::invalid_argument("fft_shift_paths: n must be a power of two >= 2");
  if (k >= n) throw std::invalid_argument("fft_shift_paths: k must be in [0, n)");
  const std::uint32_t levels = ilog2(n);
  if (fft.nodeCount() != static_cast<std::size_t>(n) * (levels + 1)) {
    throw std::invalid_argument("fft_shift_paths: not a butterfly DAG");
  }
  std::vector<ShiftPath> paths(n);
  std::vector<char> seen(fft.nodeCount(), 0);
  for (std::uint32_t w = 0; w < n; ++w) {
    ShiftPath& p = paths[w];
    for (std::uint32_t l = 0; l <= levels; ++l) {
      const NodeId v = level_node(n, fft_shift_row(w, l, k), l);
      if (seen[v]) throw std::logic_error("shift paths intersect at node " + std::to_string(v));
      seen[v] = 1;
      if (l > 0) {
        ArcId hop = kNoArc;
        for (ArcId a : fft.outArcs(p.nodes.back())) {
          if (fft.arc(a).dst == v) hop = a;
        }
        if (hop == kNoArc) throw std::logic_error("shift path steps between non-adjacent nodes");
        p.arcs.push_back(hop);
      }
      p.nodes.push_back(v);
    }
  }
  return paths;
}

std::vector<ShiftPath> fft_shift_paths(std::uint32_t n, std::uint32_t k) {
  return fft_shift_paths(build_fft(n), k);
}

ShiftVerdict ShiftCheck::overall() const {
  bool indeterminate = false;
  for (ShiftVerdict v : perShift) {
    if (v == ShiftVerdict::kNotRealizable) return v;
    if (v == ShiftVerdict::kIndeterminate) indeterminate = true;
  }
  return indeterminate ? ShiftVerdict::kIndeterminate : ShiftVerdict::kRealizable;
}

std::uint64_t shift_budget_from_env() {
  if (const char* s = std::getenv("SWITCHPOT_SEARCH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return kDefaultShiftBudget;
}

bool check_shift_witness(const SwitchingDag& dag, const std::vector<NodeId>& inputLabeling,
                         const std::vector<NodeId>& outputLabeling, std::uint32_t k,
                         const std::vector<std::vector<ArcId>>& paths) {
  const std::size_t n = inputLabeling.size();
  if (paths.size() != n || outputLabeling.size() != n) return false;
  std::vector<char> used(dag.arcCount(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = paths[i];
    if (p.empty()) return false;
    NodeId at = inputLabeling[i];
    for (ArcId a : p) {
      if (a >= dag.arcCount() || used[a] || dag.arc(a).src != at) return false;
      used[a] = 1;
      at = dag.arc(a).dst;
    }
    if (at != outputLabeling[(i + k) % n]) return false;
  }
  return true;
}

namespace {

class ShiftSearch {
 public:
  ShiftSearch(const SwitchingDag& dag, const std::vector<NodeId>& in, const std::vector<NodeId>& out,
              std::uint64_t budget)
      : dag_(dag), in_(in), out_(out), budget_(budget), words_((dag.nodeCount() + 63) / 64) {
    reach_.assign(dag.nodeCount(), std::vector<std::uint64_t>(words_, 0));
    const auto& topo = *dag.topologicalOrder();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      auto& r = reach_[*it];
      r[*it / 64] |= std::uint64_t{1} << (*it % 64);
      for (ArcId a : dag.outArcs(*it)) {
        const auto& s = reach_[dag.arc(a).dst];
        for (std::size_t i = 0; i < words_; ++i) r[i] |= s[i];
      }
    }
  }

  ShiftVerdict solve(std::uint32_t k, std::vector<std::vector<ArcId>>& witness) {
    k_ = k;
    steps_ = 0;
    aborted_ = false;
    used_.assign((dag_.arcCount() + 63) / 64, 0);
    failed_.clear();
    paths_.assign(in_.size(), {});
    const bool ok = route(0);
    explored_ += steps_;
    if (ok) {
      witness = paths_;
      return ShiftVerdict::kRealizable;
    }
    return aborted_ ? ShiftVerdict::kIndeterminate : ShiftVerdict::kNotRealizable;
  }

  std::uint64_t explored() const { return explored_; }

 private:
  bool reaches(NodeId x, NodeId t) const { return reach_[x][t / 64] >> (t % 64) & 1u; }
  bool isUsed(ArcId a) const { return used_[a / 64] >> (a % 64) & 1u; }
  void flip(ArcId a) { used_[a / 64] ^= std::uint64_t{1} << (a % 64); }

  std::string key(std::size_t i) const {
    std::string s(reinterpret_cast<const char*>(used_.data()), used_.size() * sizeof(std::uint64_t));
    s.append(reinterpret_cast<const char*>(&i), sizeof(i));
    return s;
  }

  bool route(std::size_t i) {
    if (i == in_.size()) return true;
    const std::string state = key(i);
    if (failed_.count(state)) return false;
    const NodeId t = out_[(i + k_) % in_.size()];
    if (extend(i, in_[i], t)) return true;
    if (!aborted_) failed_.insert(state);
    return false;
  }

  bool extend(std::size_t i, NodeId at, NodeId t) {
    if (at == t) return route(i + 1);
    for (ArcId a : dag_.outArcs(at)) {
      if (isUsed(a) || !reaches(dag_.arc(a).dst, t)) continue;
      if (++steps_ > budget_) {
        aborted_ = true;
        return false;
      }
      flip(a);
      paths_[i].push_back(a);
      if (extend(i, dag_.arc(a).dst, t)) return true;
      paths_[i].pop_back();
      flip(a);
      if (aborted_) return false;
    }
    return false;
  }

  const SwitchingDag& dag_;
  const std::vector<NodeId>& in_;
  const std::vector<NodeId>& out_;
  std::uint64_t budget_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> reach_;
  std::vector<std::uint64_t> used_;
  std::unordered_set<std::string> failed_;
  std::vector<std::vector<ArcId>> paths_;
  std::uint32_t k_ = 0;
  std::uint64_t steps_ = 0, explored_ = 0;
  bool aborted_ = false;
};

}  // namespace

ShiftCheck realizes_all_cyclic_shifts(const SwitchingDag& dag, const std::vector<NodeId>& inputLabeling,
                                      const std::vector<NodeId>& outputLabeling, std::uint64_t budget) {
  if (!dag.isAcyclic()) throw std::invalid_argument("realizes_all_cyclic_shifts: DAG is cyclic");
  const std::size_t n = inputLabeling.size();
  if (n == 0 || outputLabeling.size() != n) {
    throw std::invalid_argument("realizes_all_cyclic_shifts: labelings must both have n >= 1 entries");
  }
  for (NodeId v : inputLabeling) {
    if (v >= dag.nodeCount() || dag.kind(v) != NodeKind::kInput) throw std::invalid_argument("input labeling names a non-input");
  }
  for (NodeId v : outputLabeling) {
    if (v >= dag.nodeCount() || dag.kind(v) != NodeKind::kOutput) throw std::invalid_argument("output labeling names a non-output");
  }
  ShiftCheck result;
  result.perShift.resize(n);
  result.witness.resize(n);
  ShiftSearch search(dag, inputLabeling, outputLabeling, budget);
  for (std::uint32_t k = 0; k < n; ++k) result.perShift[k] = search.solve(k, result.witness[k]);
  result.statesExplored = search.explored();
  return result;
}

ShiftCheck realizes_all_cyclic_shifts(const SwitchingDag& dag, std::uint64_t budget) {
  return realizes_all_cyclic_shifts(dag, dag.inputOrder(), dag.outputOrder(), budget);
}

}  // namespace switchpot
