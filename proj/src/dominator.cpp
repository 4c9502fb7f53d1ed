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

#include "switchpot/dominator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "switchpot/potential.hpp"

namespace switchpot {
namespace {

// |V| minus the nodes reachable from inputs without entering W.
std::uint64_t dominated_count(const SwitchingDag& dag, const std::vector<char>& inW, std::vector<char>& seen,
                              std::vector<NodeId>& stack) {
  std::fill(seen.begin(), seen.end(), 0);
  stack.clear();
  std::uint64_t reached = 0;
  for (NodeId u : dag.inputOrder()) {
    if (!inW[u] && !seen[u]) {
      seen[u] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    ++reached;
    for (ArcId a : dag.outArcs(v)) {
      const NodeId x = dag.arc(a).dst;
      if (!inW[x] && !seen[x]) {
        seen[x] = 1;
        stack.push_back(x);
      }
    }
  }
  return dag.nodeCount() - reached;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<NodeId> dominated_set(const SwitchingDag& dag, const std::vector<NodeId>& W) {
  std::vector<char> inW(dag.nodeCount(), 0), seen(dag.nodeCount(), 0);
  for (NodeId w : W) {
    if (w >= dag.nodeCount()) throw std::invalid_argument("dominated_set: unknown node " + std::to_string(w));
    inW[w] = 1;
  }
  std::vector<NodeId> stack;
  dominated_count(dag, inW, seen, stack);
  std::vector<NodeId> out;
  for (NodeId v = 0; v < dag.nodeCount(); ++v) {
    if (!seen[v]) out.push_back(v);
  }
  return out;
}

std::uint64_t subset_budget_from_env() {
  if (const char* s = std::getenv("SWITCHPOT_SUBSET_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return kDefaultSubsetBudget;
}

DominatorResult D_k_bruteforce(const SwitchingDag& dag, std::uint32_t k, std::uint64_t budget) {
  const std::size_t nv = dag.nodeCount();
  if (k == 0 || k > nv) throw std::invalid_argument("D_k_bruteforce: need 1 <= k <= |V|");
  const BigInt subsets = binomial(nv, k);
  if (subsets > budget) {
    throw SubsetSearchInfeasible("D_k_bruteforce: C(" + std::to_string(nv) + ", " + std::to_string(k) +
                                 ") = " + subsets.str() + " subsets exceed the budget of " + std::to_string(budget) +
                                 "; try a smaller k or a smaller DAG");
  }
  DominatorResult r;
  r.k = k;
  r.boundHK = k >= 2 ? hong_kung_bound(k) : 0;
  r.boundImproved = k >= 2 ? improved_bound(k) : 0;

  // Colex order: advance the lowest index that can move, reset those below.
  std::vector<NodeId> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<char> inW(nv, 0), seen(nv, 0);
  std::vector<NodeId> stack;
  for (;;) {
    for (NodeId v : idx) inW[v] = 1;
    const std::uint64_t c = dominated_count(dag, inW, seen, stack);
    for (NodeId v : idx) inW[v] = 0;
    ++r.subsetsVisited;
    if (c > r.Dk || r.witness.empty()) {
      r.Dk = c;
      r.witness = idx;
    }
    // Nothing can dominate more than every node.
    if (r.Dk == nv) break;
    std::uint32_t i = 0;
    while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : nv)) ++i;
    if (i == k) break;
    ++idx[i];
    for (std::uint32_t j = 0; j < i; ++j) idx[j] = j;
  }
  return r;
}

double improved_bound(double k) {
  if (k < 2) throw std::invalid_argument("improved_bound: need k >= 2");
  return k * std::log2(2 * k);
}

double hong_kung_bound(double k) {
  if (k < 2) throw std::invalid_argument("hong_kung_bound: need k >= 2");
  return 2 * k * std::log2(k);
}

}  // namespace switchpot
