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

#include "switchpot/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace switchpot {
namespace {

// All permutations of 0..d-1 in lexicographic order.
const std::vector<std::vector<std::uint32_t>>& permutation_table(std::uint32_t d) {
  static thread_local std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> cache;
  auto& t = cache[d];
  if (t.empty()) {
    std::vector<std::uint32_t> p(d);
    std::iota(p.begin(), p.end(), 0u);
    do {
      t.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return t;
}

BigInt factorial(std::uint32_t d) {
  BigInt f = 1;
  for (std::uint32_t k = 2; k <= d; ++k) f *= k;
  return f;
}

// Follows ein arc j through the configuration; returns the final arc.
ArcId trace(const SwitchingDag& dag, const SwitchConfiguration& config, ArcId a) {
  for (;;) {
    const Arc& arc = dag.arc(a);
    if (dag.kind(arc.dst) != NodeKind::kInternal) return a;
    const auto outs = dag.outArcs(arc.dst);
    a = outs[config.map[arc.dst][arc.dstPort - 1]];
  }
}

}  // namespace

std::string to_string(const RealizedPermutation& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.rho.size(); ++i) os << (i ? "," : "") << p.rho[i];
  os << ')';
  return os.str();
}

SwitchConfiguration identity_configuration(const SwitchingDag& dag) {
  SwitchConfiguration c;
  c.map.resize(dag.nodeCount());
  for (NodeId v : dag.internalNodes()) {
    c.map[v].resize(dag.inDegree(v));
    std::iota(c.map[v].begin(), c.map[v].end(), 0u);
  }
  return c;
}

void check_configuration(const SwitchingDag& dag, const SwitchConfiguration& config) {
  if (config.map.size() != dag.nodeCount()) {
    throw std::invalid_argument("configuration covers " + std::to_string(config.map.size()) +
                                " nodes, DAG has " + std::to_string(dag.nodeCount()));
  }
  for (NodeId v = 0; v < dag.nodeCount(); ++v) {
    const auto& m = config.map[v];
    if (dag.kind(v) != NodeKind::kInternal) {
      if (!m.empty()) throw std::invalid_argument("configuration sets non-internal node " + std::to_string(v));
      continue;
    }
    if (m.size() != dag.inDegree(v) || m.size() != dag.outDegree(v)) {
      throw std::invalid_argument("configuration missing or wrong size at node " + std::to_string(v));
    }
    std::vector<char> hit(m.size(), 0);
    for (std::uint32_t o : m) {
      if (o >= m.size() || hit[o]) {
        throw std::invalid_argument("configuration at node " + std::to_string(v) + " is not a bijection");
      }
      hit[o] = 1;
    }
  }
}

RealizedPermutation realized_permutation(const SwitchingDag& dag, const SwitchConfiguration& config) {
  check_configuration(dag, config);
  RealizedPermutation p;
  p.rho.reserve(dag.switchingSize());
  for (ArcId a : dag.einArcs()) p.rho.push_back(dag.eoutNumber(trace(dag, config, a)));
  return p;
}

std::vector<EnvelopeId> envelopes_on_arcs(const SwitchingDag& dag, const SwitchConfiguration& config) {
  check_configuration(dag, config);
  if (!dag.isAcyclic()) throw std::invalid_argument("envelopes_on_arcs: DAG is cyclic");
  std::vector<EnvelopeId> env(dag.arcCount(), 0);
  for (ArcId a : dag.einArcs()) env[a] = dag.einNumber(a);
  for (NodeId v : *dag.topologicalOrder()) {
    if (dag.kind(v) != NodeKind::kInternal) continue;
    const auto ins = dag.inArcs(v);
    const auto outs = dag.outArcs(v);
    for (std::size_t k = 0; k < ins.size(); ++k) env[outs[config.map[v][k]]] = env[ins[k]];
  }
  return env;
}

BigInt configuration_count(const SwitchingDag& dag) {
  BigInt c = 1;
  for (NodeId v : dag.internalNodes()) c *= factorial(dag.outDegree(v));
  return c;
}

SwitchConfiguration configuration_from_index(const SwitchingDag& dag, const BigInt& index) {
  if (index < 0 || index >= configuration_count(dag)) {
    throw std::invalid_argument("configuration index out of range");
  }
  SwitchConfiguration c;
  c.map.resize(dag.nodeCount());
  BigInt rest = index;
  for (NodeId v : dag.internalNodes()) {
    const auto& table = permutation_table(dag.outDegree(v));
    const BigInt radix = table.size();
    const auto digit = static_cast<std::size_t>(rest % radix);
    rest /= radix;
    c.map[v] = table[digit];
  }
  return c;
}

EnumerationInfeasible::EnumerationInfeasible(const BigInt& count, std::uint64_t budget)
    : std::runtime_error("enumeration infeasible: " + count.str() +
                         " configurations exceed the budget of " + std::to_string(budget)),
      budget_(budget) {}

std::uint64_t enumeration_budget_from_env() {
  if (const char* s = std::getenv("SWITCHPOT_ENUM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return kDefaultEnumerationBudget;
}

std::uint64_t checked_configuration_count(const SwitchingDag& dag, std::uint64_t budget) {
  const BigInt count = configuration_count(dag);
  if (count > budget) throw EnumerationInfeasible(count, budget);
  return count.convert_to<std::uint64_t>();
}

void for_each_configuration(const SwitchingDag& dag, std::uint64_t begin, std::uint64_t end,
                            const std::function<void(const SwitchConfiguration&)>& fn) {
  if (begin >= end) return;
  const auto& internal = dag.internalNodes();
  SwitchConfiguration c = configuration_from_index(dag, begin);
  std::vector<const std::vector<std::vector<std::uint32_t>>*> tables;
  std::vector<std::size_t> digit;
  {
    std::uint64_t rest = begin;
    for (NodeId v : internal) {
      tables.push_back(&permutation_table(dag.outDegree(v)));
      digit.push_back(rest % tables.back()->size());
      rest /= tables.back()->size();
    }
  }
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    fn(c);
    for (std::size_t i = 0; i < internal.size(); ++i) {
      if (++digit[i] == tables[i]->size()) digit[i] = 0;
      c.map[internal[i]] = (*tables[i])[digit[i]];
      if (digit[i] != 0) break;
    }
  }
}

std::size_t PermutationHash::operator()(const RealizedPermutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t x : p.rho) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

PermutationSet realized_permutations(const SwitchingDag& dag, std::uint64_t begin, std::uint64_t end) {
  PermutationSet out;
  RealizedPermutation p;
  p.rho.resize(dag.switchingSize());
  const auto& ein = dag.einArcs();
  for_each_configuration(dag, begin, end, [&](const SwitchConfiguration& c) {
    for (std::size_t j = 0; j < ein.size(); ++j) p.rho[j] = dag.eoutNumber(trace(dag, c, ein[j]));
    out.insert(p);
  });
  return out;
}

PermutationSet realized_permutations(const SwitchingDag& dag, const PotentialOptions& options) {
  if (!validate(dag).ok()) throw std::invalid_argument("realized_permutations: " + validate(dag).first());
  const std::uint64_t total = checked_configuration_count(dag, options.budget);
  const unsigned t = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  if (t == 1) return realized_permutations(dag, 0, total);
  std::vector<PermutationSet> parts(t);
  std::vector<std::thread> workers;
  for (unsigned i = 0; i < t; ++i) {
    const std::uint64_t lo = total * i / t, hi = total * (i + 1) / t;
    workers.emplace_back([&, i, lo, hi] { parts[i] = realized_permutations(dag, lo, hi); });
  }
  for (auto& w : workers) w.join();
  PermutationSet out = std::move(parts[0]);
  for (unsigned i = 1; i < t; ++i) out.merge(parts[i]);
  return out;
}

PotentialResult switching_potential_exact(const SwitchingDag& dag, const PotentialOptions& options) {
  PotentialResult r;
  r.configurations = configuration_count(dag);
  r.gamma = realized_permutations(dag, options).size();
  if (r.gamma > r.configurations || r.gamma > factorial(dag.switchingSize())) {
    throw std::logic_error("switching potential exceeds its combinatorial ceiling");
  }
  return r;
}

Family parse_family(const std::string& name) {
  if (name == "fft") return Family::kFft;
  if (name == "bmn") return Family::kBmn;
  if (name == "sorting-net") return Family::kSortingNetwork;
  if (name == "permutation-net") return Family::kPermutationNetwork;
  throw std::invalid_argument("unknown family '" + name + "' (fft, bmn, sorting-net, permutation-net)");
}

const char* to_string(Family f) {
  switch (f) {
    case Family::kFft:
      return "fft";
    case Family::kBmn:
      return "bmn";
    case Family::kSortingNetwork:
      return "sorting-net";
    case Family::kPermutationNetwork:
      return "permutation-net";
  }
  return "?";
}

AnalyticPotential switching_potential_analytic(Family family, std::uint32_t n) {
  AnalyticPotential a{family, n, 0, false};
  switch (family) {
    case Family::kFft:
    case Family::kBmn:
      if (n < 2 || !is_power_of_two(n)) throw std::invalid_argument("n must be a power of two >= 2");
      a.log2Gamma = static_cast<double>(n) * (ilog2(n) - 1.0);
      break;
    case Family::kSortingNetwork:
    case Family::kPermutationNetwork:
      if (n < 1) throw std::invalid_argument("n must be positive");
      a.log2Gamma = log2_factorial(n);
      a.isLowerBound = true;
      break;
  }
  return a;
}

double log2_factorial(std::uint64_t u) {
  double sum = 0, comp = 0;
  for (std::uint64_t k = 2; k <= u; ++k) {
    const double y = std::log2(static_cast<double>(k)) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace switchpot
