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

// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "switchpot/bounds.hpp"
#include "switchpot/bsp_schedule.hpp"
#include "switchpot/cyclic_shift.hpp"
#include "switchpot/dominator.hpp"
#include "switchpot/io_model.hpp"
#include "switchpot/networks.hpp"
#include "switchpot/potential.hpp"

using namespace switchpot;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note.str("");
      note << "failed: " << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

std::uint64_t degree_of(const Superstep& st, std::uint32_t p) {
  std::vector<std::uint64_t> sent(p, 0), recv(p, 0);
  std::uint64_t h = 0;
  for (const Message& m : st.messages) h = std::max({h, ++sent[m.from], ++recv[m.to]});
  return h;
}

void potential_exactness(Outcome& o) {
  const std::uint64_t expect[] = {1, 16, 65536};
  int i = 0;
  double t8 = 0;
  for (std::uint32_t n : {2u, 4u, 8u}) {
    const auto t0 = std::chrono::steady_clock::now();
    const BigInt g = switching_potential_exact(build_fft(n)).gamma;
    if (n == 8) t8 = seconds_since(t0);
    o.require(g == expect[i] && g == BigInt(1) << (n * (ilog2(n) - 1)), "gamma(fft" + std::to_string(n) + ")=" + g.str());
    ++i;
  }
  o.require(t8 < 60, "n=8 took " + std::to_string(t8) + " s");
  if (o.ok) o.note << "gamma = 1, 16, 65536; n=8 in " << t8 << " s";
}

void figure_reproduction(Outcome& o) {
  const SwitchingDag d = build_fft(4);
  const auto a = realized_permutation(d, fixtures::figure_configuration(d, fixtures::kFigureA));
  const auto b = realized_permutation(d, fixtures::figure_configuration(d, fixtures::kFigureB));
  o.require(to_string(a) == "(5,7,1,3,2,4,6,8)", "(a) gave " + to_string(a));
  o.require(to_string(b) == "(1,7,5,3,6,8,2,4)", "(b) gave " + to_string(b));
  if (o.ok) o.note << "rho = " << to_string(a) << " and " << to_string(b);
}

void unique_paths(Outcome& o) {
  std::uint64_t pairs = 0;
  for (std::uint32_t n : {2u, 4u, 8u, 16u}) {
    const SwitchingDag d = build_fft(n);
    o.require(unique_path_check(d).unique, "unique_path_check on fft" + std::to_string(n));
    for (NodeId u : d.inputOrder()) {
      for (NodeId v : d.outputOrder()) {
        o.require(fixtures::count_paths(d, u, v) == 1, "path count on fft" + std::to_string(n));
        ++pairs;
      }
    }
  }
  if (o.ok) o.note << pairs << " input-output pairs, one path each";
}

void cyclic_shifts(Outcome& o) {
  std::uint32_t families = 0;
  for (std::uint32_t n : {4u, 8u, 16u}) {
    const SwitchingDag d = build_fft(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      std::vector<ShiftPath> paths;
      try {
        paths = fft_shift_paths(d, k);
      } catch (const std::exception& e) {
        o.require(false, e.what());
        return;
      }
      std::set<NodeId> seen;
      for (std::uint32_t w = 0; w < n; ++w) {
        const auto& nodes = paths[w].nodes;
        o.require(nodes.front() == d.inputOrder()[w] && nodes.back() == d.outputOrder()[(w + k) % n], "endpoints");
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) o.require(d.arcMultiplicity(nodes[i], nodes[i + 1]) > 0, "adjacency");
        for (NodeId v : nodes) o.require(seen.insert(v).second, "node-disjointness");
      }
      ++families;
    }
  }
  for (auto [name, net] : {std::pair{"bitonic-4", build_bitonic(4)}, std::pair{"benes-4", build_benes(4)}}) {
    const ShiftCheck c = realizes_all_cyclic_shifts(comparator_network_to_dag(net));
    o.require(c.overall() == ShiftVerdict::kRealizable, std::string(name) + " verdict " + to_string(c.overall()));
  }
  if (o.ok) o.note << families << " (n,k) families disjoint; bitonic-4 and benes-4 realize all shifts";
}

void sorting_potential(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const SwitchingDag d = comparator_network_to_dag(build_bitonic(4));
  const PotentialResult r = switching_potential_exact(d);
  const double t = seconds_since(t0);
  o.require(r.gamma >= 24, "gamma " + r.gamma.str() + " < 24");
  o.require(r.gamma <= configuration_count(d), "gamma above configuration count");
  o.require(t < 10, "took " + std::to_string(t) + " s");
  if (o.ok) o.note << "gamma = " << r.gamma << " of " << configuration_count(d) << " configurations in " << t << " s";
}

void redistribution_sandwich(Outcome& o) {
  const SwitchingDag d = build_fft(4);
  const BspSchedule env = decompose_degree_one(evaluation_to_envelope_schedule(d, valiant_fft_schedule(4, 2)));
  for (const Superstep& st : env.supersteps) o.require(degree_of(st, 2) <= 1, "degree above 1 after decomposition");
  const RedistributionTrace t = redistribution_trace(d, env);
  const BigInt gamma = switching_potential_exact(d).gamma;
  const SandwichCheck lo = check_final_placements_lower(gamma, t, 8), hi = check_placements_upper(t, 8),
                      grow = check_superstep_growth(t);
  o.require(lo.ok, lo.detail);
  o.require(hi.ok, hi.detail);
  o.require(grow.ok, grow.detail);

  // Final placements counted directly: envelope j ends where the head of E_out arc rho(j) is listed.
  std::map<NodeId, ProcId> outputProc;
  for (const Superstep& st : env.supersteps) {
    for (ProcId i = 0; i < st.work.size(); ++i) {
      for (NodeId v : st.work[i]) {
        if (d.kind(v) == NodeKind::kOutput) outputProc[v] = i;
      }
    }
  }
  std::set<std::vector<ProcId>> finals;
  for (std::uint64_t i = 0; i < 16; ++i) {
    std::vector<ProcId> where;
    for (std::uint32_t rj : realized_permutation(d, configuration_from_index(d, i)).rho) {
      where.push_back(outputProc.at(d.arc(d.eoutArc(rj)).dst));
    }
    finals.insert(where);
  }
  o.require(t.eta.back() == finals.size(), "eta_end disagrees with direct count");
  if (o.ok) o.note << "eta_end = " << t.eta.back() << ", H = " << t.H << ", U = " << t.uFinal;
}

void decomposition(Outcome& o) {
  std::mt19937_64 rng(20260101);
  auto check = [&](const BspSchedule& s, const std::string& what) {
    const BspSchedule t = decompose_degree_one(s);
    o.require(communication_complexity(t).H == communication_complexity(s).H, what + ": H changed");
    for (const Superstep& st : t.supersteps) o.require(degree_of(st, s.p) <= 1, what + ": degree above 1");
  };
  for (int trial = 0; trial < 50; ++trial) {
    BspSchedule s;
    s.p = 2 + static_cast<std::uint32_t>(rng() % 7);
    for (int j = 0; j < 3; ++j) {
      Superstep st;
      st.work.resize(s.p);
      std::vector<std::uint32_t> sent(s.p, 0), recv(s.p, 0);
      for (int m = 0; m < 40; ++m) {
        const ProcId a = rng() % s.p, b = rng() % s.p;
        if (a == b || sent[a] == 6 || recv[b] == 6) continue;
        ++sent[a];
        ++recv[b];
        st.messages.push_back({a, b, static_cast<std::uint32_t>(m)});
      }
      s.supersteps.push_back(std::move(st));
    }
    check(s, "random schedule " + std::to_string(trial));
  }
  const BspSchedule v = valiant_fft_schedule(16, 4);
  check(v, "valiant(16,4)");
  o.require(validate_evaluation(build_fft(16), decompose_degree_one(v)).ok(), "decomposed valiant(16,4) invalid");
  if (o.ok) o.note << "50 random schedules and valiant(16,4): H preserved, all degrees <= 1";
}

void bound_consistency(Outcome& o) {
  int points = 0;
  for (std::uint32_t n : {8u, 16u, 32u, 64u}) {
    for (std::uint32_t p = 1; 2 * p <= n; p *= 2) {
      const std::uint64_t H = communication_complexity(valiant_fft_schedule(n, p)).H;
      const double ub = valiant_ub(n, p).value;
      const std::uint32_t k = ilog2(n), b = k - ilog2(p);
      o.require(rel(ub, static_cast<double>((k + b - 1) / b) * (n / p)) < 1e-9, "valiant_ub formula");
      const BoundReport lbr = fft_lb(n, p, n / p);
      double lb;
      if (2 * (n / p) <= n) {
        lb = lbr.get("simplified").value();
        const double ref = n * std::log2(n / 2.0) / (8.0 * p * std::log2(2.0 * n / p));
        o.require(rel(lb, ref) < 1e-9, "fft simplified formula");
      } else {
        // p = 1: every output on one processor, q = n exceeds n/2.
        lb = lbr.get("combined").value();
      }
      o.require(lb <= static_cast<double>(H) && static_cast<double>(H) <= ub,
                "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + std::to_string(lb) + " <= " +
                    std::to_string(H) + " <= " + std::to_string(ub));
      ++points;
    }
  }
  if (o.ok) o.note << points << " (n,p) points satisfy lb <= H <= ub";
}

void dominator_exactness(Outcome& o) {
  const SwitchingDag d = build_fft(8);
  const std::uint64_t expect[] = {0, 1, 4, 0, 12};
  double t4 = 0;
  for (std::uint32_t k : {1u, 2u, 4u}) {
    const auto t0 = std::chrono::steady_clock::now();
    const DominatorResult r = D_k_bruteforce(d, k);
    if (k == 4) t4 = seconds_since(t0);
    o.require(r.Dk == expect[k], "D(" + std::to_string(k) + ")=" + std::to_string(r.Dk));
    o.require(std::fabs(static_cast<double>(r.Dk) - k * std::log2(2.0 * k)) < 1e-9, "k log2 2k");
    if (k >= 2) o.require(static_cast<double>(r.Dk) <= 2.0 * k * std::log2(k) + 1e-9, "Hong-Kung bound");
  }
  o.require(t4 < 120, "k=4 took " + std::to_string(t4) + " s");
  if (o.ok) o.note << "D(1)=1, D(2)=4, D(4)=12; k=4 in " << t4 << " s";
}

void xlogx_inequality(Outcome& o) {
  std::mt19937_64 rng(424242);
  auto xl = [](double x) { return x > 0 ? x * std::log2(x) : 0.0; };
  int bad = 0;
  for (int t = 0; t < 10000; ++t) {
    const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(0, 1000000)(rng);
    const std::uint64_t s = std::uniform_int_distribution<std::uint64_t>(0, m)(rng);
    const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(0, s / 2)(rng);
    const std::uint64_t y = s - x;
    const double lhs = xl(static_cast<double>(x)) + xl(static_cast<double>(y)) + 2.0 * static_cast<double>(x);
    if (lhs > xl(static_cast<double>(m)) + 1e-9) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " violating triples");
  if (o.ok) o.note << "10000 seeded triples, no violation";
}

void io_specializations(Outcome& o) {
  int points = 0;
  for (std::uint64_t n : {16u, 64u, 256u, 1024u, 4096u}) {
    const double g = static_cast<double>(n) * std::log2(n / 2.0);
    for (double m : {2.0, 8.0}) {
      const double closed = n * std::log2(n / 2.0) / (2 * std::log2(2 * m));
      o.require(rel(io_lb(g, 2, 1, m, 2 * n).value, closed) < 1e-12, "sequential form");
      ++points;
    }
    for (std::uint32_t p : {2u, 8u}) {
      const double closed = n * std::log2(n / 2.0) / (2.0 * p * std::log2(2.0 * n / p));
      o.require(rel(io_lb(g, 2, p, std::nullopt, 2 * n).value, closed) < 1e-12, "LPRAM form");
      ++points;
    }
  }
  const SwitchingDag d = build_fft(8);
  const IoSchedule val = blocked_fft_io_schedule(8, 1, 4);
  const IoSchedule env = evaluation_to_envelope_io(d, val);
  const IoCheck c = validate_io_envelope(d, env);
  o.require(c.ok(), c.message);
  if (!o.ok) return;
  const double lb = io_lb(16.0, 2, 1, 4.0, 16).value;
  const IoTrace t = io_redistribution_trace(d, env);
  o.require(static_cast<double>(t.H) >= lb, "H below io_lb");
  for (const SandwichCheck& s : {check_io_reads(t), check_io_writes(t), check_io_placements_upper(t, 16)}) {
    o.require(s.ok, s.detail);
  }
  o.require(t.eta.back() >= 65536, "eta_end below gamma");
  const double etaBound = log2_big(t.eta.back()) / std::log2(std::min<double>(*env.memory, 16.0));
  o.require(static_cast<double>(t.H) >= etaBound, "H below log2 eta / (p log2 min(m, N/p))");
  if (o.ok) o.note << points << " closed-form points; fft8 envelope I/O H = " << t.H << " >= " << lb;
}

void spot_checks(Outcome& o) {
  const double fft = fft_lb(1024, 16, 64).value;
  o.require(rel(fft, 9216.0 / 896.0) < 1e-9, "fft_lb = " + std::to_string(fft));
  o.require(valiant_ub(1024, 16).value == 128.0, "valiant_ub");
  o.require(rel(pbsn_lb(1024, 16, 64).value, 5 * fft) < 1e-9, "pbsn_lb");
  if (o.ok) o.note << "fft_lb = " << fft << ", valiant_ub = 128, pbsn_lb = 5 x fft_lb";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"switching potential exactness", potential_exactness},
      {"figure reproduction", figure_reproduction},
      {"unique-path property", unique_paths},
      {"cyclic shifts", cyclic_shifts},
      {"sorting-network potential", sorting_potential},
      {"redistribution sandwich", redistribution_sandwich},
      {"degree-1 decomposition", decomposition},
      {"bound/measurement consistency", bound_consistency},
      {"dominator exactness", dominator_exactness},
      {"x log x inequality", xlogx_inequality},
      {"I/O specializations", io_specializations},
      {"numeric spot checks", spot_checks},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.str().c_str());
  }
  return failed == 0 ? 0 : 1;
}
