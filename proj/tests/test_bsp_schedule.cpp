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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "switchpot/bsp_schedule.hpp"
#include "switchpot/envelope_game.hpp"
#include "switchpot/networks.hpp"
#include "switchpot/potential.hpp"

using namespace switchpot;

namespace {

Superstep step(std::uint32_t p, std::vector<std::vector<NodeId>> work, std::vector<Message> msgs) {
  work.resize(p);
  return {std::move(work), std::move(msgs)};
}

// FFT-4 on two processors: rows 0,1 on P0 and rows 2,3 on P1; the level-1
// exchange crosses processors.
BspSchedule fft4_hand() {
  BspSchedule s;
  s.p = 2;
  s.inputPlacement = {{0, 0}, {1, 0}, {2, 1}, {3, 1}};
  s.supersteps.push_back(step(2, {{4, 5}, {6, 7}}, {{0, 1, 4}, {0, 1, 5}, {1, 0, 6}, {1, 0, 7}}));
  s.supersteps.push_back(step(2, {{8, 9}, {10, 11}}, {}));
  return s;
}

std::uint64_t reference_degree(const Superstep& st, std::uint32_t p) {
  std::vector<std::uint64_t> sent(p, 0), recv(p, 0);
  for (const Message& m : st.messages) {
    ++sent[m.from];
    ++recv[m.to];
  }
  std::uint64_t h = 0;
  for (std::uint32_t i = 0; i < p; ++i) h = std::max({h, sent[i], recv[i]});
  return h;
}

std::multiset<std::tuple<ProcId, ProcId, std::uint32_t>> all_messages(const BspSchedule& s) {
  std::multiset<std::tuple<ProcId, ProcId, std::uint32_t>> out;
  for (const Superstep& st : s.supersteps) {
    for (const Message& m : st.messages) out.emplace(m.from, m.to, m.payload);
  }
  return out;
}

}  // namespace

TEST_CASE("cost accounting") {
  BspSchedule s;
  s.p = 3;
  CHECK(communication_complexity(s).H == 0);
  CHECK(communication_complexity(s).S == 0);
  s.supersteps.push_back(step(3, {{1, 2, 3}}, {{0, 1, 0}, {0, 1, 1}}));
  const CostReport r = communication_complexity(s);
  CHECK(r.H == 2);
  CHECK(r.W == 3);
  CHECK(r.S == 1);
  // Degree is max of sent and received, not their sum.
  s.supersteps.push_back(step(3, {}, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}));
  CHECK(communication_complexity(s).degree == std::vector<std::uint64_t>{2, 1});
  CHECK(communication_complexity(s).H == 3);
  CostReport t = r;
  CHECK_FALSE(t.time().has_value());
  t.g = 2.0;
  t.l = 10.0;
  CHECK(*t.time() == 3 + 2 * 2.0 + 10.0);
}

TEST_CASE("hand schedule validates") {
  const SwitchingDag d = build_fft(4);
  const BspSchedule s = fft4_hand();
  CHECK(validate_evaluation(d, s).ok());
  CHECK(communication_complexity(s).H == 2);
}

TEST_CASE("recomputation and visibility are reported") {
  const SwitchingDag d = build_fft(4);
  {
    BspSchedule s = fft4_hand();
    s.supersteps[1].work[0].push_back(4);
    CHECK(validate_evaluation(d, s).issue == ScheduleIssue::kRecomputation);
  }
  {
    BspSchedule s = fft4_hand();
    s.supersteps[0].work[0].push_back(0);
    CHECK(validate_evaluation(d, s).issue == ScheduleIssue::kRecomputation);
  }
  {
    // Outputs evaluated in the same superstep as the exchange.
    BspSchedule s = fft4_hand();
    s.supersteps[0].work = {{4, 5, 8, 9}, {6, 7, 10, 11}};
    s.supersteps.pop_back();
    const ScheduleCheck c = validate_evaluation(d, s);
    CHECK(c.issue == ScheduleIssue::kVisibility);
    CHECK(c.message.find("visibility") != std::string::npos);
  }
  {
    BspSchedule s = fft4_hand();
    s.supersteps[0].messages[0].payload = 6;  // P0 never holds node 6
    CHECK(validate_evaluation(d, s).issue == ScheduleIssue::kPayloadUnavailable);
  }
  {
    BspSchedule s = fft4_hand();
    s.supersteps[1].work[1].pop_back();
    CHECK(validate_evaluation(d, s).issue == ScheduleIssue::kMissing);
  }
}

TEST_CASE("valiant schedule") {
  for (auto [n, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {4, 2}, {8, 2}, {8, 4}, {16, 4}, {16, 2}, {32, 4}, {64, 8}, {16, 1}}) {
    const SwitchingDag d = build_fft(n);
    const BspSchedule s = valiant_fft_schedule(n, p);
    CAPTURE(n);
    CAPTURE(p);
    CHECK(validate_evaluation(d, s).ok());
    // Block placement: n/p consecutive inputs per processor.
    for (std::uint32_t w = 0; w < n; ++w) CHECK(s.inputPlacement.at(level_node(n, w, 0)) == w / (n / p));
    const CostReport r = communication_complexity(s);
    for (std::size_t j = 0; j < s.supersteps.size(); ++j) {
      CHECK(r.degree[j] == reference_degree(s.supersteps[j], p));
      CHECK(r.degree[j] <= n / p);
    }
    if (p == 1) CHECK(r.H == 0);
  }
  const CostReport a = communication_complexity(valiant_fft_schedule(16, 4));
  CHECK(a.H <= 4);
  const CostReport b = communication_complexity(valiant_fft_schedule(8, 2));
  CHECK(b.H <= 4);
  CHECK_THROWS(valiant_fft_schedule(12, 2));
  CHECK_THROWS(valiant_fft_schedule(8, 3));
}

TEST_CASE("decomposition of the three-message example") {
  BspSchedule s;
  s.p = 3;
  s.supersteps.push_back(step(3, {}, {{0, 1, 0}, {0, 2, 1}, {1, 2, 2}}));
  const BspSchedule t = decompose_degree_one(s);
  CHECK(t.supersteps.size() == 2);
  for (const Superstep& st : t.supersteps) CHECK(reference_degree(st, 3) == 1);
  CHECK(all_messages(t) == all_messages(s));
}

TEST_CASE("decomposition preserves H on random multigraphs") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t p = 2 + rng() % 6;
    BspSchedule s;
    s.p = p;
    const int steps = 1 + rng() % 3;
    for (int j = 0; j < steps; ++j) {
      std::vector<Message> msgs;
      std::vector<std::uint32_t> sent(p, 0), recv(p, 0);
      for (int tries = 0; tries < 40; ++tries) {
        const ProcId a = rng() % p, b = rng() % p;
        if (a == b || sent[a] == 6 || recv[b] == 6) continue;
        ++sent[a];
        ++recv[b];
        msgs.push_back({a, b, static_cast<std::uint32_t>(rng() % 100)});
      }
      s.supersteps.push_back(step(p, {}, msgs));
    }
    const BspSchedule t = decompose_degree_one(s);
    CHECK(communication_complexity(t).H == communication_complexity(s).H);
    for (const Superstep& st : t.supersteps) CHECK(reference_degree(st, p) <= 1);
    CHECK(all_messages(t) == all_messages(s));
  }
}

TEST_CASE("decomposition keeps valiant schedules valid") {
  for (auto [n, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{16, 4}, {8, 2}, {32, 8}}) {
    const SwitchingDag d = build_fft(n);
    const BspSchedule s = valiant_fft_schedule(n, p);
    const BspSchedule t = decompose_degree_one(s);
    CHECK(validate_evaluation(d, t).ok());
    CHECK(communication_complexity(t).H == communication_complexity(s).H);
    for (const Superstep& st : t.supersteps) CHECK(reference_degree(st, p) <= 1);
  }
  // Already degree 1: unchanged H and S.
  BspSchedule one;
  one.p = 2;
  one.inputPlacement = {{0, 0}, {1, 1}};
  one.supersteps.push_back(step(2, {}, {{0, 1, 0}, {1, 0, 1}}));
  one.supersteps.push_back(step(2, {{2}, {3}}, {}));
  const BspSchedule same = decompose_degree_one(one);
  CHECK(communication_complexity(same).H == 1);
  CHECK(communication_complexity(same).S == 2);
  CHECK(validate_evaluation(build_fft(2), same).ok());
}

TEST_CASE("envelope transformation") {
  for (auto [n, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{8, 2}, {16, 4}, {8, 1}}) {
    const SwitchingDag d = build_fft(n);
    const BspSchedule a = valiant_fft_schedule(n, p);
    const BspSchedule b = evaluation_to_envelope_schedule(d, a);
    CHECK(b.kind == PayloadKind::kEnvelope);
    CHECK(validate_envelope_schedule(d, b).ok());
    CHECK(communication_complexity(b).H <= 2 * communication_complexity(a).H);
    if (p == 1) CHECK(communication_complexity(b).H == 0);
  }
  BspSchedule bad = fft4_hand();
  bad.supersteps[1].work[0].push_back(4);
  CHECK_THROWS_AS(evaluation_to_envelope_schedule(build_fft(4), bad), std::invalid_argument);
}

TEST_CASE("induced runs obey the game on every fft4 configuration") {
  const SwitchingDag d = build_fft(4);
  const BspSchedule env = evaluation_to_envelope_schedule(d, fft4_hand());
  for (int i = 0; i < 16; ++i) {
    const SwitchConfiguration c = configuration_from_index(d, i);
    const EnvelopeRun run = induced_run(d, env, c);
    CHECK(validate_run(d, run).ok());
    CHECK(run_permutation(d, run) == realized_permutation(d, c));
  }
}

TEST_CASE("redistribution trace") {
  const SwitchingDag d = build_fft(4);
  const BspSchedule env = decompose_degree_one(evaluation_to_envelope_schedule(d, fft4_hand()));
  const RedistributionTrace t = redistribution_trace(d, env);
  CHECK(t.eta.front() == 1);
  CHECK(t.eta.size() == env.supersteps.size() + 1);

  // Reference final count: the envelope entering on E_in arc j ends on the
  // processor that lists the head of E_out arc rho(j).
  std::map<NodeId, ProcId> outputProc;
  for (const Superstep& st : env.supersteps) {
    for (ProcId i = 0; i < st.work.size(); ++i) {
      for (NodeId v : st.work[i]) {
        if (d.kind(v) == NodeKind::kOutput) outputProc[v] = i;
      }
    }
  }
  std::set<std::vector<ProcId>> finals;
  for (int i = 0; i < 16; ++i) {
    const RealizedPermutation r = realized_permutation(d, configuration_from_index(d, i));
    std::vector<ProcId> where;
    for (std::uint32_t rj : r.rho) where.push_back(outputProc.at(d.arc(d.eoutArc(rj)).dst));
    finals.insert(where);
  }
  CHECK(t.eta.back() == finals.size());
  CHECK(t.uFinal == 4);

  CHECK(check_final_placements_lower(16, t, 8).ok);
  CHECK(check_placements_upper(t, 8).ok);
  CHECK(check_superstep_growth(t).ok);
  CHECK(t.eta.back() <= BigInt(1) << (4 * t.H));  // (N/p)^(pH) = 4^(2H)
}

TEST_CASE("no communication keeps eta at one") {
  const SwitchingDag d = build_fft(8);
  const BspSchedule env = evaluation_to_envelope_schedule(d, valiant_fft_schedule(8, 1));
  const RedistributionTrace t = redistribution_trace(d, env);
  for (const BigInt& e : t.eta) CHECK(e == 1);
}

TEST_CASE("trace rejects schedules of degree above one") {
  const SwitchingDag d = build_fft(4);
  const BspSchedule env = evaluation_to_envelope_schedule(d, fft4_hand());
  REQUIRE(communication_complexity(env).degree.front() > 1);
  CHECK_THROWS_AS(redistribution_trace(d, env), std::invalid_argument);
}

TEST_CASE("sandwich checks catch wrong claims") {
  RedistributionTrace t;
  t.eta = {1, 2, 17};
  t.holdings = {{4, 4}, {4, 4}, {4, 4}};
  t.uFinal = 4;
  t.H = 1;
  t.p = 2;
  // 17 > 4^2: the upper bound fails for H = 1.
  CHECK_FALSE(check_placements_upper(t, 8).ok);
  // One step may multiply eta by at most 4*4.
  t.eta = {1, 20, 20};
  CHECK_FALSE(check_superstep_growth(t).ok);
}
