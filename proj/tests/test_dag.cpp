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
#include <random>
#include <set>

#include "fixtures.hpp"
#include "switchpot/dag.hpp"
#include "switchpot/networks.hpp"

using namespace switchpot;

TEST_CASE("fft shape") {
  for (std::uint32_t n : {2u, 4u, 8u, 16u}) {
    const SwitchingDag d = build_fft(n);
    const std::uint32_t k = ilog2(n);
    CHECK(d.nodeCount() == n * (k + 1));
    CHECK(d.arcCount() == 2 * n * k);
    CHECK(d.inputCount() == n);
    CHECK(d.switchingSize() == 2 * n);
    CHECK(validate(d).ok());
    // Level l joins rows w and w xor 2^l.
    for (std::uint32_t l = 0; l < k; ++l) {
      for (std::uint32_t w = 0; w < n; ++w) {
        CHECK(d.arcMultiplicity(level_node(n, w, l), level_node(n, w, l + 1)) == 1);
        CHECK(d.arcMultiplicity(level_node(n, w, l), level_node(n, w ^ (1u << l), l + 1)) == 1);
      }
    }
  }
  CHECK_THROWS_AS(build_fft(6), std::invalid_argument);
}

TEST_CASE("fft unique paths against plain recursion") {
  for (std::uint32_t n : {2u, 4u, 8u, 16u}) {
    const SwitchingDag d = build_fft(n);
    for (NodeId u : d.inputOrder()) {
      for (NodeId v : d.outputOrder()) CHECK(fixtures::count_paths(d, u, v) == 1);
    }
    CHECK(unique_path_check(d).unique);
  }
}

TEST_CASE("unique path check finds a doubled route") {
  const SwitchingDag d = build_bmn(4);
  // BMN has unique paths too; a comparator DAG does not (parallel output arcs).
  CHECK(unique_path_check(d).unique);
  const SwitchingDag b = comparator_network_to_dag(build_bitonic(4));
  const UniquePathResult r = unique_path_check(b);
  CHECK_FALSE(r.unique);
  CHECK(fixtures::count_paths(b, r.input, r.output) >= 2);
}

TEST_CASE("validation reports cycles and degree mismatches") {
  {
    DagBuilder b;
    const NodeId in = b.addNode(NodeKind::kInput), x = b.addNode(NodeKind::kInternal),
                 y = b.addNode(NodeKind::kInternal), out = b.addNode(NodeKind::kOutput);
    b.addArc(in, x);
    b.addArc(y, x);
    b.addArc(x, y);
    b.addArc(x, out);
    const SwitchingDag d = std::move(b).build({in}, {out});
    const ValidationReport r = validate(d);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(d.isAcyclic());
    CHECK(std::any_of(r.violations.begin(), r.violations.end(),
                      [](const Violation& v) { return v.kind == ViolationKind::kAcyclicity; }));
    CHECK(r.first().find("acyclicity") != std::string::npos);
  }
  {
    DagBuilder b;
    const NodeId in = b.addNode(NodeKind::kInput), x = b.addNode(NodeKind::kInternal);
    const NodeId o1 = b.addNode(NodeKind::kOutput), o2 = b.addNode(NodeKind::kOutput);
    b.addArc(in, x);
    b.addArc(x, o1);
    b.addArc(x, o2);
    const SwitchingDag d = std::move(b).build({in}, {o1, o2});
    const ValidationReport r = validate(d);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().kind == ViolationKind::kDegreeMismatch);
    CHECK(r.violations.front().node == x);
    CHECK(r.first().find("degree mismatch") != std::string::npos);
  }
}

TEST_CASE("bmn and fft are isomorphic") {
  for (std::uint32_t n : {2u, 4u, 8u, 16u}) {
    const SwitchingDag bmn = build_bmn(n);
    CHECK(validate(bmn).ok());
    const EmbeddingResult e = find_embedding(bmn, build_fft(n), true);
    REQUIRE(e.map.has_value());
    // The map is a bijection preserving every arc.
    const SwitchingDag fft = build_fft(n);
    std::set<NodeId> image(e.map->begin(), e.map->end());
    CHECK(image.size() == fft.nodeCount());
    for (const Arc& a : bmn.arcs()) CHECK(fft.arcMultiplicity((*e.map)[a.src], (*e.map)[a.dst]) == 1);
  }
}

TEST_CASE("bmn first level pairs mirrored rows") {
  // n=8, level 0: block size 8, row w pairs with 7-w.
  const SwitchingDag d = build_bmn(8);
  for (std::uint32_t w = 0; w < 8; ++w) CHECK(d.arcMultiplicity(level_node(8, w, 0), level_node(8, 7 - w, 1)) == 1);
  // level 1: blocks of 4.
  for (std::uint32_t w = 0; w < 8; ++w) {
    const std::uint32_t base = w / 4 * 4;
    CHECK(d.arcMultiplicity(level_node(8, w, 1), level_node(8, base + 3 - (w - base), 2)) == 1);
  }
}

TEST_CASE("pbsn chains log n merger blocks") {
  for (std::uint32_t n : {4u, 8u}) {
    const SwitchingDag d = build_pbsn(n);
    const std::uint32_t k = ilog2(n);
    CHECK(validate(d).ok());
    CHECK(d.nodeCount() == n * (k * k + 1));
    REQUIRE(d.blocks().size() == k);
    const SwitchingDag bmn = build_bmn(n);
    for (std::size_t b = 0; b < k; ++b) {
      const SwitchingDag blk = extract_block(d, b);
      CHECK(validate(blk).ok());
      CHECK(find_embedding(blk, bmn, true).map.has_value());
    }
  }
}

TEST_CASE("bitonic sorts by the zero-one principle") {
  for (std::uint32_t n : {2u, 4u, 8u, 16u}) {
    const ComparatorNetwork net = build_bitonic(n);
    CHECK_NOTHROW(check_network(net));
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::vector<int> keys(n);
      for (std::uint32_t i = 0; i < n; ++i) keys[i] = (bits >> i) & 1;
      const auto sorted = apply_network(net, keys);
      CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    }
    const std::uint32_t k = ilog2(n);
    CHECK(net.comparatorCount() == static_cast<std::size_t>(n / 2) * k * (k + 1) / 2);
  }
}

TEST_CASE("benes has 2 log n - 1 stages of n/2 switches") {
  for (std::uint32_t n : {2u, 4u, 8u}) {
    const ComparatorNetwork net = build_benes(n);
    CHECK(net.stages.size() == 2 * ilog2(n) - 1);
    for (const auto& st : net.stages) CHECK(st.size() == n / 2);
  }
}

TEST_CASE("comparator network dag") {
  const ComparatorNetwork net = build_bitonic(4);
  const SwitchingDag d = comparator_network_to_dag(net);
  CHECK(validate(d).ok());
  CHECK(d.switchingSize() == 8);
  CHECK(d.internalNodes().size() == 2 * net.comparatorCount());
  for (NodeId v : d.internalNodes()) {
    CHECK(d.inDegree(v) == 2);
    CHECK(d.outDegree(v) == 2);
  }
}

TEST_CASE("embedding rejects a non-isomorphic pair") {
  const SwitchingDag a = build_fft(4);
  const SwitchingDag b = comparator_network_to_dag(build_bitonic(4));
  CHECK_FALSE(find_embedding(a, b, true).map.has_value());
}

TEST_CASE("topological order respects every arc") {
  const SwitchingDag d = build_pbsn(8);
  REQUIRE(d.topologicalOrder().has_value());
  std::vector<std::size_t> pos(d.nodeCount());
  const auto& order = *d.topologicalOrder();
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (const Arc& a : d.arcs()) CHECK(pos[a.src] < pos[a.dst]);
}
