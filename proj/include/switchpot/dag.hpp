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

#ifndef SWITCHPOT_DAG_HPP_
#define SWITCHPOT_DAG_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "switchpot/types.hpp"

namespace switchpot {

enum class NodeKind { kInput, kInternal, kOutput };

const char* to_string(NodeKind kind);

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::kInternal;
  bool operator==(const Node&) const = default;
};

struct Arc {
  ArcId id = 0;
  NodeId src = 0;
  Port srcPort = 0;
  NodeId dst = 0;
  Port dstPort = 0;
  bool operator==(const Arc&) const = default;
};

// A contiguous slice of a larger DAG, e.g. one merging block of a sorting
// network. `nodes` lists every node of the slice; `inputs`/`outputs` are the
// slice boundary levels in row order.
struct Block {
  std::vector<NodeId> nodes;
  std::vector<NodeId> inputs;
  std::vector<NodeId> outputs;
  bool operator==(const Block&) const = default;
};

// Arc-level DAG with ordered ports. Immutable after construction.
//
// The constructor only rejects data it cannot index (ids not equal to their
// position, endpoints out of range). Semantic invariants are checked by
// validate(), so malformed instances can still be inspected.
class SwitchingDag {
 public:
  SwitchingDag() = default;
  SwitchingDag(std::vector<Node> nodes, std::vector<Arc> arcs,
               std::vector<NodeId> inputOrder, std::vector<NodeId> outputOrder,
               std::vector<Block> blocks = {});

  std::size_t nodeCount() const { return nodes_.size(); }
  std::size_t arcCount() const { return arcs_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Node& node(NodeId v) const { return nodes_.at(v); }
  const Arc& arc(ArcId a) const { return arcs_.at(a); }
  NodeKind kind(NodeId v) const { return nodes_[v].kind; }

  // Arcs sorted by port (then by id when ports collide in malformed input).
  std::span<const ArcId> outArcs(NodeId v) const;
  std::span<const ArcId> inArcs(NodeId v) const;
  std::uint32_t outDegree(NodeId v) const { return outStart_[v + 1] - outStart_[v]; }
  std::uint32_t inDegree(NodeId v) const { return inStart_[v + 1] - inStart_[v]; }
  std::uint32_t maxOutDegree() const;

  const std::vector<NodeId>& inputOrder() const { return inputOrder_; }
  const std::vector<NodeId>& outputOrder() const { return outputOrder_; }
  const std::vector<NodeId>& internalNodes() const { return internal_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // n = |V_in|.
  std::uint32_t inputCount() const { return static_cast<std::uint32_t>(inputOrder_.size()); }
  // N = number of arcs leaving input nodes.
  std::uint32_t switchingSize() const { return static_cast<std::uint32_t>(einArcs_.size()); }

  // 1-based numbers; 0 when the arc does not leave an input / enter an output.
  std::uint32_t einNumber(ArcId a) const { return einNumber_[a]; }
  std::uint32_t eoutNumber(ArcId a) const { return eoutNumber_[a]; }
  ArcId einArc(std::uint32_t j) const { return einArcs_.at(j - 1); }
  ArcId eoutArc(std::uint32_t j) const { return eoutArcs_.at(j - 1); }
  const std::vector<ArcId>& einArcs() const { return einArcs_; }
  const std::vector<ArcId>& eoutArcs() const { return eoutArcs_; }

  // Topological order (Kahn, smallest id first); nullopt if cyclic.
  const std::optional<std::vector<NodeId>>& topologicalOrder() const { return topo_; }
  bool isAcyclic() const { return topo_.has_value(); }

  // Number of arcs u->v.
  std::uint32_t arcMultiplicity(NodeId u, NodeId v) const;

  bool operator==(const SwitchingDag& o) const {
    return nodes_ == o.nodes_ && arcs_ == o.arcs_ && inputOrder_ == o.inputOrder_ &&
           outputOrder_ == o.outputOrder_ && blocks_ == o.blocks_;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
  std::vector<NodeId> inputOrder_;
  std::vector<NodeId> outputOrder_;
  std::vector<Block> blocks_;

  std::vector<std::uint32_t> outStart_{0}, inStart_{0};
  std::vector<ArcId> outList_, inList_;
  std::vector<NodeId> internal_;
  std::vector<std::uint32_t> einNumber_, eoutNumber_;
  std::vector<ArcId> einArcs_, eoutArcs_;
  std::optional<std::vector<NodeId>> topo_;
};

// Incremental construction. Ports are assigned in arc insertion order at
// each endpoint.
class DagBuilder {
 public:
  NodeId addNode(NodeKind kind);
  ArcId addArc(NodeId src, NodeId dst);
  SwitchingDag build(std::vector<NodeId> inputOrder, std::vector<NodeId> outputOrder,
                     std::vector<Block> blocks = {}) &&;

 private:
  std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
  std::vector<Port> nextOut_, nextIn_;
};

enum class ViolationKind {
  kAcyclicity,
  kDegreeMismatch,
  kKindMismatch,
  kPortRange,
  kOrderMismatch,
  kSwitchingSize,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
  NodeId node = kNoNode;
  ArcId arc = kNoArc;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  // Empty string when ok.
  std::string first() const;
};

ValidationReport validate(const SwitchingDag& dag);

struct UniquePathResult {
  bool unique = true;
  // First (input, output) pair whose path count is not 1, in input order.
  NodeId input = kNoNode;
  NodeId output = kNoNode;
  std::uint32_t count = 0;  // 0, or 2 meaning "at least 2"
};

UniquePathResult unique_path_check(const SwitchingDag& dag);

// Maps pattern nodes injectively to host nodes so that every pattern arc
// u->v has a host counterpart f(u)->f(v), respecting multiplicities. With
// `isomorphism`, the map must also be a bijection that preserves node kinds
// and arc multiplicities exactly. Returns pattern->host, or nullopt if none
// exists or the step budget runs out (see `exhausted`).
struct EmbeddingResult {
  std::optional<std::vector<NodeId>> map;
  bool exhausted = false;
};

EmbeddingResult find_embedding(const SwitchingDag& pattern, const SwitchingDag& host,
                               bool isomorphism, std::uint64_t stepBudget = 50'000'000);

}  // namespace switchpot

#endif  // SWITCHPOT_DAG_HPP_
