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

#include "switchpot/dag.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace switchpot {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kInput:
      return "input";
    case NodeKind::kInternal:
      return "internal";
    case NodeKind::kOutput:
      return "output";
  }
  return "?";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kAcyclicity:
      return "acyclicity";
    case ViolationKind::kDegreeMismatch:
      return "degree mismatch";
    case ViolationKind::kKindMismatch:
      return "kind mismatch";
    case ViolationKind::kPortRange:
      return "port range";
    case ViolationKind::kOrderMismatch:
      return "order mismatch";
    case ViolationKind::kSwitchingSize:
      return "switching size";
  }
  return "?";
}

namespace {

// CSR adjacency sorted by (port, arc id).
void build_adjacency(std::size_t nodeCount, const std::vector<Arc>& arcs, bool outgoing,
                     std::vector<std::uint32_t>& start, std::vector<ArcId>& list) {
  start.assign(nodeCount + 1, 0);
  for (const Arc& a : arcs) ++start[(outgoing ? a.src : a.dst) + 1];
  for (std::size_t v = 0; v < nodeCount; ++v) start[v + 1] += start[v];
  list.assign(arcs.size(), 0);
  std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
  for (const Arc& a : arcs) list[fill[outgoing ? a.src : a.dst]++] = a.id;
  for (std::size_t v = 0; v < nodeCount; ++v) {
    std::sort(list.begin() + start[v], list.begin() + start[v + 1], [&](ArcId x, ArcId y) {
      const Port px = outgoing ? arcs[x].srcPort : arcs[x].dstPort;
      const Port py = outgoing ? arcs[y].srcPort : arcs[y].dstPort;
      return px != py ? px < py : x < y;
    });
  }
}

}  // namespace

SwitchingDag::SwitchingDag(std::vector<Node> nodes, std::vector<Arc> arcs,
                           std::vector<NodeId> inputOrder, std::vector<NodeId> outputOrder,
                           std::vector<Block> blocks)
    : nodes_(std::move(nodes)),
      arcs_(std::move(arcs)),
      inputOrder_(std::move(inputOrder)),
      outputOrder_(std::move(outputOrder)),
      blocks_(std::move(blocks)) {
  const std::size_t nv = nodes_.size();
  for (std::size_t i = 0; i < nv; ++i) {
    if (nodes_[i].id != i) throw std::invalid_argument("node ids must equal their position");
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.id != i) throw std::invalid_argument("arc ids must equal their position");
    if (a.src >= nv || a.dst >= nv) {
      throw std::invalid_argument("arc " + std::to_string(i) + " has an endpoint out of range");
    }
  }
  for (NodeId v : inputOrder_) {
    if (v >= nv) throw std::invalid_argument("inputOrder references an unknown node");
  }
  for (NodeId v : outputOrder_) {
    if (v >= nv) throw std::invalid_argument("outputOrder references an unknown node");
  }
  for (const Block& b : blocks_) {
    for (const auto* list : {&b.nodes, &b.inputs, &b.outputs}) {
      for (NodeId v : *list) {
        if (v >= nv) throw std::invalid_argument("block references an unknown node");
      }
    }
  }

  build_adjacency(nv, arcs_, true, outStart_, outList_);
  build_adjacency(nv, arcs_, false, inStart_, inList_);

  for (const Node& v : nodes_) {
    if (v.kind == NodeKind::kInternal) internal_.push_back(v.id);
  }

  einNumber_.assign(arcs_.size(), 0);
  eoutNumber_.assign(arcs_.size(), 0);
  for (NodeId u : inputOrder_) {
    for (ArcId a : outArcs(u)) {
      if (einNumber_[a] != 0) continue;  // duplicated entry in inputOrder
      einArcs_.push_back(a);
      einNumber_[a] = static_cast<std::uint32_t>(einArcs_.size());
    }
  }
  for (NodeId w : outputOrder_) {
    for (ArcId a : inArcs(w)) {
      if (eoutNumber_[a] != 0) continue;
      eoutArcs_.push_back(a);
      eoutNumber_[a] = static_cast<std::uint32_t>(eoutArcs_.size());
    }
  }

  std::vector<std::uint32_t> indeg(nv);
  for (NodeId v = 0; v < nv; ++v) indeg[v] = inDegree(v);
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v = 0; v < nv; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<NodeId> order;
  order.reserve(nv);
  while (!ready.empty()) {
    const NodeId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (ArcId a : outArcs(v)) {
      if (--indeg[arcs_[a].dst] == 0) ready.push(arcs_[a].dst);
    }
  }
  if (order.size() == nv) topo_ = std::move(order);
}

std::span<const ArcId> SwitchingDag::outArcs(NodeId v) const {
  return {outList_.data() + outStart_[v], outStart_[v + 1] - outStart_[v]};
}

std::span<const ArcId> SwitchingDag::inArcs(NodeId v) const {
  return {inList_.data() + inStart_[v], inStart_[v + 1] - inStart_[v]};
}

std::uint32_t SwitchingDag::maxOutDegree() const {
  std::uint32_t d = 0;
  for (NodeId v = 0; v < nodes_.size(); ++v) d = std::max(d, outDegree(v));
  return d;
}

std::uint32_t SwitchingDag::arcMultiplicity(NodeId u, NodeId v) const {
  std::uint32_t c = 0;
  for (ArcId a : outArcs(u)) c += arcs_[a].dst == v;
  return c;
}

NodeId DagBuilder::addNode(NodeKind kind) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({id, kind});
  nextOut_.push_back(1);
  nextIn_.push_back(1);
  return id;
}

ArcId DagBuilder::addArc(NodeId src, NodeId dst) {
  if (src >= nodes_.size() || dst >= nodes_.size()) {
    throw std::invalid_argument("DagBuilder::addArc: unknown node");
  }
  const auto id = static_cast<ArcId>(arcs_.size());
  arcs_.push_back({id, src, nextOut_[src]++, dst, nextIn_[dst]++});
  return id;
}

SwitchingDag DagBuilder::build(std::vector<NodeId> inputOrder, std::vector<NodeId> outputOrder,
                               std::vector<Block> blocks) && {
  return SwitchingDag(std::move(nodes_), std::move(arcs_), std::move(inputOrder),
                      std::move(outputOrder), std::move(blocks));
}

std::string ValidationReport::first() const {
  if (violations.empty()) return {};
  const Violation& v = violations.front();
  return std::string(to_string(v.kind)) + ": " + v.message;
}

ValidationReport validate(const SwitchingDag& dag) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg, NodeId node = kNoNode, ArcId arc = kNoArc) {
    report.violations.push_back({kind, std::move(msg), node, arc});
  };
  const std::size_t nv = dag.nodeCount();

  if (!dag.isAcyclic()) {
    // Name one node that lies on a cycle: anything Kahn could not remove.
    std::vector<std::uint32_t> indeg(nv);
    std::vector<NodeId> stack;
    for (NodeId v = 0; v < nv; ++v) {
      indeg[v] = dag.inDegree(v);
      if (indeg[v] == 0) stack.push_back(v);
    }
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (ArcId a : dag.outArcs(v)) {
        if (--indeg[dag.arc(a).dst] == 0) stack.push_back(dag.arc(a).dst);
      }
    }
    NodeId culprit = kNoNode;
    for (NodeId v = 0; v < nv && culprit == kNoNode; ++v) {
      if (indeg[v] != 0) culprit = v;
    }
    add(ViolationKind::kAcyclicity, "directed cycle through node " + std::to_string(culprit),
        culprit);
  }

  for (NodeId v = 0; v < nv; ++v) {
    const std::uint32_t in = dag.inDegree(v);
    const std::uint32_t out = dag.outDegree(v);
    const std::string tag = "node " + std::to_string(v);
    switch (dag.kind(v)) {
      case NodeKind::kInput:
        if (in != 0) add(ViolationKind::kKindMismatch, tag + " is an input with in-degree " + std::to_string(in), v);
        if (out == 0) add(ViolationKind::kKindMismatch, tag + " is an input with no outgoing arcs", v);
        break;
      case NodeKind::kOutput:
        if (out != 0) add(ViolationKind::kKindMismatch, tag + " is an output with out-degree " + std::to_string(out), v);
        if (in == 0) add(ViolationKind::kKindMismatch, tag + " is an output with no incoming arcs", v);
        break;
      case NodeKind::kInternal:
        if (in == 0 || out == 0) {
          add(ViolationKind::kKindMismatch,
              tag + " is internal but has in-degree " + std::to_string(in) + " and out-degree " +
                  std::to_string(out),
              v);
        } else if (in != out) {
          add(ViolationKind::kDegreeMismatch,
              tag + " has in-degree " + std::to_string(in) + " but out-degree " + std::to_string(out),
              v);
        }
        break;
    }
    for (int dir = 0; dir < 2; ++dir) {
      const auto arcs = dir == 0 ? dag.outArcs(v) : dag.inArcs(v);
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = dag.arc(arcs[i]);
        const Port port = dir == 0 ? a.srcPort : a.dstPort;
        if (port != i + 1) {
          add(ViolationKind::kPortRange,
              tag + (dir == 0 ? " out" : " in") + "-ports are not exactly 1.." +
                  std::to_string(arcs.size()) + " (arc " + std::to_string(a.id) + " has port " +
                  std::to_string(port) + ")",
              v, a.id);
          break;
        }
      }
    }
  }

  auto check_order = [&](const std::vector<NodeId>& order, NodeKind kind, const char* name) {
    std::vector<char> seen(nv, 0);
    for (NodeId v : order) {
      if (seen[v]) add(ViolationKind::kOrderMismatch, std::string(name) + " lists node " + std::to_string(v) + " twice", v);
      seen[v] = 1;
      if (dag.kind(v) != kind) {
        add(ViolationKind::kOrderMismatch,
            std::string(name) + " lists node " + std::to_string(v) + " of kind " + to_string(dag.kind(v)), v);
      }
    }
    for (NodeId v = 0; v < nv; ++v) {
      if (dag.kind(v) == kind && !seen[v]) {
        add(ViolationKind::kOrderMismatch, std::string(name) + " omits node " + std::to_string(v), v);
      }
    }
  };
  check_order(dag.inputOrder(), NodeKind::kInput, "inputOrder");
  check_order(dag.outputOrder(), NodeKind::kOutput, "outputOrder");

  std::uint64_t outSum = 0, inSum = 0;
  for (NodeId v = 0; v < nv; ++v) {
    if (dag.kind(v) == NodeKind::kInput) outSum += dag.outDegree(v);
    if (dag.kind(v) == NodeKind::kOutput) inSum += dag.inDegree(v);
  }
  if (outSum != inSum) {
    add(ViolationKind::kSwitchingSize, "arcs leaving inputs (" + std::to_string(outSum) +
                                           ") differ from arcs entering outputs (" +
                                           std::to_string(inSum) + ")");
  }
  return report;
}

UniquePathResult unique_path_check(const SwitchingDag& dag) {
  UniquePathResult result;
  if (!dag.isAcyclic()) throw std::invalid_argument("unique_path_check: DAG is cyclic");
  const auto& topo = *dag.topologicalOrder();
  std::vector<std::uint8_t> count(dag.nodeCount());
  std::vector<std::uint32_t> rank(dag.nodeCount());
  for (std::size_t i = 0; i < topo.size(); ++i) rank[topo[i]] = static_cast<std::uint32_t>(i);
  for (NodeId src : dag.inputOrder()) {
    std::fill(count.begin(), count.end(), 0);
    count[src] = 1;
    for (std::size_t i = rank[src]; i < topo.size(); ++i) {
      const NodeId v = topo[i];
      if (count[v] == 0) continue;
      for (ArcId a : dag.outArcs(v)) {
        auto& c = count[dag.arc(a).dst];
        c = static_cast<std::uint8_t>(std::min(2, c + count[v]));
      }
    }
    for (NodeId w : dag.outputOrder()) {
      if (count[w] != 1) {
        result.unique = false;
        result.input = src;
        result.output = w;
        result.count = count[w];
        return result;
      }
    }
  }
  return result;
}

}  // namespace switchpot
