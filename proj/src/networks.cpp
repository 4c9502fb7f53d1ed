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

#include "switchpot/networks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace switchpot {
namespace {

void require_power_of_two(std::uint32_t n, const char* what) {
  if (n < 2 || !is_power_of_two(n)) {
    throw std::invalid_argument(std::string(what) + ": n must be a power of two >= 2, got " +
                                std::to_string(n));
  }
}

// Builds a leveled DAG where each <w,l> (l < levels) has arcs to <w,l+1> and
// <partner(w,l),l+1>. Levels 0 and `levels` are inputs and outputs.
template <typename Partner>
SwitchingDag build_leveled(std::uint32_t n, std::uint32_t levels, Partner partner,
                           std::vector<Block> blocks) {
  DagBuilder b;
  for (std::uint32_t l = 0; l <= levels; ++l) {
    const NodeKind kind = l == 0 ? NodeKind::kInput : l == levels ? NodeKind::kOutput : NodeKind::kInternal;
    for (std::uint32_t w = 0; w < n; ++w) b.addNode(kind);
  }
  for (std::uint32_t l = 0; l < levels; ++l) {
    for (std::uint32_t w = 0; w < n; ++w) {
      const std::uint32_t x = partner(w, l);
      const std::uint32_t lo = std::min(w, x), hi = std::max(w, x);
      b.addArc(level_node(n, w, l), level_node(n, lo, l + 1));
      b.addArc(level_node(n, w, l), level_node(n, hi, l + 1));
    }
  }
  std::vector<NodeId> in(n), out(n);
  for (std::uint32_t w = 0; w < n; ++w) {
    in[w] = level_node(n, w, 0);
    out[w] = level_node(n, w, levels);
  }
  return std::move(b).build(std::move(in), std::move(out), std::move(blocks));
}

std::uint32_t bmn_partner(std::uint32_t n, std::uint32_t w, std::uint32_t l) {
  const std::uint32_t s = n >> l;
  const std::uint32_t i = w / s;
  return (i + 1) * s - 1 - (w % s);
}

}  // namespace

SwitchingDag build_fft(std::uint32_t n) {
  require_power_of_two(n, "build_fft");
  return build_leveled(n, ilog2(n), [](std::uint32_t w, std::uint32_t l) { return w ^ (1u << l); }, {});
}

SwitchingDag build_bmn(std::uint32_t n) {
  require_power_of_two(n, "build_bmn");
  return build_leveled(n, ilog2(n), [n](std::uint32_t w, std::uint32_t l) { return bmn_partner(n, w, l); }, {});
}

SwitchingDag build_pbsn(std::uint32_t n) {
  require_power_of_two(n, "build_pbsn");
  const std::uint32_t k = ilog2(n);
  std::vector<Block> blocks(k);
  for (std::uint32_t b = 0; b < k; ++b) {
    for (std::uint32_t l = b * k; l <= (b + 1) * k; ++l) {
      for (std::uint32_t w = 0; w < n; ++w) blocks[b].nodes.push_back(level_node(n, w, l));
    }
    for (std::uint32_t w = 0; w < n; ++w) {
      blocks[b].inputs.push_back(level_node(n, w, b * k));
      blocks[b].outputs.push_back(level_node(n, w, (b + 1) * k));
    }
  }
  return build_leveled(
      n, k * k, [n, k](std::uint32_t w, std::uint32_t l) { return bmn_partner(n, w, l % k); },
      std::move(blocks));
}

SwitchingDag extract_block(const SwitchingDag& dag, std::size_t block) {
  const Block& blk = dag.blocks().at(block);
  std::vector<NodeId> local(dag.nodeCount(), kNoNode);
  std::vector<NodeKind> kinds(dag.nodeCount(), NodeKind::kInternal);
  for (NodeId v : blk.inputs) kinds[v] = NodeKind::kInput;
  for (NodeId v : blk.outputs) kinds[v] = NodeKind::kOutput;
  DagBuilder b;
  for (NodeId v : blk.nodes) local[v] = b.addNode(kinds[v]);
  for (const Arc& a : dag.arcs()) {
    if (local[a.src] == kNoNode || local[a.dst] == kNoNode) continue;
    if (kinds[a.src] == NodeKind::kOutput || kinds[a.dst] == NodeKind::kInput) continue;
    b.addArc(local[a.src], local[a.dst]);
  }
  std::vector<NodeId> in, out;
  for (NodeId v : blk.inputs) in.push_back(local[v]);
  for (NodeId v : blk.outputs) out.push_back(local[v]);
  return std::move(b).build(std::move(in), std::move(out));
}

std::size_t ComparatorNetwork::comparatorCount() const {
  std::size_t c = 0;
  for (const auto& s : stages) c += s.size();
  return c;
}

void check_network(const ComparatorNetwork& net) {
  if (net.width == 0) throw std::invalid_argument("comparator network has width 0");
  std::vector<std::size_t> lastStage(net.width, static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < net.stages.size(); ++s) {
    for (auto [i, j] : net.stages[s]) {
      if (!(i < j && j < net.width)) {
        throw std::invalid_argument("comparator (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") invalid for width " + std::to_string(net.width));
      }
      for (std::uint32_t line : {i, j}) {
        if (lastStage[line] == s) {
          throw std::invalid_argument("line " + std::to_string(line) + " used twice in stage " +
                                      std::to_string(s));
        }
        lastStage[line] = s;
      }
    }
  }
}

ComparatorNetwork build_bitonic(std::uint32_t n) {
  require_power_of_two(n, "build_bitonic");
  ComparatorNetwork net;
  net.width = n;
  net.kind = NetworkKind::kSorting;
  for (std::uint32_t size = 2; size <= n; size *= 2) {
    auto& flip = net.stages.emplace_back();
    for (std::uint32_t base = 0; base < n; base += size) {
      for (std::uint32_t t = 0; t < size / 2; ++t) flip.emplace_back(base + t, base + size - 1 - t);
    }
    for (std::uint32_t half = size / 4; half >= 1; half /= 2) {
      auto& clean = net.stages.emplace_back();
      for (std::uint32_t base = 0; base < n; base += 2 * half) {
        for (std::uint32_t t = 0; t < half; ++t) clean.emplace_back(base + t, base + t + half);
      }
    }
  }
  return net;
}

ComparatorNetwork build_benes(std::uint32_t n) {
  require_power_of_two(n, "build_benes");
  const std::uint32_t k = ilog2(n);
  ComparatorNetwork net;
  net.width = n;
  net.kind = NetworkKind::kRouting;
  std::vector<std::uint32_t> dims;
  for (std::uint32_t d = k; d-- > 0;) dims.push_back(d);
  for (std::uint32_t d = 1; d < k; ++d) dims.push_back(d);
  for (std::uint32_t d : dims) {
    auto& stage = net.stages.emplace_back();
    for (std::uint32_t i = 0; i < n; ++i) {
      if ((i >> d & 1u) == 0) stage.emplace_back(i, i | (1u << d));
    }
  }
  return net;
}

std::vector<int> apply_network(const ComparatorNetwork& net, std::vector<int> keys) {
  check_network(net);
  if (keys.size() != net.width) throw std::invalid_argument("apply_network: key count != width");
  for (const auto& stage : net.stages) {
    for (auto [i, j] : stage) {
      if (keys[i] > keys[j]) std::swap(keys[i], keys[j]);
    }
  }
  return keys;
}

SwitchingDag comparator_network_to_dag(const ComparatorNetwork& net) {
  check_network(net);
  DagBuilder b;
  std::vector<NodeId> current(net.width), inputs(net.width), outputs(net.width);
  for (std::uint32_t i = 0; i < net.width; ++i) current[i] = inputs[i] = b.addNode(NodeKind::kInput);
  for (const auto& stage : net.stages) {
    for (auto [i, j] : stage) {
      const NodeId lo = b.addNode(NodeKind::kInternal);
      const NodeId hi = b.addNode(NodeKind::kInternal);
      b.addArc(current[i], lo);
      b.addArc(current[i], hi);
      b.addArc(current[j], lo);
      b.addArc(current[j], hi);
      current[i] = lo;
      current[j] = hi;
    }
  }
  for (std::uint32_t i = 0; i < net.width; ++i) {
    outputs[i] = b.addNode(NodeKind::kOutput);
    b.addArc(current[i], outputs[i]);
    b.addArc(current[i], outputs[i]);
  }
  return std::move(b).build(std::move(inputs), std::move(outputs));
}

}  // namespace switchpot
