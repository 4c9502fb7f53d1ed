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

#ifndef SWITCHPOT_TESTS_FIXTURES_HPP_
#define SWITCHPOT_TESTS_FIXTURES_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchpot/dag.hpp"
#include "switchpot/networks.hpp"
#include "switchpot/potential.hpp"

namespace fixtures {

using namespace switchpot;

// One drawn arc of the 4-input FFT figure: rows are 0-based, left to right;
// arcs sharing a line style form one path.
struct DrawnArc {
  std::uint32_t level, from, to;
  const char* style;
};

inline const std::vector<DrawnArc> kFigureA = {
    {0, 0, 0, "densely dashed"}, {0, 1, 1, "dashdotted"},     {0, 0, 1, "loosely dashed"}, {0, 1, 0, "dotted"},
    {0, 2, 2, "solid"},          {0, 3, 3, "dashed"},         {0, 2, 3, "densely dotted"}, {0, 3, 2, "loosely dotted"},
    {1, 0, 0, "dotted"},         {1, 1, 3, "loosely dashed"}, {1, 0, 2, "densely dashed"}, {1, 1, 1, "dashdotted"},
    {1, 2, 2, "loosely dotted"}, {1, 3, 3, "dashed"},         {1, 2, 0, "solid"},          {1, 3, 1, "densely dotted"},
};

inline const std::vector<DrawnArc> kFigureB = {
    {0, 0, 0, "densely dashed"}, {0, 1, 1, "dashdotted"},     {0, 0, 1, "loosely dashed"}, {0, 1, 0, "dotted"},
    {0, 2, 2, "solid"},          {0, 3, 3, "dashed"},         {0, 2, 3, "densely dotted"}, {0, 3, 2, "loosely dotted"},
    {1, 0, 0, "densely dashed"}, {1, 1, 3, "loosely dashed"}, {1, 0, 2, "dotted"},         {1, 1, 1, "dashdotted"},
    {1, 2, 2, "solid"},          {1, 3, 3, "densely dotted"}, {1, 2, 0, "loosely dotted"}, {1, 3, 1, "dashed"},
};

// Switch settings that join equal styles at every level-1 node.
inline SwitchConfiguration figure_configuration(const SwitchingDag& fft4, const std::vector<DrawnArc>& drawn) {
  std::map<ArcId, std::string> style;
  for (const DrawnArc& d : drawn) {
    const NodeId u = level_node(4, d.from, d.level), v = level_node(4, d.to, d.level + 1);
    for (ArcId a : fft4.outArcs(u)) {
      if (fft4.arc(a).dst == v) style[a] = d.style;
    }
  }
  SwitchConfiguration c;
  c.map.resize(fft4.nodeCount());
  for (NodeId v : fft4.internalNodes()) {
    for (ArcId in : fft4.inArcs(v)) {
      const auto outs = fft4.outArcs(v);
      std::uint32_t port = 0;
      while (port < outs.size() && style.at(outs[port]) != style.at(in)) ++port;
      if (port == outs.size()) throw std::logic_error("figure path breaks at a switch");
      c.map[v].push_back(port);
    }
  }
  return c;
}

// Independent path counter: plain recursion over out-arcs.
inline std::uint64_t count_paths(const SwitchingDag& dag, NodeId from, NodeId to) {
  if (from == to) return 1;
  std::uint64_t total = 0;
  for (ArcId a : dag.outArcs(from)) total += count_paths(dag, dag.arc(a).dst, to);
  return total;
}

}  // namespace fixtures

#endif  // SWITCHPOT_TESTS_FIXTURES_HPP_
