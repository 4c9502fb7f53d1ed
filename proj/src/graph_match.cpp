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

#include <algorithm>
#include <queue>

#include "switchpot/dag.hpp"

namespace switchpot {
namespace {

class Matcher {
 public:
  Matcher(const SwitchingDag& p, const SwitchingDag& h, bool iso, std::uint64_t budget)
      : p_(p), h_(h), iso_(iso), budget_(budget) {}

  EmbeddingResult run() {
    EmbeddingResult res;
    if (p_.nodeCount() > h_.nodeCount()) return res;
    if (iso_ && (p_.nodeCount() != h_.nodeCount() || p_.arcCount() != h_.arcCount())) return res;
    plan();
    map_.assign(p_.nodeCount(), kNoNode);
    used_.assign(h_.nodeCount(), 0);
    if (search(0)) res.map = map_;
    res.exhausted = exhausted_;
    return res;
  }

 private:
  // Undirected BFS order; each node remembers one earlier neighbour so its
  // candidates can be drawn from the image's neighbourhood.
  void plan() {
    const std::size_t n = p_.nodeCount();
    std::vector<char> seen(n, 0);
    for (NodeId root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::queue<NodeId> q;
      q.push(root);
      order_.push_back({root, kNoNode, false});
      while (!q.empty()) {
        const NodeId u = q.front();
        q.pop();
        auto visit = [&](NodeId v, bool forward) {
          if (seen[v]) return;
          seen[v] = 1;
          order_.push_back({v, u, forward});
          q.push(v);
        };
        for (ArcId a : p_.outArcs(u)) visit(p_.arc(a).dst, true);
        for (ArcId a : p_.inArcs(u)) visit(p_.arc(a).src, false);
      }
    }
  }

  bool compatible(NodeId pv, NodeId hv) const {
    if (used_[hv]) return false;
    if (iso_) {
      if (p_.kind(pv) != h_.kind(hv) || p_.inDegree(pv) != h_.inDegree(hv) ||
          p_.outDegree(pv) != h_.outDegree(hv)) {
        return false;
      }
    } else if (p_.inDegree(pv) > h_.inDegree(hv) || p_.outDegree(pv) > h_.outDegree(hv)) {
      return false;
    }
    for (ArcId a : p_.outArcs(pv)) {
      const NodeId x = p_.arc(a).dst;
      if (x != pv && map_[x] == kNoNode) continue;
      const NodeId hx = x == pv ? hv : map_[x];
      const std::uint32_t need = p_.arcMultiplicity(pv, x);
      const std::uint32_t have = h_.arcMultiplicity(hv, hx);
      if (iso_ ? need != have : need > have) return false;
    }
    for (ArcId a : p_.inArcs(pv)) {
      const NodeId x = p_.arc(a).src;
      if (map_[x] == kNoNode) continue;
      const std::uint32_t need = p_.arcMultiplicity(x, pv);
      const std::uint32_t have = h_.arcMultiplicity(map_[x], hv);
      if (iso_ ? need != have : need > have) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++steps_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const Step& s = order_[depth];
    std::vector<NodeId> cands;
    if (s.anchor == kNoNode) {
      cands.resize(h_.nodeCount());
      for (NodeId v = 0; v < cands.size(); ++v) cands[v] = v;
    } else {
      const NodeId ha = map_[s.anchor];
      if (s.forward) {
        for (ArcId a : h_.outArcs(ha)) cands.push_back(h_.arc(a).dst);
      } else {
        for (ArcId a : h_.inArcs(ha)) cands.push_back(h_.arc(a).src);
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    }
    for (NodeId hv : cands) {
      if (!compatible(s.node, hv)) continue;
      map_[s.node] = hv;
      used_[hv] = 1;
      if (search(depth + 1)) return true;
      map_[s.node] = kNoNode;
      used_[hv] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  struct Step {
    NodeId node;
    NodeId anchor;
    bool forward;  // pattern arc anchor -> node
  };

  const SwitchingDag& p_;
  const SwitchingDag& h_;
  bool iso_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
  std::vector<Step> order_;
  std::vector<NodeId> map_;
  std::vector<char> used_;
};

}  // namespace

EmbeddingResult find_embedding(const SwitchingDag& pattern, const SwitchingDag& host,
                               bool isomorphism, std::uint64_t stepBudget) {
  return Matcher(pattern, host, isomorphism, stepBudget).run();
}

}  // namespace switchpot
