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

#include "switchpot/io_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "placement_counter.hpp"
#include "switchpot/networks.hpp"

namespace switchpot {

const char* to_string(IoStepKind k) {
  switch (k) {
    case IoStepKind::kLocal:
      return "local";
    case IoStepKind::kRead:
      return "read";
    case IoStepKind::kWrite:
      return "write";
  }
  return "?";
}

const char* to_string(IoOpType t) {
  switch (t) {
    case IoOpType::kIdle:
      return "idle";
    case IoOpType::kCompute:
      return "compute";
    case IoOpType::kEvict:
      return "evict";
    case IoOpType::kRead:
      return "read";
    case IoOpType::kWrite:
      return "write";
  }
  return "?";
}

const char* to_string(IoIssue i) {
  switch (i) {
    case IoIssue::kOk:
      return "ok";
    case IoIssue::kStructural:
      return "structural";
    case IoIssue::kRecomputation:
      return "recomputation";
    case IoIssue::kMissing:
      return "missing";
    case IoIssue::kCapacity:
      return "capacity";
    case IoIssue::kConflict:
      return "conflict";
    case IoIssue::kLayout:
      return "layout";
  }
  return "?";
}

std::uint64_t io_complexity(const IoSchedule& sched) {
  return static_cast<std::uint64_t>(std::count_if(sched.steps.begin(), sched.steps.end(),
                                                  [](const IoStep& s) { return s.kind != IoStepKind::kLocal; }));
}

namespace {

IoCheck io_issue(IoIssue kind, std::size_t step, ProcId proc, const std::string& msg) {
  IoCheck c;
  c.issue = kind;
  c.step = step;
  c.proc = proc;
  c.message = std::string(to_string(kind)) + " at step " + std::to_string(step) + ", processor " +
              std::to_string(proc) + ": " + msg;
  return c;
}

bool op_allowed(IoStepKind kind, IoOpType op, bool envelopes) {
  switch (kind) {
    case IoStepKind::kLocal:
      return op == IoOpType::kIdle || op == IoOpType::kCompute || (op == IoOpType::kEvict && !envelopes);
    case IoStepKind::kRead:
      return op == IoOpType::kIdle || op == IoOpType::kRead;
    case IoStepKind::kWrite:
      return op == IoOpType::kIdle || op == IoOpType::kWrite;
  }
  return false;
}

// Shared replay for both payload kinds. Items are nodes or arcs; `local`
// holds per-processor membership.
class IoReplay {
 public:
  IoReplay(const SwitchingDag& dag, const IoSchedule& s) : dag_(dag), s_(s) {}

  IoCheck run() {
    const bool env = s_.kind == PayloadKind::kEnvelope;
    if (s_.p == 0) return io_issue(IoIssue::kStructural, 0, 0, "p must be positive");
    const std::size_t items = env ? dag_.arcCount() : dag_.nodeCount();
    local_.assign(s_.p, std::vector<char>(items, 0));
    count_.assign(s_.p, 0);
    done_.assign(dag_.nodeCount(), 0);

    // Initial layout.
    const auto expectIn = env ? std::vector<std::uint32_t>(dag_.einArcs().begin(), dag_.einArcs().end())
                              : std::vector<std::uint32_t>(dag_.inputOrder().begin(), dag_.inputOrder().end());
    if (s_.initialLayout.size() != expectIn.size()) {
      return io_issue(IoIssue::kLayout, 0, 0, "initial layout must place every input exactly once");
    }
    for (std::uint32_t x : expectIn) {
      auto it = s_.initialLayout.find(x);
      if (it == s_.initialLayout.end()) return io_issue(IoIssue::kLayout, 0, 0, "item " + std::to_string(x) + " not laid out");
      if (!shared_.emplace(it->second, x).second) {
        return io_issue(IoIssue::kLayout, 0, 0, "address " + std::to_string(it->second) + " used twice");
      }
    }
    for (NodeId u : dag_.inputOrder()) done_[u] = 1;

    for (std::size_t t = 0; t < s_.steps.size(); ++t) {
      const IoStep& st = s_.steps[t];
      if (st.ops.size() != s_.p) return io_issue(IoIssue::kStructural, t, 0, "step needs one op per processor");
      std::unordered_set<std::uint64_t> written;
      std::vector<std::pair<std::uint64_t, std::uint32_t>> writes;
      std::vector<std::uint64_t> taken;
      for (ProcId i = 0; i < s_.p; ++i) {
        const IoOp& op = st.ops[i];
        if (!op_allowed(st.kind, op.type, env)) {
          return io_issue(IoIssue::kStructural, t, i,
                          std::string(to_string(op.type)) + " op inside a " + to_string(st.kind) + " step");
        }
        if (op.type == IoOpType::kIdle) continue;
        const std::size_t limit = (op.type == IoOpType::kCompute || !env) ? dag_.nodeCount() : dag_.arcCount();
        if (op.item >= limit) return io_issue(IoIssue::kStructural, t, i, "unknown item " + std::to_string(op.item));
        IoCheck c;
        switch (op.type) {
          case IoOpType::kCompute:
            c = compute(t, i, op.item, env);
            break;
          case IoOpType::kEvict:
            if (!local_[i][op.item]) return io_issue(IoIssue::kMissing, t, i, "evicting absent item " + std::to_string(op.item));
            local_[i][op.item] = 0;
            --count_[i];
            break;
          case IoOpType::kRead: {
            auto it = shared_.find(op.address);
            if (it == shared_.end() || it->second != op.item) {
              return io_issue(IoIssue::kMissing, t, i,
                              "address " + std::to_string(op.address) + " does not hold item " + std::to_string(op.item));
            }
            if (env) taken.push_back(op.address);
            c = add(t, i, op.item);
            break;
          }
          case IoOpType::kWrite:
            if (!local_[i][op.item]) {
              return io_issue(IoIssue::kMissing, t, i, "writing absent item " + std::to_string(op.item));
            }
            if (!written.insert(op.address).second) {
              return io_issue(IoIssue::kConflict, t, i, "two writes to address " + std::to_string(op.address));
            }
            writes.emplace_back(op.address, op.item);
            if (env) {
              local_[i][op.item] = 0;
              --count_[i];
            }
            break;
          case IoOpType::kIdle:
            break;
        }
        if (!c.ok()) return c;
      }
      if (env) {
        for (std::uint64_t x : taken) {
          if (shared_.erase(x) == 0) {
            return io_issue(IoIssue::kConflict, t, 0, "envelope at address " + std::to_string(x) + " read twice");
          }
        }
      }
      for (auto [x, item] : writes) {
        if (env && shared_.count(x)) {
          return io_issue(IoIssue::kConflict, t, 0, "write to occupied envelope slot " + std::to_string(x));
        }
        shared_[x] = item;
      }
    }

    for (NodeId v = 0; v < dag_.nodeCount(); ++v) {
      if (done_[v]) continue;
      if (env && dag_.kind(v) == NodeKind::kOutput) continue;
      return io_issue(IoIssue::kMissing, s_.steps.size(), 0, "node " + std::to_string(v) + " never computed");
    }
    const auto expectOut = env ? std::vector<std::uint32_t>(dag_.eoutArcs().begin(), dag_.eoutArcs().end())
                               : std::vector<std::uint32_t>(dag_.outputOrder().begin(), dag_.outputOrder().end());
    if (s_.finalLayout.size() != expectOut.size()) {
      return io_issue(IoIssue::kLayout, s_.steps.size(), 0, "final layout must place every output exactly once");
    }
    for (std::uint32_t x : expectOut) {
      auto it = s_.finalLayout.find(x);
      if (it == s_.finalLayout.end()) {
        return io_issue(IoIssue::kLayout, s_.steps.size(), 0, "output item " + std::to_string(x) + " missing from layout");
      }
      auto at = shared_.find(it->second);
      if (at == shared_.end() || at->second != x) {
        return io_issue(IoIssue::kLayout, s_.steps.size(), 0,
                        "address " + std::to_string(it->second) + " does not end with item " + std::to_string(x));
      }
    }
    return {};
  }

 private:
  IoCheck add(std::size_t t, ProcId i, std::uint32_t item) {
    if (local_[i][item]) return {};
    local_[i][item] = 1;
    ++count_[i];
    if (s_.memory && count_[i] > *s_.memory) {
      return io_issue(IoIssue::kCapacity, t, i, "local memory exceeds " + std::to_string(*s_.memory) + " words");
    }
    return {};
  }

  IoCheck compute(std::size_t t, ProcId i, NodeId v, bool env) {
    if (dag_.kind(v) == NodeKind::kInput || done_[v]) {
      return io_issue(IoIssue::kRecomputation, t, i, "node " + std::to_string(v) + " computed twice");
    }
    if (env && dag_.kind(v) == NodeKind::kOutput) {
      return io_issue(IoIssue::kStructural, t, i, "outputs are not switched");
    }
    for (ArcId a : dag_.inArcs(v)) {
      const std::uint32_t need = env ? a : dag_.arc(a).src;
      if (!local_[i][need]) {
        return io_issue(IoIssue::kMissing, t, i,
                        std::string(env ? "envelope on arc " : "operand ") + std::to_string(need) + " of node " +
                            std::to_string(v) + " not in local memory");
      }
    }
    done_[v] = 1;
    if (!env) return add(t, i, v);
    for (ArcId a : dag_.inArcs(v)) {
      local_[i][a] = 0;
      --count_[i];
    }
    for (ArcId a : dag_.outArcs(v)) {
      IoCheck c = add(t, i, a);
      if (!c.ok()) return c;
    }
    return {};
  }

  const SwitchingDag& dag_;
  const IoSchedule& s_;
  std::vector<std::vector<char>> local_;
  std::vector<std::uint64_t> count_;
  std::vector<char> done_;
  std::unordered_map<std::uint64_t, std::uint32_t> shared_;
};

}  // namespace

IoCheck validate_io_evaluation(const SwitchingDag& dag, const IoSchedule& sched) {
  if (sched.kind != PayloadKind::kValue) return io_issue(IoIssue::kStructural, 0, 0, "expected a value schedule");
  return IoReplay(dag, sched).run();
}

IoCheck validate_io_envelope(const SwitchingDag& dag, const IoSchedule& sched) {
  if (sched.kind != PayloadKind::kEnvelope) return io_issue(IoIssue::kStructural, 0, 0, "expected an envelope schedule");
  return IoReplay(dag, sched).run();
}

IoCheck validate_io(const SwitchingDag& dag, const IoSchedule& sched) {
  return sched.kind == PayloadKind::kValue ? validate_io_evaluation(dag, sched) : validate_io_envelope(dag, sched);
}

IoSchedule blocked_fft_io_schedule(std::uint32_t n, std::uint32_t p, std::optional<std::uint64_t> memory) {
  if (n < 2 || !is_power_of_two(n) || p < 1 || p > n) {
    throw std::invalid_argument("blocked_fft_io_schedule: need n a power of two >= 2 and 1 <= p <= n");
  }
  std::uint32_t s = std::max<std::uint32_t>(n / p, 2);
  if (!is_power_of_two(s)) s = 1u << ilog2(s);
  if (memory) {
    if (*memory < 4) throw std::invalid_argument("blocked_fft_io_schedule: need m >= 4");
    std::uint32_t cap = 2;
    while (static_cast<std::uint64_t>(cap) * 2 + 2 <= *memory && cap * 2 <= n) cap *= 2;
    s = std::min(s, cap);
  }
  const std::uint32_t logn = ilog2(n), b = ilog2(s);
  IoSchedule out;
  out.kind = PayloadKind::kValue;
  out.p = p;
  out.memory = memory;
  for (std::uint32_t w = 0; w < n; ++w) {
    out.initialLayout[level_node(n, w, 0)] = w;
    out.finalLayout[level_node(n, w, logn)] = w;
  }
  auto lanes = [&](IoStepKind kind) -> IoStep& {
    IoStep& st = out.steps.emplace_back();
    st.kind = kind;
    st.ops.assign(p, IoOp{});
    return st;
  };
  for (std::uint32_t lo = 0; lo < logn; lo += b) {
    const std::uint32_t hi = std::min(lo + b, logn), width = hi - lo;
    const std::uint32_t size = 1u << width, groups = n / size;
    // Rows of group g: the free bits [lo, hi) range over all values.
    auto row = [&](std::uint32_t g, std::uint32_t r) {
      const std::uint32_t low = g & ((1u << lo) - 1), high = g >> lo;
      return low | (r << lo) | (high << hi);
    };
    for (std::uint32_t round = 0; round * p < groups; ++round) {
      auto group = [&](ProcId i) -> std::optional<std::uint32_t> {
        const std::uint32_t g = round * p + i;
        return g < groups ? std::optional(g) : std::nullopt;
      };
      for (std::uint32_t r = 0; r < size; ++r) {
        IoStep& st = lanes(IoStepKind::kRead);
        for (ProcId i = 0; i < p; ++i) {
          if (auto g = group(i)) st.ops[i] = {IoOpType::kRead, level_node(n, row(*g, r), lo), row(*g, r)};
        }
      }
      for (std::uint32_t l = lo; l < hi; ++l) {
        const std::uint32_t bit = 1u << (l - lo);
        for (std::uint32_t r = 0; r < size; ++r) {
          if (r & bit) continue;
          for (int phase = 0; phase < 4; ++phase) {
            IoStep& st = lanes(IoStepKind::kLocal);
            for (ProcId i = 0; i < p; ++i) {
              auto g = group(i);
              if (!g) continue;
              const std::uint32_t w = row(*g, phase % 2 ? r | bit : r);
              st.ops[i] = phase < 2 ? IoOp{IoOpType::kCompute, level_node(n, w, l + 1), 0}
                                    : IoOp{IoOpType::kEvict, level_node(n, w, l), 0};
            }
          }
        }
      }
      for (std::uint32_t r = 0; r < size; ++r) {
        IoStep& st = lanes(IoStepKind::kWrite);
        for (ProcId i = 0; i < p; ++i) {
          if (auto g = group(i)) st.ops[i] = {IoOpType::kWrite, level_node(n, row(*g, r), hi), row(*g, r)};
        }
      }
      for (std::uint32_t r = 0; r < size; ++r) {
        IoStep& st = lanes(IoStepKind::kLocal);
        for (ProcId i = 0; i < p; ++i) {
          if (auto g = group(i)) st.ops[i] = {IoOpType::kEvict, level_node(n, row(*g, r), hi), 0};
        }
      }
    }
  }
  return out;
}

namespace {

struct Event {
  std::uint32_t step;
  ProcId proc;
  IoOpType type;       // kCompute (origin), kRead or kWrite
  std::uint64_t address;
};

// Backward provenance over a validated value schedule.
class Provenance {
 public:
  Provenance(const SwitchingDag& dag, const IoSchedule& s) : dag_(dag), s_(s) {
    intro_.resize(s.p);
    for (std::uint32_t t = 0; t < s.steps.size(); ++t) {
      const IoStep& st = s.steps[t];
      for (ProcId i = 0; i < s.p; ++i) {
        const IoOp& op = st.ops[i];
        if (op.type == IoOpType::kCompute) {
          intro_[i][op.item].push_back({t, i, IoOpType::kCompute, 0});
          computedAt_[op.item] = {t, i};
        } else if (op.type == IoOpType::kRead) {
          intro_[i][op.item].push_back({t, i, IoOpType::kRead, op.address});
        } else if (op.type == IoOpType::kWrite) {
          writes_[op.address].push_back({t, i, IoOpType::kWrite, op.address});
          writeItem_[{op.address, t}] = op.item;
        }
      }
    }
  }

  std::pair<std::uint32_t, ProcId> computedAt(NodeId v) const { return computedAt_.at(v); }

  // Events that brought `u` to processor `proc` before step `t`, newest
  // first; ends at the computation of u or at its initial address.
  std::vector<Event> chain(NodeId u, ProcId proc, std::uint32_t t) const {
    std::vector<Event> out;
    for (;;) {
      const Event* src = nullptr;
      auto it = intro_[proc].find(u);
      if (it != intro_[proc].end()) {
        for (const Event& e : it->second) {
          if (e.step < t) src = &e;
        }
      }
      if (src == nullptr) throw std::logic_error("value without provenance in a validated schedule");
      if (src->type == IoOpType::kCompute) return out;
      out.push_back(*src);
      const Event* w = nullptr;
      auto wt = writes_.find(src->address);
      if (wt != writes_.end()) {
        for (const Event& e : wt->second) {
          if (e.step < src->step) w = &e;
        }
      }
      if (w == nullptr) return out;  // initial layout
      out.push_back(*w);
      proc = w->proc;
      t = w->step;
    }
  }

  // The write that leaves u at its final address.
  Event finalWrite(NodeId u, std::uint64_t address) const {
    const auto& list = writes_.at(address);
    const Event& last = list.back();
    if (writeItem_.at({address, last.step}) != u) throw std::logic_error("final address not written by its output");
    return last;
  }

 private:
  const SwitchingDag& dag_;
  const IoSchedule& s_;
  std::vector<std::unordered_map<std::uint32_t, std::vector<Event>>> intro_;
  std::unordered_map<std::uint64_t, std::vector<Event>> writes_;
  std::map<std::pair<std::uint64_t, std::uint32_t>, std::uint32_t> writeItem_;
  std::unordered_map<NodeId, std::pair<std::uint32_t, ProcId>> computedAt_;
};

}  // namespace

IoSchedule evaluation_to_envelope_io(const SwitchingDag& dag, const IoSchedule& sched) {
  const IoCheck check = validate_io_evaluation(dag, sched);
  if (!check.ok()) throw std::invalid_argument("evaluation_to_envelope_io: " + check.message);
  std::uint32_t slots = dag.maxOutDegree();
  for (NodeId w : dag.outputOrder()) slots = std::max(slots, dag.inDegree(w));
  const Provenance prov(dag, sched);

  // Envelope ops attached to each (step, processor) I/O event.
  std::map<std::pair<std::uint32_t, ProcId>, std::vector<IoOp>> attached;
  auto attach = [&](const std::vector<Event>& events, ArcId arc, std::uint32_t slot) {
    for (const Event& e : events) {
      attached[{e.step, e.proc}].push_back({e.type, arc, e.address * slots + slot});
    }
  };
  for (const Arc& a : dag.arcs()) {
    const auto [t, proc] = prov.computedAt(a.dst);
    attach(prov.chain(a.src, proc, t), a.id, a.srcPort - 1);
    if (dag.kind(a.dst) == NodeKind::kOutput) {
      const Event last = prov.finalWrite(a.dst, sched.finalLayout.at(a.dst));
      std::vector<Event> tail = prov.chain(a.dst, last.proc, last.step);
      tail.insert(tail.begin(), last);
      attach(tail, a.id, a.dstPort - 1);
    }
  }

  IoSchedule out;
  out.kind = PayloadKind::kEnvelope;
  out.p = sched.p;
  if (sched.memory) out.memory = *sched.memory * slots;
  for (ArcId a : dag.einArcs()) {
    out.initialLayout[a] = sched.initialLayout.at(dag.arc(a).src) * slots + (dag.arc(a).srcPort - 1);
  }
  for (ArcId a : dag.eoutArcs()) {
    out.finalLayout[a] = sched.finalLayout.at(dag.arc(a).dst) * slots + (dag.arc(a).dstPort - 1);
  }
  for (std::uint32_t t = 0; t < sched.steps.size(); ++t) {
    const IoStep& st = sched.steps[t];
    if (st.kind == IoStepKind::kLocal) {
      IoStep local;
      local.kind = IoStepKind::kLocal;
      local.ops.assign(sched.p, IoOp{});
      bool any = false;
      for (ProcId i = 0; i < sched.p; ++i) {
        const IoOp& op = st.ops[i];
        if (op.type == IoOpType::kCompute && dag.kind(op.item) == NodeKind::kInternal) {
          local.ops[i] = {IoOpType::kCompute, op.item, 0};
          any = true;
        }
      }
      if (any) out.steps.push_back(std::move(local));
      continue;
    }
    std::size_t depth = 0;
    std::vector<std::vector<IoOp>*> lists(sched.p, nullptr);
    for (ProcId i = 0; i < sched.p; ++i) {
      auto it = attached.find({t, i});
      if (it == attached.end()) continue;
      std::sort(it->second.begin(), it->second.end(), [](const IoOp& x, const IoOp& y) { return x.item < y.item; });
      lists[i] = &it->second;
      depth = std::max(depth, it->second.size());
    }
    for (std::size_t k = 0; k < depth; ++k) {
      IoStep sub;
      sub.kind = st.kind;
      sub.ops.assign(sched.p, IoOp{});
      for (ProcId i = 0; i < sched.p; ++i) {
        if (lists[i] && k < lists[i]->size()) sub.ops[i] = (*lists[i])[k];
      }
      out.steps.push_back(std::move(sub));
    }
  }
  return out;
}

IoTrace io_redistribution_trace(const SwitchingDag& dag, const IoSchedule& envSched, std::uint64_t budget) {
  const IoCheck check = validate_io_envelope(dag, envSched);
  if (!check.ok()) throw std::invalid_argument("io_redistribution_trace: " + check.message);
  const std::uint32_t p = envSched.p;
  std::unordered_map<std::uint64_t, std::uint32_t> addressCode;
  auto code = [&](std::uint64_t x) {
    auto [it, fresh] = addressCode.emplace(x, static_cast<std::uint32_t>(p + addressCode.size()));
    return it->second;
  };
  constexpr std::uint32_t kDead = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> where(dag.arcCount(), kDead);
  for (auto [a, x] : envSched.initialLayout) where[a] = code(x);

  IoTrace t;
  t.p = p;
  t.memory = envSched.memory;
  std::vector<detail::BoundarySnapshot> snaps;
  auto snapshot = [&] {
    detail::BoundarySnapshot s;
    for (ArcId a = 0; a < dag.arcCount(); ++a) {
      if (where[a] != kDead) s.emplace_back(a, where[a]);
    }
    snaps.push_back(std::move(s));
  };
  for (const IoStep& st : envSched.steps) {
    if (st.kind != IoStepKind::kLocal) {
      snapshot();
      t.kinds.push_back(st.kind);
      BigInt factor = 1;
      if (st.kind == IoStepKind::kWrite) {
        std::vector<std::uint32_t> held(p, 0);
        for (ArcId a = 0; a < dag.arcCount(); ++a) {
          if (where[a] < p) ++held[where[a]];
        }
        for (ProcId i = 0; i < p; ++i) {
          if (st.ops[i].type == IoOpType::kWrite) factor *= held[i];
        }
      }
      t.writeFactor.push_back(factor);
    }
    for (ProcId i = 0; i < p; ++i) {
      const IoOp& op = st.ops[i];
      switch (op.type) {
        case IoOpType::kCompute:
          for (ArcId a : dag.inArcs(op.item)) where[a] = kDead;
          for (ArcId a : dag.outArcs(op.item)) where[a] = i;
          break;
        case IoOpType::kRead:
          where[op.item] = i;
          break;
        case IoOpType::kWrite:
          where[op.item] = code(op.address);
          break;
        default:
          break;
      }
    }
  }
  snapshot();
  t.H = t.kinds.size();
  t.eta = detail::count_placements(dag, snaps, static_cast<std::uint32_t>(p + addressCode.size()), budget);
  return t;
}

SandwichCheck check_io_reads(const IoTrace& t) {
  for (std::size_t j = 0; j < t.kinds.size(); ++j) {
    if (t.kinds[j] == IoStepKind::kRead && t.eta[j + 1] > t.eta[j]) {
      return {false, "read step " + std::to_string(j + 1) + " raises eta from " + t.eta[j].str() + " to " +
                         t.eta[j + 1].str()};
    }
  }
  return {true, "no read raises eta"};
}

SandwichCheck check_io_writes(const IoTrace& t) {
  for (std::size_t j = 0; j < t.kinds.size(); ++j) {
    if (t.kinds[j] == IoStepKind::kWrite && t.eta[j + 1] > t.eta[j] * t.writeFactor[j]) {
      return {false, "write step " + std::to_string(j + 1) + " raises eta from " + t.eta[j].str() + " to " +
                         t.eta[j + 1].str() + ", beyond factor " + t.writeFactor[j].str()};
    }
  }
  return {true, "every write within its factor"};
}

SandwichCheck check_io_placements_upper(const IoTrace& t, std::uint32_t N) {
  const auto ph = static_cast<unsigned>(t.p * t.H);
  const BigInt& eta = t.eta.back();
  bool ok;
  std::string what;
  if (t.memory && *t.memory * t.p <= N) {
    ok = eta <= boost::multiprecision::pow(BigInt(*t.memory), ph);
    what = "m^(pH) with m=" + std::to_string(*t.memory);
  } else {
    ok = eta * boost::multiprecision::pow(BigInt(t.p), ph) <= boost::multiprecision::pow(BigInt(N), ph);
    what = "(N/p)^(pH) with N=" + std::to_string(N);
  }
  return {ok, "eta_end=" + eta.str() + (ok ? " <= " : " > ") + what + ", p=" + std::to_string(t.p) +
                  ", H=" + std::to_string(t.H)};
}

}  // namespace switchpot
