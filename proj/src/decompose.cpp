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
#include <stdexcept>

#include "switchpot/bsp_schedule.hpp"

namespace switchpot {
namespace {

// Kuhn's augmenting paths; senders and receivers scanned in index order.
class Matcher {
 public:
  explicit Matcher(const std::vector<std::vector<std::uint32_t>>& edges) : edges_(edges) {}

  std::vector<std::uint32_t> perfect() {
    const std::size_t p = edges_.size();
    matchOfReceiver_.assign(p, kNone);
    for (std::uint32_t s = 0; s < p; ++s) {
      seen_.assign(p, 0);
      if (!augment(s)) throw std::logic_error("regular multigraph without a perfect matching");
    }
    std::vector<std::uint32_t> receiverOf(p);
    for (std::uint32_t d = 0; d < p; ++d) receiverOf[matchOfReceiver_[d]] = d;
    return receiverOf;
  }

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  bool augment(std::uint32_t s) {
    for (std::uint32_t d = 0; d < edges_.size(); ++d) {
      if (edges_[s][d] == 0 || seen_[d]) continue;
      seen_[d] = 1;
      if (matchOfReceiver_[d] == kNone || augment(matchOfReceiver_[d])) {
        matchOfReceiver_[d] = s;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::uint32_t>>& edges_;
  std::vector<std::uint32_t> matchOfReceiver_;
  std::vector<char> seen_;
};

}  // namespace

BspSchedule decompose_degree_one(const BspSchedule& sched) {
  BspSchedule out = sched;
  out.supersteps.clear();
  const std::uint32_t p = sched.p;
  for (const Superstep& st : sched.supersteps) {
    std::vector<std::uint32_t> sent(p, 0), recv(p, 0);
    for (const Message& m : st.messages) {
      ++sent[m.from];
      ++recv[m.to];
    }
    std::uint32_t h = 0;
    for (std::uint32_t i = 0; i < p; ++i) h = std::max({h, sent[i], recv[i]});
    if (h <= 1) {
      out.supersteps.push_back(st);
      continue;
    }
    // Real messages queued per (sender, receiver), plus dummy edge counts.
    std::vector<std::vector<std::vector<std::size_t>>> real(p, std::vector<std::vector<std::size_t>>(p));
    for (std::size_t k = st.messages.size(); k-- > 0;) {
      real[st.messages[k].from][st.messages[k].to].push_back(k);  // back() = earliest
    }
    std::vector<std::vector<std::uint32_t>> dummy(p, std::vector<std::uint32_t>(p, 0));
    for (;;) {
      std::uint32_t s = p, d = p;
      for (std::uint32_t i = 0; i < p; ++i) {
        if (sent[i] < h && (s == p || sent[i] < sent[s])) s = i;
        if (recv[i] < h && (d == p || recv[i] < recv[d])) d = i;
      }
      if (s == p) break;
      ++dummy[s][d];
      ++sent[s];
      ++recv[d];
    }
    std::vector<std::vector<std::uint32_t>> edges(p, std::vector<std::uint32_t>(p));
    for (std::uint32_t i = 0; i < p; ++i) {
      for (std::uint32_t j = 0; j < p; ++j) edges[i][j] = static_cast<std::uint32_t>(real[i][j].size()) + dummy[i][j];
    }
    for (std::uint32_t round = 0; round < h; ++round) {
      Superstep piece;
      if (round == 0) piece.work = st.work;
      const std::vector<std::uint32_t> match = Matcher(edges).perfect();
      for (std::uint32_t i = 0; i < p; ++i) {
        const std::uint32_t j = match[i];
        --edges[i][j];
        if (!real[i][j].empty()) {
          piece.messages.push_back(st.messages[real[i][j].back()]);
          real[i][j].pop_back();
        } else {
          --dummy[i][j];
        }
      }
      std::sort(piece.messages.begin(), piece.messages.end(), [](const Message& a, const Message& b) {
        return a.from < b.from;
      });
      out.supersteps.push_back(std::move(piece));
    }
  }
  return out;
}

}  // namespace switchpot
