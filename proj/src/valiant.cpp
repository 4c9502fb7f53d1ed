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

#include <stdexcept>
#include <string>

#include "switchpot/bsp_schedule.hpp"
#include "switchpot/networks.hpp"

namespace switchpot {

BspSchedule valiant_fft_schedule(std::uint32_t n, std::uint32_t p) {
  if (n < 2 || !is_power_of_two(n) || p < 1 || !is_power_of_two(p) || p > n / 2) {
    throw std::invalid_argument("valiant_fft_schedule: need n, p powers of two with 1 <= p <= n/2 (n=" +
                                std::to_string(n) + ", p=" + std::to_string(p) + ")");
  }
  const std::uint32_t logn = ilog2(n), logp = ilog2(p);
  const std::uint32_t b = logn - logp;
  const std::uint32_t stages = (logn + b - 1) / b;

  // Processor of row w while levels [lo, hi) are being crossed.
  auto owner = [&](std::uint32_t w, std::uint32_t lo, std::uint32_t hi) -> ProcId {
    const std::uint32_t rest = (w & ((1u << lo) - 1)) | ((w >> hi) << lo);
    const std::uint32_t restBits = logn - (hi - lo);
    return rest >> (restBits - logp);
  };

  BspSchedule s;
  s.kind = PayloadKind::kValue;
  s.p = p;
  for (std::uint32_t w = 0; w < n; ++w) s.inputPlacement[level_node(n, w, 0)] = owner(w, 0, std::min(b, logn));
  for (std::uint32_t t = 0; t < stages; ++t) {
    const std::uint32_t lo = t * b, hi = std::min(lo + b, logn);
    Superstep& st = s.supersteps.emplace_back();
    st.work.resize(p);
    for (std::uint32_t l = lo + 1; l <= hi; ++l) {
      for (std::uint32_t w = 0; w < n; ++w) st.work[owner(w, lo, hi)].push_back(level_node(n, w, l));
    }
    if (t + 1 == stages) break;
    const std::uint32_t nlo = hi, nhi = std::min(hi + b, logn);
    for (std::uint32_t w = 0; w < n; ++w) {
      const ProcId from = owner(w, lo, hi), to = owner(w, nlo, nhi);
      if (from != to) st.messages.push_back({from, to, level_node(n, w, hi)});
    }
  }
  return s;
}

}  // namespace switchpot
