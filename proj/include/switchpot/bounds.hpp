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

#ifndef SWITCHPOT_BOUNDS_HPP_
#define SWITCHPOT_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace switchpot {

// One evaluated bound. `value` is the headline number (clamped at 0 for
// lower bounds); `raw` is the unclamped expression. Extra named quantities
// (alternative forms, branch values, intermediate terms) go in `values`.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, double>> values;
  double value = 0;
  double raw = 0;
  bool upperBound = false;
  std::vector<std::string> assumptions;

  std::optional<double> get(const std::string& key) const;
  std::string format() const;  // human-readable, one item per line
};

// Lower bound on H from switching size N, log2 of the switching potential,
// max out-degree, p processors and at most U output arcs per processor.
BoundReport thm_main_lb(std::uint64_t N, double gammaLog2, std::uint32_t delta, std::uint32_t p, std::uint64_t U);

// min(q, n - q) / 2 for a DAG realizing all cyclic shifts.
BoundReport cyclic_shift_lb(std::uint64_t n, std::uint64_t q);

// (i0 o1 + i1 o0) / (2n) for a two-way split of inputs and outputs.
BoundReport cyclic_mixed_lb(std::uint64_t n, std::uint64_t i0, std::uint64_t i1, std::uint64_t o0, std::uint64_t o1);

// FFT DAG, q = max outputs evaluated by one processor. Values:
//   combined           first + shift term, as a single expression
//   combined_termwise  max(first, 0) + shift term
//   simplified         only when q <= n/2
// `value` is simplified when present, else combined_termwise.
BoundReport fft_lb(std::uint64_t n, std::uint32_t p, std::uint64_t q);

// Same shape for any sorting or permutation network on n lines.
BoundReport networks_lb(std::uint64_t n, std::uint32_t p, std::uint64_t q);

// Periodic balanced sorting network: simplified FFT value times ceil(log n / 2).
BoundReport pbsn_lb(std::uint64_t n, std::uint32_t p, std::uint64_t q);

// Dominator-based FFT bound when at most q = beta n log n / (p log((n/p) log n))
// inputs start on any processor: D^{-1}(nu/p) - q with D(k) = k log 2k.
BoundReport dominator_lb_eq2(std::uint64_t n, std::uint32_t p, double beta = 0.1);

// m * floor(n log n / (p 2m log 4m)) for local memory m.
BoundReport memory_dominator_lb(std::uint64_t n, std::uint32_t p, double m);

// FFT with recomputation, no processor evaluating more than n/eps outputs.
// Reports both case-split branches; `value` is the smaller one.
BoundReport fft_recomputation_lb(std::uint64_t n, std::uint32_t p, double eps, double beta = 0.1);

// ceil(log n / log(n/p)) * (n/p), the cost of the staged FFT schedule.
BoundReport valiant_ub(std::uint64_t n, std::uint32_t p);

// Parallel I/O lower bound gammaLog2 / (delta p log2 min(delta m, N/p));
// m = nullopt means unbounded local memory. Divided by `block` words per
// transfer.
BoundReport io_lb(double gammaLog2, std::uint32_t delta, std::uint32_t p, std::optional<double> m, std::uint64_t N,
                  std::uint32_t block = 1);

// k such that k log2(2k) = y (k >= 1/2), by bisection.
double inverse_improved_dominator(double y);

}  // namespace switchpot

#endif  // SWITCHPOT_BOUNDS_HPP_
