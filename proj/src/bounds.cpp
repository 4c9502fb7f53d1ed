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

#include "switchpot/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "switchpot/potential.hpp"
#include "switchpot/types.hpp"

namespace switchpot {
namespace {

// x * e <= y, with e as a 16-digit rational.
bool times_e_at_most(std::uint64_t x, std::uint64_t y) {
  using u128 = unsigned __int128;
  return static_cast<u128>(x) * 2718281828459045ull <= static_cast<u128>(y) * 1000000000000000ull;
}

double d(std::uint64_t x) { return static_cast<double>(x); }

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw std::invalid_argument(name + ": " + what);
}

BoundReport make(std::string name, std::vector<std::pair<std::string, double>> params) {
  BoundReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  return r;
}

void set_lower(BoundReport& r, double raw) {
  r.raw = raw;
  r.value = std::max(raw, 0.0);
}

}  // namespace

std::optional<double> BoundReport::get(const std::string& key) const {
  for (const auto* list : {&values, &params}) {
    for (const auto& [k, v] : *list) {
      if (k == key) return v;
    }
  }
  return std::nullopt;
}

std::string BoundReport::format() const {
  std::ostringstream os;
  os.precision(12);
  os << "bound=" << name << '\n';
  for (const auto& [k, v] : params) os << "param." << k << '=' << v << '\n';
  for (const auto& [k, v] : values) os << k << '=' << v << '\n';
  os << "raw=" << raw << '\n';
  os << "value=" << value << '\n';
  os << "kind=" << (upperBound ? "upper" : "lower") << '\n';
  for (const auto& a : assumptions) os << "assumes: " << a << '\n';
  return os.str();
}

BoundReport thm_main_lb(std::uint64_t N, double gammaLog2, std::uint32_t delta, std::uint32_t p, std::uint64_t U) {
  const std::string name = "thm_main";
  require(N >= 1 && p >= 1 && delta >= 1, name, "N, p and delta must be positive");
  require(U <= N && U * p >= N, name, "need N/p <= U <= N");
  require(gammaLog2 >= 0 && gammaLog2 <= log2_factorial(N) + 1e-9, name, "need 0 <= log2 gamma <= log2 N!");
  BoundReport r = make(name, {{"N", d(N)}, {"gammaLog2", gammaLog2}, {"delta", d(delta)}, {"p", d(p)}, {"U", d(U)}});
  const double numerator = gammaLog2 - d(N) / d(U) * log2_factorial(U);
  r.values.emplace_back("numerator", numerator);
  double raw;
  if (times_e_at_most(p, N)) {
    raw = numerator / (d(delta) * d(p) * std::log2(d(N) / d(p)));
    r.values.emplace_back("branch_p_le_N_over_e", 1);
  } else {
    raw = std::numbers::e * numerator / (d(delta) * d(N) * std::numbers::log2e);
    r.values.emplace_back("branch_p_le_N_over_e", 0);
  }
  set_lower(r, raw);
  r.assumptions = {"no recomputation", "each processor holds at most U envelopes at the end"};
  return r;
}

BoundReport cyclic_shift_lb(std::uint64_t n, std::uint64_t q) {
  require(q <= n, "cyclic_shift", "need 0 <= q <= n");
  BoundReport r = make("cyclic_shift", {{"n", d(n)}, {"q", d(q)}});
  set_lower(r, d(std::min(q, n - q)) / 2);
  r.assumptions = {"p >= 2", "each input initially available to exactly one processor",
                   "the DAG realizes all cyclic shifts", "some processor evaluates exactly q outputs"};
  return r;
}

BoundReport cyclic_mixed_lb(std::uint64_t n, std::uint64_t i0, std::uint64_t i1, std::uint64_t o0, std::uint64_t o1) {
  require(n >= 1 && i0 + i1 == n && o0 + o1 == n, "cyclic_mixed", "need i0 + i1 = o0 + o1 = n");
  BoundReport r = make("cyclic_mixed", {{"n", d(n)}, {"i0", d(i0)}, {"i1", d(i1)}, {"o0", d(o0)}, {"o1", d(o1)}});
  set_lower(r, (d(i0) * d(o1) + d(i1) * d(o0)) / (2 * d(n)));
  r.assumptions = {"each input initially available to exactly one side", "the DAG realizes all cyclic shifts"};
  return r;
}

namespace {

// Shared shape of the FFT and network bounds: first term uses
// log2(n / (c q^2)), simplified uses log2(n / c') with c' = c/4 or e.
BoundReport staged_network_lb(const std::string& name, std::uint64_t n, std::uint32_t p, std::uint64_t q,
                              double qConst, double simplifiedConst) {
  require(n >= 2 && is_power_of_two(n), name, "n must be a power of two >= 2");
  require(p >= 1 && times_e_at_most(p, 2 * n), name, "need 1 <= p <= 2n/e");
  require(q >= 1 && q <= n, name, "need 1 <= q <= n");
  BoundReport r = make(name, {{"n", d(n)}, {"p", d(p)}, {"q", d(q)}});
  const double denom = 4 * d(p) * std::log2(2 * d(n) / d(p));
  const double first = d(n) * std::log2(d(n) / (qConst * d(q) * d(q))) / denom;
  const double shift = d(std::min(q, n - q)) / 4;
  r.values.emplace_back("first_term", first);
  r.values.emplace_back("shift_term", shift);
  r.values.emplace_back("combined", std::max(first + shift, 0.0));
  r.values.emplace_back("combined_termwise", std::max(first, 0.0) + shift);
  if (2 * q <= n) {
    const double simplified = d(n) * std::log2(d(n) / simplifiedConst) / (2 * denom);
    r.values.emplace_back("simplified", simplified);
    r.raw = simplified;
    r.value = std::max(simplified, 0.0);
  } else {
    r.raw = first + shift;
    r.value = std::max(first, 0.0) + shift;
  }
  r.assumptions = {"no recomputation", "each input initially available to exactly one processor",
                   "q = maximum number of outputs evaluated by one processor"};
  return r;
}

}  // namespace

BoundReport fft_lb(std::uint64_t n, std::uint32_t p, std::uint64_t q) {
  return staged_network_lb("fft", n, p, q, 8.0, 2.0);
}

BoundReport networks_lb(std::uint64_t n, std::uint32_t p, std::uint64_t q) {
  return staged_network_lb("networks", n, p, q, 4.0 * std::numbers::e, std::numbers::e);
}

BoundReport pbsn_lb(std::uint64_t n, std::uint32_t p, std::uint64_t q) {
  require(2 * q <= n, "pbsn", "need q <= n/2");
  const BoundReport fft = fft_lb(n, p, q);
  const std::uint32_t blocks = (ilog2(n) + 1) / 2;
  BoundReport r = make("pbsn", fft.params);
  r.values.emplace_back("fft_simplified", *fft.get("simplified"));
  r.values.emplace_back("disjoint_blocks", blocks);
  set_lower(r, *fft.get("simplified") * blocks);
  r.assumptions = fft.assumptions;
  return r;
}

double inverse_improved_dominator(double y) {
  if (y <= 0) return 0.5;
  double lo = 0.5, hi = std::max(1.0, y);
  while (hi * std::log2(2 * hi) < y) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    const double mid = (lo + hi) / 2;
    (mid * std::log2(2 * mid) < y ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

BoundReport dominator_lb_eq2(std::uint64_t n, std::uint32_t p, double beta) {
  const std::string name = "dominator_eq2";
  require(n >= 2 && is_power_of_two(n), name, "n must be a power of two >= 2");
  require(p >= 1 && p < n, name, "need n/p > 1");
  require(beta >= 0, name, "beta must be non-negative");
  BoundReport r = make(name, {{"n", d(n)}, {"p", d(p)}, {"beta", beta}});
  const double logn = std::log2(d(n));
  const double scale = d(n) * logn / (d(p) * std::log2(d(n) / d(p) * logn));
  const double q = beta * scale;
  const double nu = d(n) * std::log2(2 * d(n));
  const double dinv = inverse_improved_dominator(nu / d(p));
  r.values.emplace_back("q", q);
  r.values.emplace_back("nu", nu);
  r.values.emplace_back("dominator_inverse", dinv);
  r.values.emplace_back("scale", scale);
  set_lower(r, dinv - q);
  r.values.emplace_back("c", r.value / scale);
  r.assumptions = {"at most q inputs initially available to any processor", "recomputation allowed",
                   "D(k) <= k log2(2k) for the FFT DAG"};
  return r;
}

BoundReport memory_dominator_lb(std::uint64_t n, std::uint32_t p, double m) {
  const std::string name = "memory_dominator";
  require(n >= 2 && is_power_of_two(n), name, "n must be a power of two >= 2");
  require(p >= 1, name, "p must be positive");
  require(m >= 1, name, "need m >= 1");
  BoundReport r = make(name, {{"n", d(n)}, {"p", d(p)}, {"m", m}});
  const double arg = d(n) * std::log2(d(n)) / (d(p) * 2 * m * std::log2(4 * m));
  r.values.emplace_back("floor_argument", arg);
  set_lower(r, m * std::floor(arg));
  r.assumptions = {"local memory of m words per processor", "recomputation allowed"};
  return r;
}

BoundReport fft_recomputation_lb(std::uint64_t n, std::uint32_t p, double eps, double beta) {
  const std::string name = "fft_recomputation";
  require(p >= 2, name, "need p >= 2");
  require(eps > 1, name, "need eps > 1");
  const BoundReport dom = dominator_lb_eq2(n, p, beta);
  BoundReport r = make(name, {{"n", d(n)}, {"p", d(p)}, {"eps", eps}, {"beta", beta}});
  const double logn = std::log2(d(n));
  const double cyclic = beta * d(n) * logn * (eps - 1) / (2 * d(p) * std::log2(d(n) / d(p) * logn) * eps);
  r.values.emplace_back("dominator_branch", dom.value);
  r.values.emplace_back("cyclic_branch", cyclic);
  set_lower(r, std::min(dom.value, cyclic));
  r.assumptions = {"recomputation allowed", "each input initially available to exactly one processor",
                   "no processor evaluates more than n/eps outputs"};
  return r;
}

BoundReport valiant_ub(std::uint64_t n, std::uint32_t p) {
  const std::string name = "valiant";
  require(n >= 2 && is_power_of_two(n), name, "n must be a power of two >= 2");
  require(p >= 1 && is_power_of_two(p) && 2 * static_cast<std::uint64_t>(p) <= n, name,
          "p must be a power of two with p <= n/2");
  BoundReport r = make(name, {{"n", d(n)}, {"p", d(p)}});
  const std::uint32_t logn = ilog2(n), b = logn - ilog2(p);
  const std::uint32_t stages = (logn + b - 1) / b;
  r.values.emplace_back("supersteps", stages);
  r.values.emplace_back("degree", d(n / p));
  r.raw = r.value = d(stages) * d(n / p);
  r.upperBound = true;
  r.assumptions = {"block input placement (n/p consecutive inputs per processor)"};
  return r;
}

BoundReport io_lb(double gammaLog2, std::uint32_t delta, std::uint32_t p, std::optional<double> m, std::uint64_t N,
                  std::uint32_t block) {
  const std::string name = "io";
  require(gammaLog2 >= 0 && delta >= 1 && p >= 1 && N >= 1 && block >= 1, name, "parameters must be positive");
  require(!m || *m > 0, name, "m must be positive");
  const double share = d(N) / d(p);
  const double cap = m ? std::min(d(delta) * *m, share) : share;
  require(cap > 1, name, "min(delta m, N/p) must exceed 1");
  BoundReport r = make(name, {{"gammaLog2", gammaLog2}, {"delta", d(delta)}, {"p", d(p)},
                              {"m", m ? *m : INFINITY}, {"N", d(N)}, {"block", d(block)}});
  r.values.emplace_back("log2_min", std::log2(cap));
  set_lower(r, gammaLog2 / (d(delta) * d(p) * std::log2(cap)) / d(block));
  r.assumptions = {"no recomputation", "inputs start and outputs end in shared memory"};
  return r;
}

}  // namespace switchpot
