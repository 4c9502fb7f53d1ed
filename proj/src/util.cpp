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

#include <cmath>
#include <limits>

#include "switchpot/types.hpp"

namespace switchpot {

double log2_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t msb = boost::multiprecision::msb(x);
  if (msb < 60) return std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
  // Keep the top 60 bits; the rest only perturbs the 18th significant digit.
  const std::size_t shift = msb - 59;
  const BigInt top = x >> shift;
  return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift);
}

}  // namespace switchpot
