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

#ifndef SWITCHPOT_TYPES_HPP_
#define SWITCHPOT_TYPES_HPP_

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace switchpot {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;
using ProcId = std::uint32_t;
using Port = std::uint32_t;       // 1-based
using EnvelopeId = std::uint32_t;  // 1-based, equal to the ein number of its first arc
using BigInt = boost::multiprecision::cpp_int;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

// log2 of a non-negative big integer; -infinity for zero.
double log2_big(const BigInt& x);

// True iff x is a power of two (x >= 1).
constexpr bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// floor(log2 x) for x >= 1.
constexpr std::uint32_t ilog2(std::uint64_t x) {
  std::uint32_t r = 0;
  while (x > 1) {
    x >>= 1;
    ++r;
  }
  return r;
}

}  // namespace switchpot

#endif  // SWITCHPOT_TYPES_HPP_
