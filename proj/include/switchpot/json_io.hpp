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

#ifndef SWITCHPOT_JSON_IO_HPP_
#define SWITCHPOT_JSON_IO_HPP_

#include <string>

#include "switchpot/bsp_schedule.hpp"
#include "switchpot/dag.hpp"
#include "switchpot/envelope_game.hpp"
#include "switchpot/io_model.hpp"
#include "switchpot/potential.hpp"

// Text formats for DAGs, runs, configurations and schedules. Every dump_*
// emits canonical JSON (fixed key order, two-space indent, trailing
// newline), so dump(parse(dump(x))) == dump(x). Parse errors throw
// std::runtime_error naming the offending field.

namespace switchpot {

std::string dump_dag(const SwitchingDag& dag);
SwitchingDag parse_dag(const std::string& text);

std::string dump_run(const EnvelopeRun& run);
EnvelopeRun parse_run(const std::string& text);

// Ports in the file are 1-based, like everywhere else outside the map.
std::string dump_configuration(const SwitchConfiguration& config);
SwitchConfiguration parse_configuration(const std::string& text);

std::string dump_schedule(const BspSchedule& sched);
BspSchedule parse_schedule(const std::string& text);

std::string dump_io_schedule(const IoSchedule& sched);
IoSchedule parse_io_schedule(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace switchpot

#endif  // SWITCHPOT_JSON_IO_HPP_
