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

#include "switchpot/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace switchpot {

using Json = nlohmann::ordered_json;

namespace {

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::runtime_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("bad field '") + key + "': " + e.what());
  }
}

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::kInput:
      return "input";
    case NodeKind::kInternal:
      return "internal";
    case NodeKind::kOutput:
      return "output";
  }
  return "?";
}

NodeKind parse_kind(const std::string& s) {
  if (s == "input") return NodeKind::kInput;
  if (s == "internal") return NodeKind::kInternal;
  if (s == "output") return NodeKind::kOutput;
  throw std::runtime_error("unknown node kind '" + s + "'");
}

PayloadKind parse_payload(const std::string& s) {
  if (s == "value") return PayloadKind::kValue;
  if (s == "envelope") return PayloadKind::kEnvelope;
  throw std::runtime_error("unknown schedule kind '" + s + "'");
}

const char* payload_name(PayloadKind k) { return k == PayloadKind::kValue ? "value" : "envelope"; }

IoStepKind parse_step_kind(const std::string& s) {
  if (s == "local") return IoStepKind::kLocal;
  if (s == "read") return IoStepKind::kRead;
  if (s == "write") return IoStepKind::kWrite;
  throw std::runtime_error("unknown step kind '" + s + "'");
}

IoOpType parse_op(const std::string& s) {
  for (IoOpType t : {IoOpType::kIdle, IoOpType::kCompute, IoOpType::kEvict, IoOpType::kRead, IoOpType::kWrite}) {
    if (s == to_string(t)) return t;
  }
  throw std::runtime_error("unknown op '" + s + "'");
}

}  // namespace

std::string dump_dag(const SwitchingDag& dag) {
  Json j;
  j["n"] = dag.inputCount();
  j["N"] = dag.switchingSize();
  Json nodes = Json::array();
  for (const Node& v : dag.nodes()) nodes.push_back({{"id", v.id}, {"kind", kind_name(v.kind)}});
  j["nodes"] = std::move(nodes);
  Json arcs = Json::array();
  for (const Arc& a : dag.arcs()) {
    arcs.push_back({{"id", a.id}, {"src", a.src}, {"srcPort", a.srcPort}, {"dst", a.dst}, {"dstPort", a.dstPort}});
  }
  j["arcs"] = std::move(arcs);
  j["inputOrder"] = dag.inputOrder();
  j["outputOrder"] = dag.outputOrder();
  if (!dag.blocks().empty()) {
    Json blocks = Json::array();
    for (const Block& b : dag.blocks()) blocks.push_back({{"nodes", b.nodes}, {"inputs", b.inputs}, {"outputs", b.outputs}});
    j["blocks"] = std::move(blocks);
  }
  return emit(j);
}

SwitchingDag parse_dag(const std::string& text) {
  const Json j = parse_text(text);
  std::vector<Node> nodes;
  for (const Json& v : field(j, "nodes")) nodes.push_back({get<NodeId>(v, "id"), parse_kind(get<std::string>(v, "kind"))});
  std::vector<Arc> arcs;
  for (const Json& a : field(j, "arcs")) {
    arcs.push_back({get<ArcId>(a, "id"), get<NodeId>(a, "src"), get<Port>(a, "srcPort"), get<NodeId>(a, "dst"),
                    get<Port>(a, "dstPort")});
  }
  std::vector<Block> blocks;
  if (j.contains("blocks")) {
    for (const Json& b : j.at("blocks")) {
      blocks.push_back({get<std::vector<NodeId>>(b, "nodes"), get<std::vector<NodeId>>(b, "inputs"),
                        get<std::vector<NodeId>>(b, "outputs")});
    }
  }
  SwitchingDag dag(std::move(nodes), std::move(arcs), get<std::vector<NodeId>>(j, "inputOrder"),
                   get<std::vector<NodeId>>(j, "outputOrder"), std::move(blocks));
  if (j.contains("n") && get<std::uint32_t>(j, "n") != dag.inputCount()) {
    throw std::runtime_error("field 'n' disagrees with inputOrder");
  }
  if (j.contains("N") && get<std::uint32_t>(j, "N") != dag.switchingSize()) {
    throw std::runtime_error("field 'N' disagrees with the input out-degrees");
  }
  return dag;
}

std::string dump_run(const EnvelopeRun& run) {
  Json j;
  j["initialPlacement"] = run.initialPlacement;
  Json moves = Json::array();
  for (const Move& m : run.moves) moves.push_back({{"arc", m.arc}, {"envelope", m.envelope}});
  j["moves"] = std::move(moves);
  return emit(j);
}

EnvelopeRun parse_run(const std::string& text) {
  const Json j = parse_text(text);
  EnvelopeRun run;
  run.initialPlacement = get<std::vector<NodeId>>(j, "initialPlacement");
  for (const Json& m : field(j, "moves")) run.moves.push_back({get<ArcId>(m, "arc"), get<EnvelopeId>(m, "envelope")});
  return run;
}

std::string dump_configuration(const SwitchConfiguration& config) {
  Json rows = Json::array();
  for (const auto& row : config.map) {
    Json r = Json::array();
    for (std::uint32_t port : row) r.push_back(port + 1);
    rows.push_back(std::move(r));
  }
  Json j;
  j["map"] = std::move(rows);
  return emit(j);
}

SwitchConfiguration parse_configuration(const std::string& text) {
  const Json j = parse_text(text);
  SwitchConfiguration c;
  for (auto row : get<std::vector<std::vector<std::uint32_t>>>(j, "map")) {
    for (auto& port : row) {
      if (port == 0) throw std::runtime_error("configuration ports are 1-based");
      --port;
    }
    c.map.push_back(std::move(row));
  }
  return c;
}

std::string dump_schedule(const BspSchedule& sched) {
  Json j;
  j["kind"] = payload_name(sched.kind);
  j["p"] = sched.p;
  Json placement = Json::array();
  for (auto [v, i] : sched.inputPlacement) placement.push_back({{"node", v}, {"proc", i}});
  j["inputPlacement"] = std::move(placement);
  Json steps = Json::array();
  for (const Superstep& s : sched.supersteps) {
    Json msgs = Json::array();
    for (const Message& m : s.messages) msgs.push_back({{"from", m.from}, {"to", m.to}, {"payload", m.payload}});
    steps.push_back({{"work", s.work}, {"messages", std::move(msgs)}});
  }
  j["supersteps"] = std::move(steps);
  return emit(j);
}

BspSchedule parse_schedule(const std::string& text) {
  const Json j = parse_text(text);
  BspSchedule s;
  s.kind = parse_payload(get<std::string>(j, "kind"));
  s.p = get<std::uint32_t>(j, "p");
  for (const Json& e : field(j, "inputPlacement")) {
    if (!s.inputPlacement.emplace(get<NodeId>(e, "node"), get<ProcId>(e, "proc")).second) {
      throw std::runtime_error("input placed twice");
    }
  }
  for (const Json& st : field(j, "supersteps")) {
    Superstep step;
    step.work = get<std::vector<std::vector<NodeId>>>(st, "work");
    for (const Json& m : field(st, "messages")) {
      step.messages.push_back({get<ProcId>(m, "from"), get<ProcId>(m, "to"), get<std::uint32_t>(m, "payload")});
    }
    s.supersteps.push_back(std::move(step));
  }
  return s;
}

std::string dump_io_schedule(const IoSchedule& sched) {
  Json j;
  j["kind"] = payload_name(sched.kind);
  j["p"] = sched.p;
  j["memory"] = sched.memory ? Json(*sched.memory) : Json(nullptr);
  auto layout = [](const std::map<std::uint32_t, std::uint64_t>& m) {
    Json out = Json::array();
    for (auto [item, x] : m) out.push_back({{"item", item}, {"address", x}});
    return out;
  };
  j["initialLayout"] = layout(sched.initialLayout);
  j["finalLayout"] = layout(sched.finalLayout);
  Json steps = Json::array();
  for (const IoStep& st : sched.steps) {
    Json ops = Json::array();
    for (const IoOp& op : st.ops) {
      Json o = {{"op", to_string(op.type)}};
      if (op.type != IoOpType::kIdle) o["item"] = op.item;
      if (op.type == IoOpType::kRead || op.type == IoOpType::kWrite) o["address"] = op.address;
      ops.push_back(std::move(o));
    }
    steps.push_back({{"kind", to_string(st.kind)}, {"ops", std::move(ops)}});
  }
  j["steps"] = std::move(steps);
  return emit(j);
}

IoSchedule parse_io_schedule(const std::string& text) {
  const Json j = parse_text(text);
  IoSchedule s;
  s.kind = parse_payload(get<std::string>(j, "kind"));
  s.p = get<std::uint32_t>(j, "p");
  if (j.contains("memory") && !j.at("memory").is_null()) s.memory = get<std::uint64_t>(j, "memory");
  auto layout = [&](const char* key, std::map<std::uint32_t, std::uint64_t>& out) {
    for (const Json& e : field(j, key)) {
      if (!out.emplace(get<std::uint32_t>(e, "item"), get<std::uint64_t>(e, "address")).second) {
        throw std::runtime_error(std::string("item listed twice in '") + key + "'");
      }
    }
  };
  layout("initialLayout", s.initialLayout);
  layout("finalLayout", s.finalLayout);
  for (const Json& st : field(j, "steps")) {
    IoStep step;
    step.kind = parse_step_kind(get<std::string>(st, "kind"));
    for (const Json& o : field(st, "ops")) {
      IoOp op;
      op.type = parse_op(get<std::string>(o, "op"));
      if (o.contains("item")) op.item = get<std::uint32_t>(o, "item");
      if (o.contains("address")) op.address = get<std::uint64_t>(o, "address");
      step.ops.push_back(op);
    }
    s.steps.push_back(std::move(step));
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write '" + path + "'");
}

}  // namespace switchpot
