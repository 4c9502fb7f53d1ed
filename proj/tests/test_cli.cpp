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

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "switchpot/cli.hpp"
#include "switchpot/json_io.hpp"
#include "switchpot/networks.hpp"

using namespace switchpot;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "switchpot_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string save(const std::string& name, const std::string& text) {
  const std::string p = temp_path(name);
  write_file(p, text);
  return p;
}

}  // namespace

TEST_CASE("dag json round trips bit-exactly") {
  for (const SwitchingDag& d : {build_fft(8), build_pbsn(4), comparator_network_to_dag(build_bitonic(4))}) {
    const std::string text = dump_dag(d);
    const SwitchingDag back = parse_dag(text);
    CHECK(back == d);
    CHECK(dump_dag(back) == text);
  }
  CHECK_THROWS(parse_dag("{\"nodes\": []"));
  CHECK_THROWS(parse_dag("{\"nodes\": [], \"arcs\": []}"));
  std::string bad = dump_dag(build_fft(2));
  bad.replace(bad.find("\"N\": 4"), 6, "\"N\": 5");
  CHECK_THROWS(parse_dag(bad));
}

TEST_CASE("schedule, run and config json round trip") {
  const SwitchingDag d = build_fft(8);
  const BspSchedule s = valiant_fft_schedule(8, 2);
  CHECK(parse_schedule(dump_schedule(s)) == s);
  const IoSchedule io = blocked_fft_io_schedule(8, 2, 6);
  CHECK(parse_io_schedule(dump_io_schedule(io)) == io);
  const IoSchedule inf = blocked_fft_io_schedule(8, 2, std::nullopt);
  CHECK(parse_io_schedule(dump_io_schedule(inf)) == inf);
  const SwitchConfiguration c = configuration_from_index(d, 12345);
  CHECK(parse_configuration(dump_configuration(c)) == c);
  const EnvelopeRun r = run_from_configuration(d, c);
  CHECK(parse_run(dump_run(r)) == r);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"bounds", "fft", "--n", "8"}).code == kExitUsage);
  CHECK(run({"dag", "build", "--family", "tree", "--n", "4"}).code == kExitUsage);
  CHECK(run({"report", "sweep", "--family", "fft", "--n", "64", "--p-range", "9..3"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("dag build, validate and potential") {
  const Result built = run({"dag", "build", "--family", "fft", "--n", "4"});
  REQUIRE(built.code == kExitOk);
  CHECK(parse_dag(built.out) == build_fft(4));
  const std::string fft4 = save("fft4.dag", built.out);
  const Result v = run({"dag", "validate", fft4});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("N=8") != std::string::npos);
  const Result g = run({"potential", "exact", fft4});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("gamma=16\n") != std::string::npos);
  CHECK(g.out.find("gamma_log2=4.000000000") != std::string::npos);
  const Result tight = run({"potential", "exact", fft4, "--budget", "8"});
  CHECK(tight.code == kExitFailure);
  CHECK(tight.err.find("infeasible") != std::string::npos);
  CHECK(run({"potential", "analytic", "--family", "fft", "--n", "1024"}).out == "gamma_log2=9216.000000000\n");
  CHECK(run({"potential", "analytic", "--family", "sorting-net", "--n", "4"}).out.rfind("gamma_log2>=", 0) == 0);
}

TEST_CASE("invalid dag exits 1") {
  DagBuilder b;
  const NodeId in = b.addNode(NodeKind::kInput), x = b.addNode(NodeKind::kInternal);
  const NodeId o1 = b.addNode(NodeKind::kOutput), o2 = b.addNode(NodeKind::kOutput);
  b.addArc(in, x);
  b.addArc(x, o1);
  b.addArc(x, o2);
  const std::string path = save("bad.dag", dump_dag(std::move(b).build({in}, {o1, o2})));
  const Result r = run({"dag", "validate", path});
  CHECK(r.code == kExitFailure);
  CHECK(r.out.find("degree mismatch") != std::string::npos);
  CHECK(run({"dag", "validate", temp_path("missing.dag")}).code == kExitFailure);
}

TEST_CASE("game commands") {
  const std::string fft4 = save("fft4g.dag", dump_dag(build_fft(4)));
  const SwitchingDag d = build_fft(4);
  const std::string cfg =
      save("fig_a.cfg", dump_configuration(fixtures::figure_configuration(d, fixtures::kFigureA)));
  const Result r = run({"game", "from-config", fft4, cfg});
  REQUIRE(r.code == kExitOk);
  const std::string runPath = save("fig_a.run", r.out);
  const Result v = run({"game", "validate", fft4, runPath});
  CHECK(v.code == kExitOk);
  CHECK(v.out == "ok rho=(5,7,1,3,2,4,6,8)\n");
  EnvelopeRun broken = parse_run(r.out);
  broken.moves.pop_back();
  const Result bad = run({"game", "validate", fft4, save("broken.run", dump_run(broken))});
  CHECK(bad.code == kExitFailure);
  CHECK(bad.err.find("Rule 6") != std::string::npos);
}

TEST_CASE("shift commands") {
  const Result f = run({"shift", "fft", "--n", "8", "--k", "2"});
  CHECK(f.code == kExitOk);
  CHECK(f.out.find("3: 3 11 17 29\n") != std::string::npos);
  const std::string bit = save("bitonic4.dag", dump_dag(comparator_network_to_dag(build_bitonic(4))));
  const Result c = run({"shift", "check", bit});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("overall=realizable") != std::string::npos);
}

TEST_CASE("schedule commands") {
  const std::string fft = save("fft16.dag", dump_dag(build_fft(16)));
  const Result v = run({"schedule", "valiant", "--n", "16", "--p", "4"});
  REQUIRE(v.code == kExitOk);
  const std::string sched = save("v16.sched", v.out);
  const Result c = run({"schedule", "check", fft, sched});
  CHECK(c.code == kExitOk);
  CHECK(c.out.rfind("ok H=", 0) == 0);
  const Result dec = run({"schedule", "decompose", sched});
  REQUIRE(dec.code == kExitOk);
  CHECK(run({"schedule", "check", fft, save("v16d.sched", dec.out)}).code == kExitOk);
  BspSchedule broken = parse_schedule(v.out);
  broken.supersteps.back().work[0].push_back(broken.supersteps.front().work[0].front());
  CHECK(run({"schedule", "check", fft, save("bad.sched", dump_schedule(broken))}).code == kExitFailure);

  const std::string fft4 = save("fft4s.dag", dump_dag(build_fft(4)));
  const std::string s4 = save("v4.sched", dump_schedule(valiant_fft_schedule(4, 2)));
  const Result t = run({"schedule", "trace-eta", fft4, s4});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("eta[0]=1\n") != std::string::npos);
  CHECK(t.out.find("FAIL") == std::string::npos);
}

TEST_CASE("bounds commands") {
  const Result r = run({"bounds", "fft", "--n", "1024", "--p", "16", "--q", "64"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("simplified=10.2857142857") != std::string::npos);
  CHECK(run({"bounds", "valiant", "--n", "1024", "--p", "16"}).out.find("value=128\n") != std::string::npos);
  CHECK(run({"bounds", "fft", "--n", "12", "--p", "2", "--q", "3"}).code == kExitFailure);
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"bounds", "thm-main", "--N", "8", "--gamma-log2", "4", "--delta", "2", "--p", "2", "--U", "4"},
           {"bounds", "cyclic", "--n", "8", "--q", "4"},
           {"bounds", "cyclic-mixed", "--n", "8", "--i0", "4", "--i1", "4", "--o0", "2", "--o1", "6"},
           {"bounds", "networks", "--n", "1024", "--p", "16", "--q", "64"},
           {"bounds", "pbsn", "--n", "1024", "--p", "16", "--q", "64"},
           {"bounds", "dominator", "--n", "1024", "--p", "16"},
           {"bounds", "memory", "--n", "1024", "--p", "16", "--m", "1"},
           {"bounds", "recomputation", "--n", "1024", "--p", "16", "--eps", "2"},
           {"io", "lb", "--gamma-log2", "9216", "--delta", "2", "--p", "1", "--m", "32", "--N", "2048"}}) {
    CHECK(run(args).code == kExitOk);
  }
  CHECK(run({"io", "lb", "--gamma-log2", "9216", "--delta", "2", "--p", "1", "--m", "32", "--N", "2048"})
            .out.find("value=768\n") != std::string::npos);
}

TEST_CASE("dominator command") {
  const std::string fft8 = save("fft8.dag", dump_dag(build_fft(8)));
  const Result r = run({"dominator", "dk", fft8, "--k", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("k=2 D=4 ", 0) == 0);
  CHECK(run({"dominator", "dk", fft8, "--k", "6", "--budget", "10"}).code == kExitFailure);
}

TEST_CASE("io commands") {
  const std::string fft8 = save("fft8io.dag", dump_dag(build_fft(8)));
  const Result s = run({"io", "blocked-fft", "--n", "8", "--p", "1", "--m", "4"});
  REQUIRE(s.code == kExitOk);
  const std::string path = save("b8.io", s.out);
  const Result c = run({"io", "check", fft8, path});
  CHECK(c.code == kExitOk);
  const std::string fft4 = save("fft4io.dag", dump_dag(build_fft(4)));
  const std::string p4 = save("b4.io", dump_io_schedule(blocked_fft_io_schedule(4, 1, 4)));
  const Result t = run({"io", "trace-eta", fft4, p4});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("FAIL") == std::string::npos);
}

TEST_CASE("report sweep") {
  const std::vector<std::string> args{"report", "sweep", "--family", "fft", "--n", "64", "--p-range", "2..32"};
  const Result a = run(args), b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,p,q,lb_thm_main,lb_fft_simplified,lb_cyclic,lb_dominator_eq2,lb_memory,ub_valiant,measured_H");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 9);
  }
  CHECK(rows == 5);
  // p=2, q=32: simplified 64*5/(16*6), cyclic 32/2, valiant 2 stages * 32.
  CHECK(a.out.find("\n64,2,32,0.000000000,3.333333333,16.000000000,") != std::string::npos);
  CHECK(a.out.find(",64.000000000,") != std::string::npos);
  const std::string csv = temp_path("sweep.csv");
  CHECK(run({"report", "sweep", "--family", "fft", "--n", "64", "--p-range", "2..32", "--csv", csv}).code == kExitOk);
  CHECK(read_file(csv) == a.out);
}

TEST_CASE("selfcheck") {
  const Result r = run({"selfcheck", "--seed", "5", "--count", "1000"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "seed=5 count=1000 violations=0\n");
}
