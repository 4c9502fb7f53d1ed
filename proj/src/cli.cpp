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

#include "switchpot/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "switchpot/bounds.hpp"
#include "switchpot/bsp_schedule.hpp"
#include "switchpot/cyclic_shift.hpp"
#include "switchpot/dominator.hpp"
#include "switchpot/envelope_game.hpp"
#include "switchpot/io_model.hpp"
#include "switchpot/json_io.hpp"
#include "switchpot/networks.hpp"
#include "switchpot/potential.hpp"

namespace switchpot {

namespace {

// A check the user asked for came out negative.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

SwitchingDag build_family(const std::string& family, std::uint32_t n) {
  if (family == "fft") return build_fft(n);
  if (family == "bmn") return build_bmn(n);
  if (family == "pbsn") return build_pbsn(n);
  if (family == "bitonic") return comparator_network_to_dag(build_bitonic(n));
  if (family == "benes") return comparator_network_to_dag(build_benes(n));
  throw CLI::ValidationError("--family", "unknown family '" + family + "'");
}

SwitchingDag load_dag(const std::string& path) { return parse_dag(read_file(path)); }

// Envelope schedule of degree 1 in every superstep, derived as needed.
BspSchedule degree_one_envelopes(const SwitchingDag& dag, const BspSchedule& sched) {
  BspSchedule env = sched.kind == PayloadKind::kValue ? evaluation_to_envelope_schedule(dag, sched) : sched;
  const ScheduleCheck c = validate_envelope_schedule(dag, env);
  if (!c.ok()) throw ValidationFailure(c.message);
  return decompose_degree_one(env);
}

std::vector<std::uint32_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--p-range", "expected a..b");
  const unsigned long a = std::stoul(s.substr(0, dots)), b = std::stoul(s.substr(dots + 2));
  if (a < 1 || a > b) throw CLI::ValidationError("--p-range", "need 1 <= a <= b");
  std::vector<std::uint32_t> out;
  for (unsigned long p = 1; p <= b; p *= 2) {
    if (p >= a) out.push_back(static_cast<std::uint32_t>(p));
  }
  if (out.empty()) throw CLI::ValidationError("--p-range", "no power of two in range");
  return out;
}

template <class F>
std::string cell(F&& f) {
  try {
    return fixed9(f());
  } catch (const std::exception&) {
    return "";
  }
}

double xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"switching DAG potentials, schedules and communication bounds", "switchpot"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    return s;
  };
  auto on = [&](CLI::App* s, std::function<void()> fn) { actions.emplace_back(s, std::move(fn)); };

  // Shared option storage; each leaf binds what it needs.
  std::string family, dagPath, filePath, outPath, rangeText, boundName;
  std::uint32_t n = 0, p = 1, k = 0, delta = 2, block = 1, threads = 1;
  std::uint64_t q = 0, N = 0, U = 0, budget = 0, seed = 1, count = 10000;
  std::uint64_t i0 = 0, i1 = 0, o0 = 0, o1 = 0;
  double gammaLog2 = 0, beta = 0.1, eps = 2, mReal = 0;
  std::optional<double> m;

  // dag
  CLI::App* dag = app.add_subcommand("dag", "build or validate switching DAGs");
  dag->require_subcommand(1);
  {
    CLI::App* s = leaf(dag, "build", "emit a DAG family as JSON");
    s->add_option("--family", family, "fft, bmn, pbsn, bitonic or benes")->required();
    s->add_option("--n", n, "width")->required();
    s->add_option("--out", outPath, "write to file instead of stdout");
    on(s, [&] {
      const std::string text = dump_dag(build_family(family, n));
      if (outPath.empty()) {
        out << text;
      } else {
        write_file(outPath, text);
      }
    });
  }
  {
    CLI::App* s = leaf(dag, "validate", "check the switching-DAG invariants");
    s->add_option("dag", dagPath)->required();
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      const ValidationReport r = validate(d);
      for (const Violation& v : r.violations) out << to_string(v.kind) << ": " << v.message << '\n';
      if (!r.ok()) throw ValidationFailure(r.first());
      out << "ok nodes=" << d.nodeCount() << " arcs=" << d.arcCount() << " n=" << d.inputCount()
          << " N=" << d.switchingSize() << '\n';
    });
  }

  // potential
  CLI::App* pot = app.add_subcommand("potential", "switching potential");
  pot->require_subcommand(1);
  {
    CLI::App* s = leaf(pot, "exact", "enumerate every switch configuration");
    s->add_option("dag", dagPath)->required();
    s->add_option("--budget", budget, "maximum configurations (default 2^24 or SWITCHPOT_ENUM_BUDGET)");
    s->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      PotentialOptions opt;
      opt.budget = budget ? budget : enumeration_budget_from_env();
      opt.threads = threads;
      const PotentialResult r = switching_potential_exact(d, opt);
      out << "gamma=" << r.gamma.str() << '\n';
      out << "gamma_log2=" << fixed9(r.log2Gamma()) << '\n';
      out << "configurations=" << r.configurations.str() << '\n';
    });
  }
  {
    CLI::App* s = leaf(pot, "analytic", "closed-form potential of a family");
    s->add_option("--family", family, "fft, bmn, sorting-net or permutation-net")->required();
    s->add_option("--n", n)->required();
    on(s, [&] {
      const AnalyticPotential a = switching_potential_analytic(parse_family(family), n);
      out << "gamma_log2" << (a.isLowerBound ? ">=" : "=") << fixed9(a.log2Gamma) << '\n';
    });
  }

  // game
  CLI::App* game = app.add_subcommand("game", "envelope game runs");
  game->require_subcommand(1);
  {
    CLI::App* s = leaf(game, "validate", "check a run against the game rules");
    s->add_option("dag", dagPath)->required();
    s->add_option("run", filePath)->required();
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      const EnvelopeRun run = parse_run(read_file(filePath));
      const RunCheck c = validate_run(d, run);
      if (!c.ok()) throw ValidationFailure(c.message);
      out << "ok rho=" << to_string(run_permutation(d, run)) << '\n';
    });
  }
  {
    CLI::App* s = leaf(game, "from-config", "derive a run from a switch configuration");
    s->add_option("dag", dagPath)->required();
    s->add_option("config", filePath)->required();
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      const SwitchConfiguration c = parse_configuration(read_file(filePath));
      check_configuration(d, c);
      out << dump_run(run_from_configuration(d, c));
    });
  }

  // shift
  CLI::App* shift = app.add_subcommand("shift", "cyclic shifts");
  shift->require_subcommand(1);
  {
    CLI::App* s = leaf(shift, "fft", "constructive shift paths on the FFT");
    s->add_option("--n", n)->required();
    s->add_option("--k", k)->required();
    on(s, [&] {
      const auto paths = fft_shift_paths(n, k);
      for (std::size_t w = 0; w < paths.size(); ++w) {
        out << w << ':';
        for (NodeId v : paths[w].nodes) out << ' ' << v;
        out << '\n';
      }
    });
  }
  {
    CLI::App* s = leaf(shift, "check", "search arc-disjoint paths for every shift");
    s->add_option("dag", dagPath)->required();
    s->add_option("--budget", budget, "search steps per shift (default 2^22 or SWITCHPOT_SEARCH_BUDGET)");
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      const ShiftCheck c = realizes_all_cyclic_shifts(d, budget ? budget : shift_budget_from_env());
      for (std::size_t j = 0; j < c.perShift.size(); ++j) out << "k=" << j << ' ' << to_string(c.perShift[j]) << '\n';
      out << "overall=" << to_string(c.overall()) << '\n';
      if (c.overall() == ShiftVerdict::kNotRealizable) throw ValidationFailure("some shift is not realizable");
    });
  }

  // schedule
  CLI::App* sch = app.add_subcommand("schedule", "BSP schedules");
  sch->require_subcommand(1);
  {
    CLI::App* s = leaf(sch, "valiant", "the blocked FFT schedule");
    s->add_option("--n", n)->required();
    s->add_option("--p", p)->required();
    on(s, [&] { out << dump_schedule(valiant_fft_schedule(n, p)); });
  }
  {
    CLI::App* s = leaf(sch, "check", "validate a schedule and report its cost");
    s->add_option("dag", dagPath)->required();
    s->add_option("schedule", filePath)->required();
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      const BspSchedule sc = parse_schedule(read_file(filePath));
      const ScheduleCheck c = validate_schedule(d, sc);
      if (!c.ok()) throw ValidationFailure(c.message);
      const CostReport r = communication_complexity(sc);
      out << "ok H=" << r.H << " W=" << r.W << " S=" << r.S << '\n';
    });
  }
  {
    CLI::App* s = leaf(sch, "decompose", "split supersteps into degree-1 pieces");
    s->add_option("schedule", filePath)->required();
    on(s, [&] { out << dump_schedule(decompose_degree_one(parse_schedule(read_file(filePath)))); });
  }
  {
    CLI::App* s = leaf(sch, "trace-eta", "redistribution potential at every boundary");
    s->add_option("dag", dagPath)->required();
    s->add_option("schedule", filePath)->required();
    s->add_option("--budget", budget, "maximum configurations (default 2^20)");
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      const BspSchedule env = degree_one_envelopes(d, parse_schedule(read_file(filePath)));
      const RedistributionTrace t = redistribution_trace(d, env, budget ? budget : std::uint64_t{1} << 20);
      for (std::size_t j = 0; j < t.eta.size(); ++j) out << "eta[" << j << "]=" << t.eta[j].str() << '\n';
      out << "H=" << t.H << " U=" << t.uFinal << '\n';
      std::vector<SandwichCheck> checks{check_superstep_growth(t), check_placements_upper(t, d.switchingSize())};
      PotentialOptions opt;
      opt.budget = budget ? budget : std::uint64_t{1} << 20;
      try {
        checks.push_back(check_final_placements_lower(switching_potential_exact(d, opt).gamma, t, d.switchingSize()));
      } catch (const EnumerationInfeasible&) {
        out << "lower: skipped (gamma not enumerable within budget)\n";
      }
      bool ok = true;
      for (const SandwichCheck& c : checks) {
        out << (c.ok ? "pass " : "FAIL ") << c.detail << '\n';
        ok = ok && c.ok;
      }
      if (!ok) throw ValidationFailure("redistribution check failed");
    });
  }

  // bounds
  CLI::App* bnd = app.add_subcommand("bounds", "evaluate a communication bound");
  bnd->require_subcommand(1);
  auto bound = [&](const std::string& name, const std::string& desc, std::function<BoundReport()> fn) {
    CLI::App* s = leaf(bnd, name, desc);
    on(s, [&out, fn] { out << fn().format(); });
    return s;
  };
  {
    CLI::App* s = bound("thm-main", "generic potential bound",
                        [&] { return thm_main_lb(N, gammaLog2, delta, p, U); });
    s->add_option("--N", N)->required();
    s->add_option("--gamma-log2", gammaLog2)->required();
    s->add_option("--delta", delta)->required();
    s->add_option("--p", p)->required();
    s->add_option("--U", U)->required();
  }
  {
    CLI::App* s = bound("cyclic", "cyclic-shift bound", [&] { return cyclic_shift_lb(n, q); });
    s->add_option("--n", n)->required();
    s->add_option("--q", q)->required();
  }
  {
    CLI::App* s = bound("cyclic-mixed", "mixed-placement shift bound",
                        [&] { return cyclic_mixed_lb(n, i0, i1, o0, o1); });
    s->add_option("--n", n)->required();
    s->add_option("--i0", i0)->required();
    s->add_option("--i1", i1)->required();
    s->add_option("--o0", o0)->required();
    s->add_option("--o1", o1)->required();
  }
  for (const char* name : {"fft", "networks", "pbsn"}) {
    const std::string nm = name;
    CLI::App* s = bound(nm, nm + " bound", [&, nm] {
      if (nm == "fft") return fft_lb(n, p, q);
      if (nm == "networks") return networks_lb(n, p, q);
      return pbsn_lb(n, p, q);
    });
    s->add_option("--n", n)->required();
    s->add_option("--p", p)->required();
    s->add_option("--q", q)->required();
  }
  {
    CLI::App* s = bound("dominator", "dominator bound with recomputation", [&] { return dominator_lb_eq2(n, p, beta); });
    s->add_option("--n", n)->required();
    s->add_option("--p", p)->required();
    s->add_option("--beta", beta);
  }
  {
    CLI::App* s = bound("memory", "bounded-memory dominator bound", [&] { return memory_dominator_lb(n, p, mReal); });
    s->add_option("--n", n)->required();
    s->add_option("--p", p)->required();
    s->add_option("--m", mReal)->required();
  }
  {
    CLI::App* s = bound("recomputation", "FFT bound with recomputation allowed",
                        [&] { return fft_recomputation_lb(n, p, eps, beta); });
    s->add_option("--n", n)->required();
    s->add_option("--p", p)->required();
    s->add_option("--eps", eps)->required();
    s->add_option("--beta", beta);
  }
  {
    CLI::App* s = bound("valiant", "cost of the blocked FFT schedule", [&] { return valiant_ub(n, p); });
    s->add_option("--n", n)->required();
    s->add_option("--p", p)->required();
  }

  // dominator
  CLI::App* dom = app.add_subcommand("dominator", "dominator sets");
  dom->require_subcommand(1);
  {
    CLI::App* s = leaf(dom, "dk", "largest set dominated by k nodes");
    s->add_option("dag", dagPath)->required();
    s->add_option("--k", k)->required();
    s->add_option("--budget", budget, "maximum subsets (default 10^7 or SWITCHPOT_SUBSET_BUDGET)");
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      const DominatorResult r = D_k_bruteforce(d, k, budget ? budget : subset_budget_from_env());
      out << "k=" << r.k << " D=" << r.Dk << " witness=";
      for (std::size_t j = 0; j < r.witness.size(); ++j) out << (j ? "," : "") << r.witness[j];
      out << "\nk_log2_2k=" << fixed9(r.boundImproved);
      if (k >= 2) out << " 2k_log2_k=" << fixed9(r.boundHK);
      out << "\nsubsets=" << r.subsetsVisited << '\n';
    });
  }

  // io
  CLI::App* io = app.add_subcommand("io", "parallel I/O model");
  io->require_subcommand(1);
  {
    CLI::App* s = leaf(io, "lb", "I/O lower bound");
    s->add_option("--gamma-log2", gammaLog2)->required();
    s->add_option("--delta", delta)->required();
    s->add_option("--p", p)->required();
    s->add_option("--m", m, "local memory words; omit for unbounded");
    s->add_option("--N", N)->required();
    s->add_option("--block", block, "words per transfer")->check(CLI::PositiveNumber);
    on(s, [&] { out << io_lb(gammaLog2, delta, p, m, N, block).format(); });
  }
  {
    CLI::App* s = leaf(io, "blocked-fft", "blocked FFT I/O schedule");
    s->add_option("--n", n)->required();
    s->add_option("--p", p)->required();
    s->add_option("--m", m, "local memory words; omit for unbounded");
    on(s, [&] {
      std::optional<std::uint64_t> mem;
      if (m) mem = static_cast<std::uint64_t>(*m);
      out << dump_io_schedule(blocked_fft_io_schedule(n, p, mem));
    });
  }
  {
    CLI::App* s = leaf(io, "check", "validate an I/O schedule");
    s->add_option("dag", dagPath)->required();
    s->add_option("schedule", filePath)->required();
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      const IoSchedule sc = parse_io_schedule(read_file(filePath));
      const IoCheck c = validate_io(d, sc);
      if (!c.ok()) throw ValidationFailure(c.message);
      out << "ok H=" << io_complexity(sc) << " steps=" << sc.steps.size() << '\n';
    });
  }
  {
    CLI::App* s = leaf(io, "trace-eta", "I/O redistribution potential");
    s->add_option("dag", dagPath)->required();
    s->add_option("schedule", filePath)->required();
    s->add_option("--budget", budget, "maximum configurations (default 2^20)");
    on(s, [&] {
      const SwitchingDag d = load_dag(dagPath);
      IoSchedule sc = parse_io_schedule(read_file(filePath));
      if (sc.kind == PayloadKind::kValue) sc = evaluation_to_envelope_io(d, sc);
      const IoTrace t = io_redistribution_trace(d, sc, budget ? budget : std::uint64_t{1} << 20);
      for (std::size_t j = 0; j < t.eta.size(); ++j) {
        out << "eta[" << j << "]=" << t.eta[j].str();
        if (j < t.kinds.size()) out << " next=" << to_string(t.kinds[j]);
        out << '\n';
      }
      bool ok = true;
      for (const SandwichCheck& c :
           {check_io_reads(t), check_io_writes(t), check_io_placements_upper(t, d.switchingSize())}) {
        out << (c.ok ? "pass " : "FAIL ") << c.detail << '\n';
        ok = ok && c.ok;
      }
      if (!ok) throw ValidationFailure("I/O redistribution check failed");
    });
  }

  // report
  CLI::App* rep = app.add_subcommand("report", "bound-versus-parameter tables");
  rep->require_subcommand(1);
  {
    CLI::App* s = leaf(rep, "sweep", "one CSV row per p");
    s->add_option("--family", family)->required()->check(CLI::IsMember({"fft"}));
    s->add_option("--n", n)->required();
    s->add_option("--p-range", rangeText, "a..b, powers of two")->required();
    s->add_option("--q", q, "nodes per processor (default n/p)");
    s->add_option("--m", m, "memory for the bounded-memory bound (default q)");
    s->add_option("--beta", beta);
    s->add_option("--csv", outPath, "write to file instead of stdout");
    on(s, [&] {
      if (!is_power_of_two(n) || n < 2) throw CLI::ValidationError("--n", "must be a power of two >= 2");
      std::ostringstream csv;
      csv << "n,p,q,lb_thm_main,lb_fft_simplified,lb_cyclic,lb_dominator_eq2,lb_memory,ub_valiant,measured_H\n";
      const std::uint64_t bigN = 2ull * n;
      const double gl = static_cast<double>(n) * (ilog2(n) - 1.0);
      for (std::uint32_t pp : parse_range(rangeText)) {
        const std::uint64_t qq = q ? q : std::max<std::uint64_t>(n / pp, 1);
        const double mm = m ? *m : static_cast<double>(qq);
        csv << n << ',' << pp << ',' << qq << ',';
        csv << cell([&] {
          const std::uint64_t u = std::clamp<std::uint64_t>(2 * qq, (bigN + pp - 1) / pp, bigN);
          return thm_main_lb(bigN, gl, 2, pp, u).value;
        }) << ',';
        csv << cell([&] { return fft_lb(n, pp, qq).get("simplified").value(); }) << ',';
        csv << cell([&] { return cyclic_shift_lb(n, qq).value; }) << ',';
        csv << cell([&] { return dominator_lb_eq2(n, pp, beta).value; }) << ',';
        csv << cell([&] { return memory_dominator_lb(n, pp, mm).value; }) << ',';
        csv << cell([&] { return valiant_ub(n, pp).value; }) << ',';
        try {
          csv << communication_complexity(valiant_fft_schedule(n, pp)).H;
        } catch (const std::exception&) {
        }
        csv << '\n';
      }
      if (outPath.empty()) {
        out << csv.str();
      } else {
        write_file(outPath, csv.str());
      }
    });
  }

  // selfcheck
  {
    CLI::App* s = app.add_subcommand("selfcheck", "seeded random check of x log x + y log y + 2x <= m log m");
    s->add_option("--seed", seed);
    s->add_option("--count", count);
    on(s, [&] {
      std::mt19937_64 rng(seed);
      std::uint64_t bad = 0;
      for (std::uint64_t t = 0; t < count; ++t) {
        const std::uint64_t mm = std::uniform_int_distribution<std::uint64_t>(0, 1 << 20)(rng);
        const std::uint64_t total = std::uniform_int_distribution<std::uint64_t>(0, mm)(rng);
        const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(0, total / 2)(rng);
        const double lhs = xlog2x(static_cast<double>(x)) + xlog2x(static_cast<double>(total - x)) + 2.0 * x;
        if (lhs > xlog2x(static_cast<double>(mm)) + 1e-9) ++bad;
      }
      out << "seed=" << seed << " count=" << count << " violations=" << bad << '\n';
      if (bad) throw ValidationFailure("inequality violated");
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  for (auto& [sub, fn] : actions) {
    if (!sub->parsed()) continue;
    try {
      fn();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const ValidationFailure& e) {
      err << "validation failed: " << e.what() << '\n';
      return kExitFailure;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitFailure;
    }
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace switchpot
