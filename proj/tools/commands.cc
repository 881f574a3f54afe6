// Copyright 2026 The Authors.
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


#include "commands.h"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbfe/error.h"
#include "sbfe/expectations.h"
#include "sbfe/export.h"
#include "sbfe/generators.h"
#include "sbfe/inside_out.h"
#include "sbfe/instance_json.h"
#include "sbfe/mbt_alg.h"
#include "sbfe/monte_carlo.h"
#include "sbfe/opt1.h"
#include "sbfe/oracles.h"
#include "sbfe/pruning.h"
#include "sbfe/rational.h"
#include "sbfe/steepest_ascent.h"

namespace sbfe {
namespace {

void Emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteFile(path, text);
  }
}

Instance LoadValid(const std::string& path) {
  Instance inst = LoadInstance(path);
  CheckValid(inst);
  return inst;
}

Target ParseTarget(const std::string& s) {
  if (s == "zero") return Target::kZero;
  if (s == "one") return Target::kOne;
  if (s == "any") return Target::kAny;
  throw Error(ErrorCode::kInvalidArgument, "unknown target " + s);
}

const ClassSpec& PickClass(const Instance& inst, int cls) {
  if (cls < 0 || cls >= inst.num_classes()) {
    throw Error(ErrorCode::kInvalidArgument,
                "class index out of range: " + std::to_string(cls));
  }
  return inst.class_spec(cls);
}

std::string Row(std::initializer_list<std::string> cells) {
  std::string out;
  for (const std::string& c : cells) {
    if (!out.empty()) out += ",";
    out += c;
  }
  return out + "\n";
}

std::string Num(double x) { return FormatDouble(x); }

std::string RationalString(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

// ---- gen ----

struct GenArgs {
  std::string family = "random";
  double eps = 0.1;
  int m = 0;
  int max_classes = 0;
  std::string base;
  int extra = 10;
  double p_near = 0.999;
  int n = 6;
  int d = 1;
  uint64_t seed = 1;
  double lo = 0.05;
  double hi = 0.95;
  std::string out;
};

Instance Generate(const GenArgs& a) {
  if (a.family == "fig2") return Fig2Instance(a.eps, a.max_classes);
  if (a.family == "fig3") return Fig3Instance(a.eps);
  if (a.family == "appA1") {
    return a.m > 0 ? PruneGapInstanceForM(a.m) : PruneGapInstance(a.eps);
  }
  if (a.family == "incr-counter") return IncreasingCounterInstance(a.eps);
  if (a.family == "decr-counter") {
    if (a.base.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "decr-counter needs --base");
    }
    return DecreasingCounterInstance(LoadValid(a.base), a.extra, a.p_near);
  }
  if (a.family == "random") {
    return RandomInstance(a.n, a.d, a.seed, a.lo, a.hi);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family " + a.family);
}

// ---- eval ----

struct EvalArgs {
  std::string instance;
  std::string algo = "alg";
  int trials = 1000;
  uint64_t seed = 1;
  double budget = -1.0;
  int cls = 0;
  bool exact = false;
  bool faithful = false;
  bool charge_reused = false;
  int threads = 0;
  std::string log;
  std::string out;
};

std::string EvalExact(const Instance& inst, const EvalArgs& a) {
  std::string out = "metric,value\n";
  const PartialAssignment empty(inst.num_vars());
  if (a.algo == "opt1") {
    const int b = a.budget < 0 ? inst.num_vars() : static_cast<int>(a.budget);
    const Rational p = Opt1SuccessProbability<Rational>(
        inst, ToRational(inst.probs()), empty, b);
    out += Row({"found1_prob", Num(ToDouble(p))});
    out += Row({"found1_prob_exact", RationalString(p)});
  } else if (a.algo == "sa") {
    const double b = a.budget < 0 ? 1.0 : a.budget;
    const SteepestAscentPlan plan = PlanSteepestAscent(inst, empty, b);
    const SteepestAscentExact e = ExactSteepestAscent(plan);
    out += Row({"zero_cert_prob", Num(e.zero_cert_prob)});
    out += Row({"expected_cost", Num(e.expected_cost)});
    out += Row({"allocated_utility", Num(e.sum_of_class_probs)});
  } else if (a.algo == "io") {
    const StrategyDag io = BuildInsideOutDag(PickClass(inst, a.cls));
    const StrategyDag dag =
        a.budget < 0 ? io : ComputePrunedStrategy(io, Target::kZero, a.budget);
    const Expectations e = ExactExpectations(dag);
    out += Row({"expected_cost", Num(e.cost)});
    out += Row({"u0", Num(e.u0)});
    out += Row({"u1", Num(e.u1)});
    out += Row({"amortized_cost", Num(e.acost)});
  } else if (a.algo == "optimal") {
    const Rational c = OptEvalCost<Rational>(inst, ToRational(inst.probs()));
    out += Row({"expected_cost", Num(ToDouble(c))});
    out += Row({"expected_cost_exact", RationalString(c)});
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "--exact supports opt1, sa, io and optimal");
  }
  return out;
}

std::string Eval(const EvalArgs& a) {
  const Instance inst = LoadValid(a.instance);
  if (a.exact) return EvalExact(inst, a);
  TrialRunner runner;
  std::unique_ptr<Alg> alg;
  std::unique_ptr<SteepestAscentPlan> plan;
  std::unique_ptr<StrategyDag> dag;
  std::unique_ptr<OptimalPolicy> opt;
  std::vector<int> to_global;
  const bool want_log = !a.log.empty();
  if (a.algo == "alg") {
    AlgOptions options;
    options.faithful = a.faithful;
    options.charge_reused = a.charge_reused;
    options.keep_log = want_log;
    alg = std::make_unique<Alg>(inst, options);
    runner = [&](int i, const Realization& r, Rng& rng) {
      const AlgRun run = alg->Run(r, rng);
      return TrialOutcome{static_cast<double>(run.cost),
                          CertificateName(run.certificate),
                          want_log ? PhaseLogCsv(i, run) : ""};
    };
  } else if (a.algo == "opt1") {
    const int b = a.budget < 0 ? inst.num_vars() : static_cast<int>(a.budget);
    runner = [&, b](int, const Realization& r, Rng&) {
      Executor exec(inst, r);
      const Opt1Result res = Opt1Run(inst, exec.state(), b, exec);
      return TrialOutcome{static_cast<double>(exec.cost()),
                          Opt1VerdictName(res.verdict), ""};
    };
  } else if (a.algo == "sa") {
    const double b = a.budget < 0 ? 1.0 : a.budget;
    plan = std::make_unique<SteepestAscentPlan>(
        PlanSteepestAscent(inst, PartialAssignment(inst.num_vars()), b));
    runner = [&](int, const Realization& r, Rng& rng) {
      Executor exec(inst, r);
      const SteepestAscentResult res =
          RunSteepestAscent(*plan, exec, rng, a.faithful);
      return TrialOutcome{static_cast<double>(exec.cost()),
                          res.found_zero ? "Zero" : "None", ""};
    };
  } else if (a.algo == "io") {
    const StrategyDag io = BuildInsideOutDag(PickClass(inst, a.cls));
    dag = std::make_unique<StrategyDag>(
        a.budget < 0 ? io : ComputePrunedStrategy(io, Target::kZero, a.budget));
    for (int i = 0; i < inst.class_size(a.cls); ++i) {
      to_global.push_back(inst.first_var(a.cls) + i);
    }
    runner = [&](int, const Realization& r, Rng& rng) {
      Executor exec(inst, r);
      const Transcript t = Execute(*dag, exec, rng, to_global);
      return TrialOutcome{static_cast<double>(t.cost), LabelName(t.label), ""};
    };
  } else if (a.algo == "depth-first") {
    runner = [&](int, const Realization& r, Rng&) {
      Executor exec(inst, r);
      RunDepthFirst(inst, exec);
      return TrialOutcome{static_cast<double>(exec.cost()),
                          CertificateName(exec.certificate()), ""};
    };
  } else if (a.algo == "optimal") {
    opt = std::make_unique<OptimalPolicy>(inst);
    runner = [&](int, const Realization& r, Rng&) {
      return TrialOutcome{static_cast<double>(opt->Cost(r)), "Done", ""};
    };
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown algorithm " + a.algo);
  }
  const MonteCarloSummary s =
      RunTrials(inst, a.trials, a.seed, runner, a.threads);
  if (want_log) {
    Emit("trial,phase,charged_cost,reused,certificate\n" + s.log, a.log);
  }
  return SummaryCsv(s);
}

// ---- qfn / prune / dot ----

struct StrategyArgs {
  std::string instance;
  std::string strategy = "io";
  int cls = 0;
  std::string target = "zero";
  double budget = 0.0;
  double lambda = 0.5;
  std::string strategy_file;
  std::string out;
};

std::string Qfn(const StrategyArgs& a) {
  const Instance inst = LoadValid(a.instance);
  const ClassSpec& cls = PickClass(inst, a.cls);
  const Target target = ParseTarget(a.target);
  if (a.strategy == "io") {
    return ComputePruningFunction(BuildInsideOutDag(cls), target).ToCsv();
  }
  if (a.strategy == "optimal") {
    return ComputePruningFunction(BuildOptimalEvaluationTree(cls),
                                  Instance({cls}), target)
        .ToCsv();
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy " + a.strategy);
}

std::string Prune(const StrategyArgs& a) {
  const Instance inst = LoadValid(a.instance);
  const ClassSpec& cls = PickClass(inst, a.cls);
  const Target target = ParseTarget(a.target);
  if (a.strategy == "io") {
    return DagToDot(
        ComputePrunedStrategy(BuildInsideOutDag(cls), target, a.budget));
  }
  if (a.strategy == "optimal") {
    return TreeToDot(ComputePrunedStrategy(BuildOptimalEvaluationTree(cls),
                                           Instance({cls}), target, a.budget));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy " + a.strategy);
}

std::string Dot(const StrategyArgs& a) {
  if (!a.strategy_file.empty()) {
    return TreeToDot(StrategyTreeFromJson(ReadFile(a.strategy_file)));
  }
  if (a.instance.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "dot needs an instance or --strategy-file");
  }
  const Instance inst = LoadValid(a.instance);
  if (a.strategy == "io") {
    return DagToDot(BuildInsideOutDag(PickClass(inst, a.cls)));
  }
  if (a.strategy == "io-tree") {
    return TreeToDot(DagToTree(BuildInsideOutDag(PickClass(inst, a.cls))));
  }
  if (a.strategy == "optimal") {
    return TreeToDot(BuildOptimalEvaluationTree(PickClass(inst, a.cls)));
  }
  if (a.strategy == "opt-policy") return TreeToDot(OptimalPolicy(inst).ToTree());
  if (a.strategy == "mp0") return TreeToDot(Mp0WitnessPolicy(inst, a.lambda));
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy " + a.strategy);
}

// ---- oracle ----

struct OracleArgs {
  std::string which;
  std::string instance;
  int budget = 1;
  bool exact = false;
  double max_budget = -1.0;
  std::string out;
};

std::string Oracle(const OracleArgs& a) {
  const Instance inst = LoadValid(a.instance);
  if (a.which == "opt-cost") {
    std::string out = "metric,value\n";
    if (a.exact) {
      const Rational c = OptEvalCost<Rational>(inst, ToRational(inst.probs()));
      out += Row({"opt_eval_cost", Num(ToDouble(c))});
      out += Row({"opt_eval_cost_exact", RationalString(c)});
    } else {
      out += Row({"opt_eval_cost", Num(OptEvalCost(inst))});
    }
    out += Row({"min_certificate_bound", Num(ExpectedMinCertificateSize(inst))});
    return out;
  }
  if (a.which == "onecert") {
    std::string out = "budget,prob\n";
    if (a.exact) {
      const Rational p = MaxOneCertProb<Rational>(
          inst, ToRational(inst.probs()), PartialAssignment(inst.num_vars()),
          a.budget);
      return out + Row({std::to_string(a.budget), RationalString(p)});
    }
    return out + Row({std::to_string(a.budget), Num(MaxOneCertProb(inst, a.budget))});
  }
  if (a.which == "mp0") {
    Mp0Options options;
    if (a.max_budget >= 0) options.max_budget = a.max_budget;
    if (a.exact) {
      std::string out = "budget,utility,lambda\n";
      for (const auto& p : Mp0Points<Rational>(inst, ToRational(inst.probs()),
                                               options)) {
        out += Row({RationalString(p.cost), RationalString(p.utility),
                    RationalString(p.lambda)});
      }
      return out;
    }
    return EnvelopeCsv(Mp0Envelope(inst, options));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown oracle " + a.which);
}

// ---- bench ----

struct BenchArgs {
  std::string family = "random";
  int instances = 10;
  int n_min = 3;
  int n_max = 8;
  int trials = 10000;
  uint64_t seed = 1;
  std::vector<double> eps = {0.5, 0.25, 0.2, 0.125, 0.1};
  std::string out;
};

std::string Bench(const BenchArgs& a) {
  std::vector<std::pair<std::string, Instance>> sweep;
  if (a.family == "random") {
    for (int i = 0; i < a.instances; ++i) {
      const uint64_t s = TrialSeed(a.seed, i);
      const int n = a.n_min + static_cast<int>(s % (a.n_max - a.n_min + 1));
      const int d = 1 + static_cast<int>((s >> 20) % std::min(3, n));
      sweep.emplace_back("random-" + std::to_string(i),
                         RandomInstance(n, d, s));
    }
  } else if (a.family == "incr-counter" || a.family == "appA1") {
    for (double e : a.eps) {
      Instance inst = a.family == "appA1" ? PruneGapInstance(e)
                                          : IncreasingCounterInstance(e);
      if (inst.num_vars() > kMaxOracleVars) continue;
      sweep.emplace_back(a.family + "-" + Num(e), std::move(inst));
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "bench families: random, incr-counter, appA1");
  }
  std::string out =
      "instance,n,d,opt_cost,alg_mean,alg_stderr,ratio,bound\n";
  for (const auto& [name, inst] : sweep) {
    const double opt = OptEvalCost(inst);
    Alg alg(inst, AlgOptions{false, false, false});
    const MonteCarloSummary s = RunTrials(
        inst, a.trials, a.seed, [&](int, const Realization& r, Rng& rng) {
          return TrialOutcome{static_cast<double>(alg.Run(r, rng).cost), "",
                              ""};
        });
    out += Row({name, std::to_string(inst.num_vars()),
                std::to_string(inst.num_classes()), Num(opt), Num(s.mean),
                Num(s.std_error), Num(s.mean / opt), Num(RatioBound())});
  }
  return out;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooLarge:
    case ErrorCode::kOracleUnavailable:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int RunCli(int argc, char** argv) {
  CLI::App app{"Stochastic Boolean function evaluation on partition matroids"};
  app.require_subcommand(1);
  std::function<std::string()> action;
  std::string out_path;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write an instance as JSON");
  g->add_option("--family", gen.family,
                "fig2, fig3, appA1, incr-counter, decr-counter, random");
  g->add_option("--eps", gen.eps, "Family parameter eps (1/eps integral)");
  g->add_option("--M", gen.m, "appA1: gap factor M (eps = 1/(8M))");
  g->add_option("--max-classes", gen.max_classes, "fig2: cap on classes");
  g->add_option("--base", gen.base, "decr-counter: base instance JSON");
  g->add_option("--extra", gen.extra, "decr-counter: variables per class");
  g->add_option("--p-near", gen.p_near, "decr-counter: their probability");
  g->add_option("--n", gen.n, "random: variables");
  g->add_option("--d", gen.d, "random: classes");
  g->add_option("--seed", gen.seed, "random: seed");
  g->add_option("--lo", gen.lo, "random: lowest probability");
  g->add_option("--hi", gen.hi, "random: highest probability");
  g->add_option("-o,--output", out_path, "Output file (default stdout)");
  g->callback([&] {
    action = [&] {
      Instance inst = Generate(gen);
      CheckValid(inst);
      return InstanceToJson(inst);
    };
  });

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Run an algorithm on an instance");
  e->add_option("instance", ev.instance, "Instance JSON")->required();
  e->add_option("--algo", ev.algo,
                "alg, opt1, sa, io, depth-first or optimal");
  e->add_option("--trials", ev.trials, "Monte Carlo trials");
  e->add_option("--seed", ev.seed, "Base seed");
  e->add_option("--budget", ev.budget, "Budget for opt1, sa and io");
  e->add_option("--class", ev.cls, "Class index (0-based) for io");
  e->add_flag("--exact", ev.exact, "Exact expectations instead of sampling");
  e->add_flag("--faithful", ev.faithful, "Literal pseudocode control flow");
  e->add_flag("--charge-reused", ev.charge_reused,
              "Charge tests whose result is already known");
  e->add_option("--threads", ev.threads, "Worker threads (0 = auto)");
  e->add_option("--log", ev.log, "Per-phase CSV log (alg)");
  e->add_option("-o,--output", out_path, "Output file (default stdout)");
  e->callback([&] { action = [&] { return Eval(ev); }; });

  StrategyArgs st;
  auto* q = app.add_subcommand("qfn", "Breakpoints of q_S for one class");
  q->add_option("instance", st.instance, "Instance JSON")->required();
  q->add_option("--class", st.cls, "Class index (0-based)");
  q->add_option("--strategy", st.strategy, "io or optimal");
  q->add_option("--target", st.target, "zero, one or any");
  q->add_option("-o,--output", out_path, "Output file (default stdout)");
  q->callback([&] { action = [&] { return Qfn(st); }; });

  auto* p = app.add_subcommand("prune", "DOT of the pruned strategy");
  p->add_option("instance", st.instance, "Instance JSON")->required();
  p->add_option("--budget", st.budget, "Expected-cost budget")->required();
  p->add_option("--class", st.cls, "Class index (0-based)");
  p->add_option("--strategy", st.strategy, "io or optimal");
  p->add_option("--target", st.target, "zero, one or any");
  p->add_option("-o,--output", out_path, "Output file (default stdout)");
  p->callback([&] { action = [&] { return Prune(st); }; });

  auto* d = app.add_subcommand("dot", "DOT of a strategy");
  d->add_option("instance", st.instance, "Instance JSON");
  d->add_option("--strategy-file", st.strategy_file, "Strategy tree JSON");
  d->add_option("--strategy", st.strategy,
                "io, io-tree, optimal, opt-policy or mp0");
  d->add_option("--class", st.cls, "Class index (0-based)");
  d->add_option("--lambda", st.lambda, "mp0: cost penalty");
  d->add_option("-o,--output", out_path, "Output file (default stdout)");
  d->callback([&] { action = [&] { return Dot(st); }; });

  OracleArgs orc;
  auto* o = app.add_subcommand("oracle", "Exact brute-force baselines");
  o->add_option("which", orc.which, "opt-cost, onecert or mp0")->required();
  o->add_option("instance", orc.instance, "Instance JSON")->required();
  o->add_option("--budget", orc.budget, "onecert: test budget");
  o->add_option("--max-budget", orc.max_budget,
                "mp0: refine the envelope only up to this budget");
  o->add_flag("--exact", orc.exact, "Exact rational arithmetic");
  o->add_option("-o,--output", out_path, "Output file (default stdout)");
  o->callback([&] { action = [&] { return Oracle(orc); }; });

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Ratio table of ALG against OPT");
  b->add_option("--family", bench.family, "random, incr-counter or appA1");
  b->add_option("--instances", bench.instances, "random: instance count");
  b->add_option("--n-min", bench.n_min, "random: fewest variables");
  b->add_option("--n-max", bench.n_max, "random: most variables");
  b->add_option("--trials", bench.trials, "Monte Carlo trials");
  b->add_option("--seed", bench.seed, "Base seed");
  b->add_option("--eps", bench.eps, "eps values for the counterexamples");
  b->add_option("-o,--output", out_path, "Output file (default stdout)");
  b->callback([&] { action = [&] { return Bench(bench); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }
  try {
    Emit(action(), out_path);
  } catch (const Error& err) {
    std::cerr << "sbfe: " << err.what() << "\n";
    return ExitCodeFor(err.code());
  } catch (const std::exception& err) {
    std::cerr << "sbfe: internal error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sbfe
