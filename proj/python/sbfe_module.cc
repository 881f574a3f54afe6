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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbfe/error.h"
#include "sbfe/expectations.h"
#include "sbfe/generators.h"
#include "sbfe/inside_out.h"
#include "sbfe/instance_json.h"
#include "sbfe/mbt_alg.h"
#include "sbfe/monte_carlo.h"
#include "sbfe/opt1.h"
#include "sbfe/oracles.h"
#include "sbfe/pruning.h"
#include "sbfe/steepest_ascent.h"

namespace py = pybind11;

namespace sbfe {
namespace {

using Points = std::vector<std::pair<double, double>>;

Points ToPoints(const PiecewiseLinearFn& f) {
  Points out;
  for (const Breakpoint& b : f.breakpoints()) out.emplace_back(b.budget, b.value);
  return out;
}

Target ParseTarget(const std::string& s) {
  if (s == "zero") return Target::kZero;
  if (s == "one") return Target::kOne;
  if (s == "any") return Target::kAny;
  throw Error(ErrorCode::kInvalidArgument, "target must be zero, one or any");
}

PartialAssignment Sigma(const Instance& inst, const std::string& s) {
  if (s.empty()) return PartialAssignment(inst.num_vars());
  PartialAssignment sigma = PartialAssignment::FromString(s);
  if (sigma.size() != inst.num_vars()) {
    throw Error(ErrorCode::kLengthMismatch, "assignment length");
  }
  return sigma;
}

Instance MakeInstance(const std::vector<std::pair<int, std::vector<double>>>&
                          classes) {
  std::vector<ClassSpec> specs;
  for (const auto& [k, probs] : classes) specs.push_back(ClassSpec{k, probs});
  return Instance(std::move(specs));
}

py::dict MonteCarlo(const Instance& inst, const std::string& algo, int trials,
                    uint64_t seed, double budget) {
  CheckValid(inst);
  MonteCarloSummary s;
  if (algo == "alg") {
    Alg alg(inst, AlgOptions{false, false, false});
    s = RunTrials(inst, trials, seed, [&](int, const Realization& r, Rng& g) {
      const AlgRun run = alg.Run(r, g);
      return TrialOutcome{static_cast<double>(run.cost),
                          CertificateName(run.certificate), ""};
    });
  } else if (algo == "depth_first") {
    s = RunTrials(inst, trials, seed, [&](int, const Realization& r, Rng&) {
      Executor exec(inst, r);
      RunDepthFirst(inst, exec);
      return TrialOutcome{static_cast<double>(exec.cost()),
                          CertificateName(exec.certificate()), ""};
    });
  } else if (algo == "opt1") {
    const int b = budget < 0 ? inst.num_vars() : static_cast<int>(budget);
    s = RunTrials(inst, trials, seed, [&](int, const Realization& r, Rng&) {
      Executor exec(inst, r);
      const Opt1Result res = Opt1Run(inst, exec.state(), b, exec);
      return TrialOutcome{static_cast<double>(exec.cost()),
                          Opt1VerdictName(res.verdict), ""};
    });
  } else if (algo == "optimal") {
    OptimalPolicy opt(inst);
    s = RunTrials(inst, trials, seed, [&](int, const Realization& r, Rng&) {
      return TrialOutcome{static_cast<double>(opt.Cost(r)), "Done", ""};
    });
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "algo must be alg, depth_first, opt1 or optimal");
  }
  py::dict out;
  out["mean"] = s.mean;
  out["std_error"] = s.std_error;
  out["trials"] = s.trials;
  out["histogram"] = s.histogram;
  return out;
}

}  // namespace
}  // namespace sbfe

PYBIND11_MODULE(_sbfe, m) {
  using namespace sbfe;
  m.doc() = "Stochastic Boolean function evaluation on partition matroids";

  static py::exception<Error> error(m, "SbfeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def(py::init(&MakeInstance), py::arg("classes"),
           "Classes as a list of (k, probabilities) pairs.")
      .def_property_readonly("num_vars", &Instance::num_vars)
      .def_property_readonly("num_classes", &Instance::num_classes)
      .def_property_readonly("probs", &Instance::probs)
      .def("threshold", &Instance::threshold)
      .def("class_size", &Instance::class_size)
      .def("to_json", &InstanceToJson)
      .def_static("from_json", &InstanceFromJson)
      .def("__repr__", &Instance::DebugString);

  m.def("validate", [](const Instance& inst) {
    const Validation v = ValidateInstance(inst);
    return std::make_pair(std::string(ErrorCodeName(v.code)), v.message);
  });
  m.def(
      "classify",
      [](const Instance& inst, const std::string& sigma) {
        return std::string(CertificateName(Classify(Sigma(inst, sigma), inst)));
      },
      py::arg("inst"), py::arg("sigma"),
      "Certificate status of an assignment string over '0', '1', '*'.");

  m.def("fig2", &Fig2Instance, py::arg("eps"), py::arg("max_classes") = 0);
  m.def("fig3", &Fig3Instance, py::arg("eps"));
  m.def("prune_gap", &PruneGapInstance, py::arg("eps"));
  m.def("increasing_counter", &IncreasingCounterInstance, py::arg("eps"));
  m.def("decreasing_counter", &DecreasingCounterInstance, py::arg("base"),
        py::arg("extra"), py::arg("p_near") = 0.999);
  m.def("random_instance", &RandomInstance, py::arg("n"), py::arg("d"),
        py::arg("seed"), py::arg("lo") = 0.05, py::arg("hi") = 0.95);

  m.def(
      "opt_eval_cost", [](const Instance& inst) { return OptEvalCost(inst); },
      py::arg("inst"));
  m.def(
      "max_onecert_prob",
      [](const Instance& inst, int budget) {
        return MaxOneCertProb(inst, budget);
      },
      py::arg("inst"), py::arg("budget"));
  m.def(
      "opt1_success_prob",
      [](const Instance& inst, int budget, const std::string& sigma) {
        return Opt1SuccessProbability<double>(inst, inst.probs(),
                                              Sigma(inst, sigma), budget);
      },
      py::arg("inst"), py::arg("budget"), py::arg("sigma") = "");
  m.def(
      "mp0_envelope",
      [](const Instance& inst) { return ToPoints(Mp0Envelope(inst).q); },
      py::arg("inst"), "Breakpoints (budget, utility) of the MP0 envelope.");
  m.def("expected_min_certificate_size", &ExpectedMinCertificateSize);

  m.def(
      "inside_out_qfn",
      [](const Instance& inst, int cls, const std::string& target) {
        return ToPoints(ComputePruningFunction(
            BuildInsideOutDag(inst.class_spec(cls)), ParseTarget(target)));
      },
      py::arg("inst"), py::arg("cls") = 0, py::arg("target") = "zero");
  m.def(
      "inside_out_pruned",
      [](const Instance& inst, int cls, double budget,
         const std::string& target) {
        const StrategyDag dag = ComputePrunedStrategy(
            BuildInsideOutDag(inst.class_spec(cls)), ParseTarget(target),
            budget);
        const Expectations e = ExactExpectations(dag);
        py::dict out;
        out["cost"] = e.cost;
        out["u0"] = e.u0;
        out["u1"] = e.u1;
        out["acost"] = e.acost;
        return out;
      },
      py::arg("inst"), py::arg("cls"), py::arg("budget"),
      py::arg("target") = "zero");
  m.def(
      "steepest_ascent",
      [](const Instance& inst, double budget, const std::string& sigma) {
        const SteepestAscentPlan plan =
            PlanSteepestAscent(inst, Sigma(inst, sigma), budget);
        const SteepestAscentExact e = ExactSteepestAscent(plan);
        py::dict out;
        out["budgets"] = plan.allocation.budgets;
        out["zero_cert_prob"] = e.zero_cert_prob;
        out["expected_cost"] = e.expected_cost;
        out["allocated_utility"] = e.sum_of_class_probs;
        return out;
      },
      py::arg("inst"), py::arg("budget"), py::arg("sigma") = "");
  m.def("monte_carlo", &MonteCarlo, py::arg("inst"), py::arg("algo") = "alg",
        py::arg("trials") = 1000, py::arg("seed") = 1,
        py::arg("budget") = -1.0);
  m.def("ratio_bound", &RatioBound);
}
