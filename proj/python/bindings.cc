// Copyright 2026 The folimits Authors
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


#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "folimits/canonical.h"
#include "folimits/enumerate.h"
#include "folimits/errors.h"
#include "folimits/families.h"
#include "folimits/intervals.h"
#include "folimits/limits.h"
#include "folimits/model.h"
#include "folimits/montecarlo.h"
#include "folimits/report.h"

namespace py = pybind11;
using namespace folimits;

namespace {

py::object ToPython(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list list;
      for (const auto& item : j) list.append(ToPython(item));
      return list;
    }
    case Json::value_t::object: {
      py::dict dict;
      for (const auto& [key, value] : j.items()) dict[py::str(key)] = ToPython(value);
      return dict;
    }
    default: return py::none();
  }
}

EnumerationBudget Budget(int d, std::optional<int> max_size) {
  EnumerationBudget budget = EnumerationBudget::ForUniformity(d);
  if (max_size) budget.max_size = *max_size;
  return budget;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closure of first-order limiting probabilities for sparse random "
            "graphs and hypergraphs";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", error.ptr());
  py::register_exception<SupercriticalError>(m, "SupercriticalError",
                                             PyExc_ValueError);
  py::register_exception<ClassificationError>(m, "ClassificationError",
                                              PyExc_ValueError);
  py::register_exception<CacheError>(m, "CacheError", error.ptr());

  py::class_<ModelParams>(m, "ModelParams")
      .def_static("graph", &ModelParams::Graph, py::arg("c"))
      .def_static("hypergraph", &ModelParams::Hypergraph, py::arg("d"),
                  py::arg("c"))
      .def_property_readonly("d", &ModelParams::uniformity)
      .def_property_readonly("c", &ModelParams::c)
      .def_property_readonly("x", &ModelParams::x)
      .def_property_readonly("s", &ModelParams::s)
      .def_property_readonly("critical_c", &ModelParams::critical_c)
      .def_property_readonly("min_cycle_length", &ModelParams::min_cycle_length)
      .def_property_readonly("subcritical", &ModelParams::subcritical)
      .def("__repr__", [](const ModelParams& model) {
        return "ModelParams(" + model.Name() + ", c=" + FormatSig(model.c()) +
               ")";
      });

  m.def("cycle_mass", &CycleMass, py::arg("model"));
  m.def("acyclic_probability", &AcyclicProbability, py::arg("model"));
  m.def("solve_c0", [](int d) { return ToPython(ToJson(SolveC0(d))); },
        py::arg("d") = 2);
  m.def("cycle_lambda", &CycleLambda, py::arg("model"), py::arg("k"));
  m.def("poisson_cdf", &PoissonCdf, py::arg("lam"), py::arg("a"));
  m.def("normal_quantile", &NormalQuantile, py::arg("p"));
  m.def(
      "fo_approximation",
      [](double p, double eps, const ModelParams& model, int k_cap) {
        return ToPython(ToJson(FoApproximation(p, eps, model, k_cap)));
      },
      py::arg("p"), py::arg("eps"), py::arg("model"), py::arg("k_cap") = 4096);

  m.def(
      "enumerate_unicycles",
      [](int d, int size, std::optional<int> max_size) {
        const auto budget = Budget(d, max_size);
        const auto shapes = d == 2 ? EnumerateUnicycles(size, budget)
                                   : EnumerateHyperUnicycles(d, size, budget);
        py::list out;
        for (const auto& shape : shapes) out.append(ToPython(ShapeJson(shape)));
        return out;
      },
      py::arg("d"), py::arg("size"), py::arg("budget") = py::none());
  m.def(
      "enumerate_fragment_shapes",
      [](int d, int max_size) {
        const auto table = EnumerateFragmentShapes(d, max_size, Budget(d, {}));
        py::list out;
        for (std::size_t i = 0; i < table.size(); ++i) {
          out.append(ToPython(ShapeJson(table.Shape(i))));
        }
        return out;
      },
      py::arg("d"), py::arg("max_size"));
  m.def(
      "inverse_aut_sum",
      [](int d, int size) {
        return ToString(WeightedInverseAutSum(d, size, Budget(d, {})));
      },
      py::arg("d"), py::arg("size"));
  m.def(
      "canonical_unicycle",
      [](const std::vector<std::vector<int>>& edges, std::optional<int> d) {
        const int uniformity =
            d.value_or(edges.empty() ? 2 : static_cast<int>(edges[0].size()));
        return ToPython(ShapeJson(CanonicalUnicycle(uniformity, edges)));
      },
      py::arg("edges"), py::arg("d") = py::none());

  m.def(
      "intervals",
      [](const ModelParams& model, std::optional<int> max_size) {
        GapReport report;
        {
          py::gil_scoped_release release;
          report = MakeGapReport(model, Budget(model.uniformity(), max_size));
        }
        return ToPython(ToJson(report));
      },
      py::arg("model"), py::arg("budget") = py::none());
  m.def(
      "sweep",
      [](int d, double c_from, double c_to, int steps,
         std::optional<int> max_size, unsigned threads) {
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = SweepIntervals(d, c_from, c_to, steps, Budget(d, max_size),
                                threads);
        }
        py::list out;
        for (const auto& row : rows) out.append(ToPython(ToJson(row)));
        return out;
      },
      py::arg("d"), py::arg("c_from"), py::arg("c_to"), py::arg("steps"),
      py::arg("budget") = py::none(), py::arg("threads") = 0);
  m.def(
      "sweep_csv",
      [](int d, double c_from, double c_to, int steps,
         std::optional<int> max_size) {
        py::gil_scoped_release release;
        return SweepCsv(
            SweepIntervals(d, c_from, c_to, steps, Budget(d, max_size)));
      },
      py::arg("d"), py::arg("c_from"), py::arg("c_to"), py::arg("steps"),
      py::arg("budget") = py::none());

  m.def(
      "verify_family_sums",
      [](int d, int k) {
        py::list out;
        for (const auto& check : VerifyFamilySums(d, k, Budget(d, {}))) {
          out.append(ToPython(ToJson(check)));
        }
        return out;
      },
      py::arg("d"), py::arg("k"));
  m.def(
      "verify_aut_bound",
      [](int d, int max_size) {
        return ToPython(ToJson(VerifyAutBound(d, max_size, Budget(d, {}))));
      },
      py::arg("d"), py::arg("max_size"));

  m.def(
      "sample_model",
      [](const ModelParams& model, long n, std::uint64_t seed,
         std::uint64_t trial) {
        SampleConfig config;
        config.model = model;
        config.n = n;
        config.master_seed = seed;
        config.max_cycle_len = 0;
        config.Validate();
        const EdgeList edges = SampleModel(config, trial);
        std::vector<std::vector<int>> out;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          const auto edge = edges.edge(e);
          out.emplace_back(edge.begin(), edge.end());
        }
        return out;
      },
      py::arg("model"), py::arg("n"), py::arg("seed"), py::arg("trial"));
  m.def(
      "simulate",
      [](const ModelParams& model, long n, int trials, std::uint64_t seed,
         int max_cycle_len, int fragment_max_size, unsigned threads) {
        SampleConfig config;
        config.model = model;
        config.n = n;
        config.trials = trials;
        config.master_seed = seed;
        config.max_cycle_len = max_cycle_len;
        config.fragment_max_size = fragment_max_size;
        config.threads = threads;
        SimResult result;
        {
          py::gil_scoped_release release;
          result = RunExperiment(config);
        }
        return ToPython(ToJson(result));
      },
      py::arg("model"), py::arg("n"), py::arg("trials"), py::arg("seed") = 1,
      py::arg("max_cycle_len") = 4, py::arg("fragment_max_size") = 8,
      py::arg("threads") = 0);
}
