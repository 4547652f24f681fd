// Copyright 2026 The randcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "randcluster/analysis.h"
#include "randcluster/commands.h"
#include "randcluster/errors.h"
#include "randcluster/mc_engine.h"
#include "randcluster/measures.h"
#include "randcluster/quantum.h"
#include "randcluster/randgraph.h"
#include "randcluster/stab_oracle.h"

namespace py = pybind11;
using namespace randcluster;

namespace {

QubitSet qs(const std::vector<int>& labels) { return QubitSet(labels); }

py::array_t<std::complex<double>> amplitudes_array(const StateVector& s) {
  const auto a = s.amplitudes();
  py::array_t<std::complex<double>> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(a.size())});
  std::copy(a.begin(), a.end(), out.mutable_data());
  return out;
}

py::array_t<std::complex<double>> matrix_array(const ComplexMatrix& m) {
  const auto d = static_cast<py::ssize_t>(m.dim());
  py::array_t<std::complex<double>> out({d, d});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t r = 0; r < d; ++r)
    for (py::ssize_t c = 0; c < d; ++c) v(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

StateVector state_from_array(int n, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> a) {
  std::vector<Complex> amps(a.data(), a.data() + a.size());
  return StateVector(n, std::move(amps));
}

DensityMatrix density_from_array(py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> a,
                                 const std::vector<int>& labels) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw InvalidInput("density matrix must be square");
  const auto d = static_cast<std::size_t>(a.shape(0));
  ComplexMatrix m(d);
  auto v = a.unchecked<2>();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = v(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c));
  return DensityMatrix(std::move(m), QubitSet(labels));
}

RootMode mode_arg(const std::string& s) { return root_mode_from_string(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement statistics of random graph states";
  m.attr("__version__") = tool_version();

  auto base = py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_MemoryError);
  py::register_exception<FitDegenerate>(m, "FitDegenerate", base.ptr());
  py::register_exception<NoCrossing>(m, "NoCrossing", base.ptr());
  py::register_exception<BootstrapUnstable>(m, "BootstrapUnstable", base.ptr());
  py::register_exception<NoInteriorMax>(m, "NoInteriorMax", base.ptr());

  py::class_<StateVector>(m, "StateVector")
      .def(py::init(&state_from_array), py::arg("n"), py::arg("amplitudes"))
      .def_property_readonly("n_qubits", &StateVector::n_qubits)
      .def_property_readonly("amplitudes", &amplitudes_array)
      .def("norm_squared", &StateVector::norm_squared);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init(&density_from_array), py::arg("matrix"), py::arg("labels"))
      .def_static("projector", &DensityMatrix::projector)
      .def_property_readonly("n_qubits", &DensityMatrix::n_qubits)
      .def_property_readonly("labels", [](const DensityMatrix& r) { return r.labels().labels(); })
      .def_property_readonly("matrix", [](const DensityMatrix& r) { return matrix_array(r.matrix()); });

  m.def("plus_state", &plus_state, py::arg("n"));
  m.def("basis_state", &basis_state, py::arg("n"), py::arg("index"));
  m.def("apply_cphase", &apply_cphase, py::arg("state"), py::arg("i"), py::arg("j"));
  m.def("apply_hadamard", &apply_hadamard, py::arg("state"), py::arg("i"));
  m.def("reduce", [](const StateVector& s, const std::vector<int>& keep) { return reduce(s, qs(keep)); },
        py::arg("state"), py::arg("keep"));
  m.def("reduction_purity",
        [](const StateVector& s, const std::vector<int>& keep) { return reduction_purity(s, qs(keep)); },
        py::arg("state"), py::arg("keep"));
  m.def("partial_transpose",
        [](const DensityMatrix& r, const std::vector<int>& side) { return matrix_array(partial_transpose(r, qs(side))); },
        py::arg("rho"), py::arg("side"));

  m.def("purity", &purity, py::arg("rho"));
  m.def("negativity", [](const DensityMatrix& r, const std::vector<int>& side) { return negativity(r, qs(side)); },
        py::arg("rho"), py::arg("side"));
  m.def("pure_negativity",
        [](const StateVector& s, const std::vector<int>& side) { return pure_negativity(s, qs(side)); },
        py::arg("state"), py::arg("side"));
  m.def("multipartite_negativity",
        [](const StateVector& s, const std::string& mode) { return multipartite_negativity(s, mode_arg(mode)); },
        py::arg("state"), py::arg("root_mode") = "paper");
  m.def("multipartite_negativity",
        [](const DensityMatrix& r, const std::string& mode) { return multipartite_negativity(r, mode_arg(mode)); },
        py::arg("rho"), py::arg("root_mode") = "paper");
  m.def("l1_coherence", &l1_coherence, py::arg("rho"));
  m.def("canonical_bipartitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& b : canonical_bipartitions(QubitSet::all(n))) out.push_back(b.labels());
    return out;
  }, py::arg("n"));
  m.def("census", [](const StateVector& s, double tol) {
    const ReductionCensus c = census(s, tol);
    py::dict d;
    py::list total, mixed;
    for (int k = 1; k < c.n; ++k) {
      total.append(c.per_size[static_cast<std::size_t>(k)].total);
      mixed.append(c.per_size[static_cast<std::size_t>(k)].mixed);
    }
    d["total"] = total;
    d["mixed"] = mixed;
    d["f2_hits"] = c.f2_hits;
    return d;
  }, py::arg("state"), py::arg("purity_tol") = kDefaultPurityTolerance);

  py::class_<GraphInstance>(m, "GraphInstance")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &GraphInstance::n)
      .def_property_readonly("edges", &GraphInstance::edges)
      .def("has_edge", &GraphInstance::has_edge)
      .def("digest", &GraphInstance::digest)
      .def("to_json", &graph_to_json)
      .def_static("from_json", &graph_from_json)
      .def("__eq__", [](const GraphInstance& a, const GraphInstance& b) { return a == b; });

  m.def("sample_graph", [](int n, double q, std::uint64_t seed, std::uint64_t sample_index, std::uint32_t lane) {
    RandomStream rng = substream(SeedSpec{seed, sample_index, lane});
    return sample_graph(n, q, rng);
  }, py::arg("n"), py::arg("q"), py::arg("seed") = 0, py::arg("sample_index") = 0, py::arg("lane") = 0);
  m.def("build_state", &build_state, py::arg("graph"));
  m.def("cut_rank", [](const GraphInstance& g, const std::vector<int>& s) { return cut_rank(g, qs(s)); },
        py::arg("graph"), py::arg("side"));
  m.def("oracle_purity", [](const GraphInstance& g, const std::vector<int>& s) { return oracle_purity(g, qs(s)); },
        py::arg("graph"), py::arg("side"));
  m.def("oracle_pure_negativity",
        [](const GraphInstance& g, const std::vector<int>& s) { return oracle_pure_negativity(g, qs(s)); },
        py::arg("graph"), py::arg("side"));

  py::class_<MeanStat>(m, "MeanStat")
      .def_readonly("mean", &MeanStat::mean)
      .def_readonly("stddev", &MeanStat::stddev)
      .def_readonly("sem", &MeanStat::sem)
      .def("__repr__", [](const MeanStat& s) {
        return "MeanStat(mean=" + std::to_string(s.mean) + ", sem=" + std::to_string(s.sem) + ")";
      });

  py::class_<QPointAggregate>(m, "QPointAggregate")
      .def_readonly("q", &QPointAggregate::q)
      .def_readonly("samples", &QPointAggregate::samples)
      .def_readonly("mixed_pct", &QPointAggregate::mixed_pct)
      .def_readonly("f2_pct", &QPointAggregate::f2_pct)
      .def_readonly("multipartite_paper", &QPointAggregate::multipartite_paper)
      .def_readonly("multipartite_bipartitions", &QPointAggregate::multipartite_bipartitions)
      .def_property_readonly("average_purity", [](const QPointAggregate& a) -> py::object {
        return a.average_state ? py::object(py::float_(a.average_state->purity)) : py::object(py::none());
      })
      .def_property_readonly("average_coherence", [](const QPointAggregate& a) -> py::object {
        return a.average_state ? py::object(py::float_(a.average_state->coherence)) : py::object(py::none());
      })
      .def_property_readonly("percolation_pct", [](const QPointAggregate& a) -> py::object {
        return a.percolation_pct ? py::cast(*a.percolation_pct) : py::none();
      });

  m.def("make_grid", &make_grid, py::arg("start"), py::arg("stop"), py::arg("step"));
  m.def("run_sweep",
        [](int n, std::vector<double> q_grid, std::uint64_t samples, std::uint64_t seed, unsigned workers,
           bool multipartite, bool average_state, const std::string& mode, double purity_tol) {
          SweepConfig cfg;
          cfg.n = n;
          cfg.q_grid = std::move(q_grid);
          cfg.samples = samples;
          cfg.master_seed = seed;
          cfg.workers = workers;
          cfg.tasks.multipartite = multipartite;
          cfg.tasks.average_state = average_state;
          cfg.root_mode = mode_arg(mode);
          cfg.purity_tol = purity_tol;
          cfg.validate();
          py::gil_scoped_release release;
          return run_sweep(cfg);
        },
        py::arg("n"), py::arg("q_grid"), py::arg("samples"), py::arg("seed") = 0, py::arg("workers") = 0,
        py::arg("multipartite") = false, py::arg("average_state") = false, py::arg("root_mode") = "paper",
        py::arg("purity_tol") = kDefaultPurityTolerance);

  py::class_<ThresholdResult>(m, "ThresholdResult")
      .def_readonly("k", &ThresholdResult::k)
      .def_readonly("q_star", &ThresholdResult::q_star)
      .def_readonly("uncertainty", &ThresholdResult::uncertainty)
      .def_readonly("dropped", &ThresholdResult::dropped)
      .def_readonly("status", &ThresholdResult::status);

  m.def("compute_thresholds",
        [](const std::vector<QPointAggregate>& aggs, int n, double level, int n_boot, std::uint64_t seed,
           const std::string& family) {
          return compute_thresholds(aggs, n, level, n_boot, seed, fit_family_from_string(family));
        },
        py::arg("aggregates"), py::arg("n"), py::arg("level") = kDefaultLevel,
        py::arg("n_boot") = kDefaultBootstrapRefits, py::arg("seed") = 0,
        py::arg("fit_family") = to_string(kDefaultFitFamily));

  m.def("fit_threshold",
        [](const std::vector<double>& q, const std::vector<double>& mean, const std::vector<double>& sem,
           double level, const std::string& family) {
          if (q.size() != mean.size() || q.size() != sem.size()) throw InvalidInput("length mismatch");
          std::vector<CurvePoint> pts;
          for (std::size_t i = 0; i < q.size(); ++i) pts.push_back({q[i], mean[i], sem[i]});
          return solve_threshold(fit_mixedness_curve(pts, fit_family_from_string(family)), level);
        },
        py::arg("q"), py::arg("mean"), py::arg("sem"), py::arg("level") = kDefaultLevel,
        py::arg("fit_family") = to_string(kDefaultFitFamily));

  m.def("locate_max",
        [](const std::vector<double>& q, const std::vector<double>& mean, const std::vector<double>& sem,
           int n_boot, std::uint64_t seed) {
          if (q.size() != mean.size() || q.size() != sem.size()) throw InvalidInput("length mismatch");
          std::vector<CurvePoint> pts;
          for (std::size_t i = 0; i < q.size(); ++i) pts.push_back({q[i], mean[i], sem[i]});
          const MaxLocation mx = locate_max(pts, n_boot, seed);
          return py::make_tuple(mx.q, mx.uncertainty, mx.value);
        },
        py::arg("q"), py::arg("mean"), py::arg("sem"), py::arg("n_boot") = kDefaultBootstrapRefits,
        py::arg("seed") = 0);
}
