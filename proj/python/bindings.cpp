// Copyright 2026 The qintrinsic Authors
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
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "qintrinsic/errors.h"
#include "qintrinsic/io.h"
#include "qintrinsic/linalg.h"
#include "qintrinsic/naimark.h"
#include "qintrinsic/oracle.h"
#include "qintrinsic/povm.h"
#include "qintrinsic/randomness.h"

namespace py = pybind11;
namespace qi = qintrinsic;

namespace {

qi::OptimizerConfig make_config(int restarts, std::uint64_t seed) {
  qi::OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

qi::Measure parse_measure(const std::string &name) {
  if (name == "rc") return qi::Measure::Rc;
  if (name == "rq") return qi::Measure::Rq;
  throw py::value_error("measure must be 'rc' or 'rq'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intrinsic randomness of quantum measurements.";

  py::register_exception<qi::Error>(m, "Error");

  py::enum_<qi::Extremality>(m, "Extremality")
      .value("Extremal", qi::Extremality::Extremal)
      .value("NotExtremal", qi::Extremality::NotExtremal)
      .value("Inconclusive", qi::Extremality::Inconclusive);

  py::enum_<qi::BoundType>(m, "BoundType")
      .value("Exact", qi::BoundType::Exact)
      .value("UpperBound", qi::BoundType::UpperBound);

  py::class_<qi::Povm>(m, "Povm")
      .def(py::init<std::vector<qi::ComplexMatrix>>(), py::arg("elements"))
      .def_property_readonly("dim", &qi::Povm::dim)
      .def_property_readonly("elements", &qi::Povm::elements)
      .def("__len__", &qi::Povm::size)
      .def("probabilities", &qi::Povm::probabilities, py::arg("psi"));

  py::class_<qi::ExtremalityVerdict>(m, "ExtremalityVerdict")
      .def_readonly("status", &qi::ExtremalityVerdict::status)
      .def_readonly("witness", &qi::ExtremalityVerdict::witness)
      .def_readonly("rank", &qi::ExtremalityVerdict::rank);

  py::class_<qi::Decomposition>(m, "Decomposition")
      .def_readonly("weights", &qi::Decomposition::weights)
      .def_readonly("components", &qi::Decomposition::components)
      .def("mixture", &qi::Decomposition::mixture);

  py::class_<qi::RandomnessReport>(m, "RandomnessReport")
      .def_readonly("value", &qi::RandomnessReport::value)
      .def_readonly("bound_type", &qi::RandomnessReport::bound_type)
      .def_readonly("decomposition", &qi::RandomnessReport::decomposition)
      .def_readonly("notes", &qi::RandomnessReport::notes);

  py::class_<qi::NaimarkExtension>(m, "NaimarkExtension")
      .def_readonly("system_dim", &qi::NaimarkExtension::system_dim)
      .def_readonly("ancilla_dim", &qi::NaimarkExtension::ancilla_dim)
      .def_readonly("unitary", &qi::NaimarkExtension::unitary)
      .def_property_readonly("projectors",
                             [](const qi::NaimarkExtension &e) { return e.pvm.projectors(); });

  m.def("sic_qubit", &qi::sic_qubit);
  m.def("sic_qutrit", &qi::sic_qutrit);
  m.def("mub_qubit", &qi::mub_qubit);
  m.def("vn_x_qubit", &qi::vn_x_qubit);
  m.def("computational_basis", &qi::computational_basis, py::arg("d"));
  m.def("depolarize", &qi::depolarize, py::arg("povm"), py::arg("mu"));
  m.def("load_povm", [](const std::string &path) {
    return qi::io::povm_from_json(qi::io::read_json_file(path));
  }, py::arg("path"));

  m.def("extremality_check", &qi::extremality_check, py::arg("povm"));
  m.def("extremal_decompose",
        [](const qi::Povm &p) { return qi::extremal_decompose(p); }, py::arg("povm"));
  m.def("verify_decomposition", &qi::verify_decomposition, py::arg("decomposition"), py::arg("povm"));

  m.def("canonical_extension", &qi::canonical_extension, py::arg("povm"));
  m.def("consistency_check", &qi::consistency_check, py::arg("extension"), py::arg("povm"));

  m.def("born_entropy",
        [](const qi::ComplexVector &psi, const qi::Povm &p) {
          return qi::born_entropy(qi::Ket(psi), p);
        },
        py::arg("psi"), py::arg("povm"));
  m.def("r_q_direct",
        [](const qi::ComplexMatrix &rho, const qi::Povm &p) {
          return qi::r_q_direct(qi::DensityState(rho), p);
        },
        py::arg("rho"), py::arg("povm"));
  m.def("r_cf",
        [](const qi::ComplexMatrix &rho, const qi::Povm &p, const std::string &measure, int restarts,
           std::uint64_t seed) {
          return qi::r_cf(qi::DensityState(rho), p, parse_measure(measure), make_config(restarts, seed));
        },
        py::arg("rho"), py::arg("povm"), py::arg("measure") = "rc", py::arg("restarts") = 32,
        py::arg("seed") = 0);
  m.def("min_randomness",
        [](const qi::Povm &p, const std::string &measure, int restarts, std::uint64_t seed) {
          return qi::min_randomness(p, parse_measure(measure), make_config(restarts, seed));
        },
        py::arg("povm"), py::arg("measure") = "rc", py::arg("restarts") = 32, py::arg("seed") = 0);
  m.def("sic_lower_bound", &qi::sic_lower_bound, py::arg("d"));
}
