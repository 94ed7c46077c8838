// Copyright 2026 The landau-vortex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vortex/landau_states.hpp"
#include "vortex/observables.hpp"
#include "vortex/operator_oracle.hpp"
#include "vortex/units.hpp"
#include "vortex/verify.hpp"

namespace py = pybind11;
using namespace vortex;

namespace {

Spin parse_spin(const std::string& s) {
  if (s == "up") return Spin::Up;
  if (s == "down") return Spin::Down;
  throw std::invalid_argument("spin must be 'up' or 'down'");
}

QuantumNumbers make_state(int l, int p, const std::string& spin) {
  auto qn = QuantumNumbers::from_signed_l(l, p, parse_spin(spin));
  qn.validate();
  return qn;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Dirac vortex states in a uniform magnetic field";

  py::class_<QuantumNumbers>(m, "State")
      .def(py::init(&make_state), py::arg("l"), py::arg("p"), py::arg("spin"))
      .def_property_readonly("l", &QuantumNumbers::winding)
      .def_readonly("p", &QuantumNumbers::p)
      .def_property_readonly("spin", [](const QuantumNumbers& q) {
        return q.spin == Spin::Up ? "up" : "down";
      })
      .def_property_readonly("family", [](const QuantumNumbers& q) {
        return family_label(q.family());
      })
      .def("__repr__", [](const QuantumNumbers& q) { return to_string(q); });

  py::class_<BeamParameters>(m, "Beam")
      .def(py::init([](double beB, double k) { return BeamParameters{beB, 1.0, k}; }),
           py::arg("beB"), py::arg("k"))
      .def_readonly("beB", &BeamParameters::beB)
      .def_readonly("k", &BeamParameters::k);

  m.def("energy", [](const QuantumNumbers& q, const BeamParameters& b) {
    return energy(q, b).total;
  });
  m.def("canonical_jz", &observables::canonical_jz);
  m.def("gauge_covariant_jz", [](const QuantumNumbers& q, const BeamParameters& b,
                                 bool spin_orbit) {
    return observables::gauge_covariant_jz(
        q, b, spin_orbit ? SpinOrbit::Included : SpinOrbit::Dropped);
  }, py::arg("state"), py::arg("beam"), py::arg("spin_orbit") = true);
  m.def("integrated_density", &observables::integrated_density);
  m.def("magnetic_moment", &observables::magnetic_moment);
  m.def("dirac_residual", &oracle::dirac_residual, py::arg("state"),
        py::arg("beam"), py::arg("energy_offset") = 0.0);
  m.def("sign_changes", [](const QuantumNumbers& q, const BeamParameters& b) {
    return observables::current_structure(q, b).sign_changes;
  });
  m.def("current", [](const QuantumNumbers& q, const BeamParameters& b, double r) {
    const auto c = observables::current_density(q, b, r);
    return py::dict(py::arg("j0") = c.j0, py::arg("jr") = c.jr,
                    py::arg("jphi") = c.jphi, py::arg("jz") = c.jz);
  });
  m.def("profile", [](const QuantumNumbers& q, const BeamParameters& b,
                      double r_max, int samples, bool normalized) {
    observables::ProfileOptions opt;
    opt.r_max = r_max;
    opt.samples = samples;
    opt.normalized = normalized;
    const auto p = observables::radial_profile(q, b, opt);
    return py::dict(py::arg("r") = p.r, py::arg("j0") = p.j0, py::arg("jz") = p.jz,
                    py::arg("jphi") = p.jphi, py::arg("s_phi") = p.s_phi);
  }, py::arg("state"), py::arg("beam"), py::arg("r_max") = 4.0,
     py::arg("samples") = 512, py::arg("normalized") = false);
  m.def("beB_over_m2", [](double b_tesla, double m_kev) {
    return units::convert_units(b_tesla, m_kev).beB_over_m2;
  }, py::arg("b_tesla"), py::arg("m_kev") = units::kDefaultMassKeV);
  m.def("length_nm", [](double b_tesla) {
    return units::convert_units(b_tesla).length_nm();
  });
  m.def("verify", []() {
    py::list out;
    for (const auto& c : verify::run_all({})) {
      out.append(py::make_tuple(c.name, c.residual, c.tolerance, c.pass));
    }
    return out;
  });
}
