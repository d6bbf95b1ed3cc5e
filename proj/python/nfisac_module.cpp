// SPDX-License-Identifier: Apache-2.0
//
// nf-isac: near-field ISAC channel models and rate analysis
// Copyright (C) 2026 The nf-isac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nfisac/channels.hpp"
#include "nfisac/dl_rates.hpp"
#include "nfisac/errors.hpp"
#include "nfisac/geometry.hpp"
#include "nfisac/oracles.hpp"
#include "nfisac/pareto.hpp"
#include "nfisac/regions.hpp"
#include "nfisac/ul_rates.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nfisac;

namespace
{

py::array_t<std::complex<double>> gains_array(const ChannelVector &h)
{
    py::array_t<std::complex<double>> out({h.geometry.n_z(), h.geometry.n_y()});
    std::copy(h.gains.begin(), h.gains.end(), out.mutable_data());
    return out;
}

py::tuple pair_tuple(const RatePair &r) { return py::make_tuple(r.sr, r.cr); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Near-field ISAC channel models and rate analysis";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::enum_<ChannelModel>(m, "ChannelModel")
        .value("Accurate", ChannelModel::Accurate)
        .value("NoPolar", ChannelModel::NoPolar)
        .value("UPW", ChannelModel::UPW)
        .value("USW", ChannelModel::USW)
        .value("NUSW", ChannelModel::NUSW);

    py::enum_<NormPolicy>(m, "NormPolicy")
        .value("PreferClosedForm", NormPolicy::PreferClosedForm)
        .value("ElementSum", NormPolicy::ElementSum);

    py::enum_<ParetoRegime>(m, "ParetoRegime")
        .value("CcEndpoint", ParetoRegime::CcEndpoint)
        .value("Interior", ParetoRegime::Interior)
        .value("ScEndpoint", ParetoRegime::ScEndpoint);

    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def(py::init<int, int, double, double, double>(), py::arg("n_y"), py::arg("n_z"), py::arg("spacing"),
             py::arg("element_area"), py::arg("wavelength"))
        .def_property_readonly("n_y", &ArrayGeometry::n_y)
        .def_property_readonly("n_z", &ArrayGeometry::n_z)
        .def_property_readonly("spacing", &ArrayGeometry::spacing)
        .def_property_readonly("element_area", &ArrayGeometry::element_area)
        .def_property_readonly("wavelength", &ArrayGeometry::wavelength)
        .def_property_readonly("size", &ArrayGeometry::size)
        .def("aor", &ArrayGeometry::aor)
        .def("with_size", &ArrayGeometry::with_size);

    py::class_<Placement>(m, "Placement")
        .def(py::init<double, double, double>(), py::arg("r"), py::arg("theta"), py::arg("phi"))
        .def_property_readonly("r", &Placement::r)
        .def_property_readonly("theta", &Placement::theta)
        .def_property_readonly("phi", &Placement::phi)
        .def("direction",
             [](const Placement &p)
             {
                 const Direction d = p.direction();
                 return py::make_tuple(d.psi, d.phi, d.omega);
             });

    m.def("element_distance", &element_distance, py::arg("geometry"), py::arg("placement"), py::arg("iy"),
          py::arg("iz"));

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_readwrite("p", &SystemParams::p)
        .def_readwrite("p_c", &SystemParams::p_c)
        .def_readwrite("p_s", &SystemParams::p_s)
        .def_readwrite("l_frame", &SystemParams::l_frame)
        .def_readwrite("alpha_s", &SystemParams::alpha_s)
        .def_readwrite("kappa", &SystemParams::kappa)
        .def_readwrite("iota", &SystemParams::iota)
        .def("validate", &SystemParams::validate);

    py::class_<ChannelVector>(m, "ChannelVector")
        .def_readonly("model", &ChannelVector::model)
        .def_property_readonly("gains", &gains_array, "gains as an (n_z, n_y) array")
        .def("norm_sq", &ChannelVector::norm_sq)
        .def("__len__", &ChannelVector::size);

    m.def("build_channel", &build_channel, py::arg("geometry"), py::arg("placement"), py::arg("model"),
          py::arg("threads") = 0);
    m.def("delta", &delta);
    m.def("delta_no_polar", &delta_no_polar);
    m.def("closed_form_norm_sq", &closed_form_norm_sq);
    m.def("norm_sq_bruteforce", &norm_sq_bruteforce);
    m.def("ccf", &ccf);

    m.def("cc_rates",
          [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
          { return pair_tuple(cc_rates(hc, hs, sp, policy)); },
          py::arg("hc"), py::arg("hs"), py::arg("sp"), py::arg("policy") = NormPolicy::PreferClosedForm,
          "(SR, CR) of the communication-centric design");
    m.def("sc_rates",
          [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
          { return pair_tuple(sc_rates(hc, hs, sp, policy)); },
          py::arg("hc"), py::arg("hs"), py::arg("sp"), py::arg("policy") = NormPolicy::PreferClosedForm,
          "(SR, CR) of the sensing-centric design");
    m.def("tau_rate_pair",
          [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, double tau)
          { return pair_tuple(tau_rate_pair(hc, hs, sp, tau)); });
    m.def("fdsac_rates",
          [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp)
          { return pair_tuple(fdsac_rates(link_stats(hc, hs, NormPolicy::ElementSum), sp)); });
    m.def("ul_cc_rates",
          [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp)
          { return pair_tuple(ul_cc_rates(hc, hs, sp, NormPolicy::ElementSum)); });
    m.def("ul_sc_rates",
          [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp)
          { return pair_tuple(ul_sc_rates(hc, hs, sp, NormPolicy::ElementSum)); });
    m.def("ul_cc_sr_lower", [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp)
          { return ul_cc_sr_lower(hc, hs, sp, NormPolicy::ElementSum); });
    m.def("ul_sc_cr_lower", [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp)
          { return ul_sc_cr_lower(hc, hs, sp, NormPolicy::ElementSum); });

    py::class_<ParetoSolution>(m, "ParetoSolution")
        .def_readonly("sigma", &ParetoSolution::sigma)
        .def_readonly("w", &ParetoSolution::w)
        .def_readonly("r_star", &ParetoSolution::r_star)
        .def_readonly("regime", &ParetoSolution::regime)
        .def_readonly("mu1", &ParetoSolution::mu1)
        .def_readonly("mu2", &ParetoSolution::mu2)
        .def_readonly("kkt_residual", &ParetoSolution::kkt_residual)
        .def_property_readonly("achieved", [](const ParetoSolution &s) { return pair_tuple(s.achieved); });
    m.def("solve_rate_profile", &solve_rate_profile, py::arg("hc"), py::arg("hs"), py::arg("sp"), py::arg("sigma"));

    m.def("downlink_isac_region",
          [](const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, int grid)
          {
              std::vector<std::pair<double, double>> out;
              for (const RatePair &p : downlink_isac_region(hc, hs, sp, grid).points)
                  out.emplace_back(p.sr, p.cr);
              return out;
          },
          py::arg("hc"), py::arg("hs"), py::arg("sp"), py::arg("grid") = 201);

    m.def("slope_estimate", &slope_estimate, py::arg("rate_fn"), py::arg("p_grid"));
    m.def("db_power_grid", &db_power_grid);
    m.def("db_to_linear", &db_to_linear);
}
