// Copyright 2026 The polss Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polss/analytic.hpp"
#include "polss/entangle.hpp"
#include "polss/errors.hpp"
#include "polss/lindblad.hpp"
#include "polss/model.hpp"
#include "polss/sweep.hpp"

namespace py = pybind11;
using namespace polss;

namespace {

DensityMatrix two_qubit_state(const Matrix& m) { return DensityMatrix(Operator(two_qubit_space(), m)); }

py::dict record_dict(const SweepRecord& r) {
    py::dict d;
    d["zeta"] = r.zeta;
    d["xi1"] = r.xi1;
    d["xi2"] = r.xi2;
    d["concurrence"] = r.concurrence;
    d["negativity"] = r.negativity;
    d["purity"] = r.purity;
    d["pop_ee"] = r.pop_ee;
    d["pop_ge"] = r.pop_ge;
    d["pop_eg"] = r.pop_eg;
    d["pop_gg"] = r.pop_gg;
    d["residual"] = r.residual;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Steady-state entanglement of two driven polaritonic qubits";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<NotEntangled>(m, "NotEntangled", base.ptr());

    m.def(
        "closed_form",
        [](double zeta, double xi1) {
            const auto p = closed_form(zeta, xi1);
            py::dict d;
            const auto values = p.to_array();
            for (std::size_t i = 0; i < values.size(); ++i) d[py::str(std::string(RhoParametrization::kNames[i]))] = values[i];
            return d;
        },
        py::arg("zeta"), py::arg("xi1"));

    m.def(
        "closed_form_matrix", [](double zeta, double xi1) { return to_density_matrix(closed_form(zeta, xi1)).data(); },
        py::arg("zeta"), py::arg("xi1"));

    m.def(
        "steady_state",
        [](double zeta, double xi1, double xi2, const std::string& solver) {
            const auto r = cmd_steady({zeta, xi1, xi2}, parse_solver(solver));
            py::dict d;
            d["rho"] = r.rho.data();
            d["concurrence"] = r.concurrence;
            d["negativity"] = r.negativity;
            d["purity"] = r.purity;
            d["residual"] = r.residual;
            d["equation_residual"] = r.equation_residual;
            d["discrepancy"] = r.discrepancy ? py::cast(*r.discrepancy) : py::none();
            return d;
        },
        py::arg("zeta"), py::arg("xi1"), py::arg("xi2") = 0.0, py::arg("solver") = "numeric");

    m.def(
        "concurrence", [](const Matrix& rho) { return concurrence(two_qubit_state(rho)); }, py::arg("rho"));
    m.def(
        "negativity", [](const Matrix& rho) { return negativity(two_qubit_state(rho)); }, py::arg("rho"));

    m.def(
        "witness",
        [](double zeta, double xi1, double xi2, unsigned workers) {
            const auto r = cmd_witness({zeta, xi1, xi2}, workers);
            py::dict coeffs;
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    coeffs[py::make_tuple(std::string(pauli_name(static_cast<Pauli>(a))),
                                          std::string(pauli_name(static_cast<Pauli>(b))))] =
                        r.witness.coefficients[a][b];
                }
            }
            py::list dominant;
            for (const auto& [a, b] : r.dominant) {
                dominant.append(py::make_tuple(std::string(pauli_name(a)), std::string(pauli_name(b))));
            }
            py::dict d;
            d["operator"] = r.witness.op.data();
            d["coefficients"] = coeffs;
            d["expectation"] = r.witness.expectation;
            d["min_product_value"] = r.samples.min_value();
            d["dominant"] = dominant;
            d["normalization"] = r.normalization;
            return d;
        },
        py::arg("zeta"), py::arg("xi1"), py::arg("xi2") = 0.0, py::arg("workers") = 1);

    m.def(
        "map_physical",
        [](double j, double delta, double kappa, double gamma, cplx alpha) {
            PhysicalParams p;
            p.j = j;
            p.delta = delta;
            p.kappa = kappa;
            p.gamma = gamma;
            p.alpha = alpha;
            const auto d = map_physical(p);
            return py::make_tuple(d.zeta, d.xi1, d.xi2);
        },
        py::arg("j"), py::arg("delta"), py::arg("kappa"), py::arg("gamma"), py::arg("alpha") = cplx(0.0, 0.0));

    m.def(
        "sweep",
        [](double zmin, double zmax, int nz, double xmin, double xmax, int nx, double xi2, const std::string& solver,
           unsigned workers) {
            SweepConfig cfg;
            cfg.zeta = {zmin, zmax, nz};
            cfg.xi1 = {xmin, xmax, nx};
            cfg.xi2 = xi2;
            cfg.solver = parse_solver(solver);
            cfg.workers = workers;
            std::vector<SweepRecord> records;
            {
                py::gil_scoped_release release;
                records = cmd_sweep(cfg);
            }
            py::list out;
            for (const auto& r : records) out.append(record_dict(r));
            return out;
        },
        py::arg("zeta_min") = 0.0, py::arg("zeta_max") = 10.0, py::arg("zeta_steps") = 81, py::arg("xi1_min") = 0.0,
        py::arg("xi1_max") = 4.0, py::arg("xi1_steps") = 81, py::arg("xi2") = 0.0, py::arg("solver") = "analytic",
        py::arg("workers") = 1);

    m.def(
        "validate",
        [](double j, double delta, double kappa, double gamma, cplx alpha, int n_max, double t_final) {
            PhysicalParams p;
            p.j = j;
            p.delta = delta;
            p.kappa = kappa;
            p.gamma = gamma;
            p.alpha = alpha;
            p.n_max = n_max;
            const auto r = cmd_validate(p, t_final);
            py::dict d;
            d["zeta"] = r.mapped.zeta;
            d["xi"] = r.mapped.xi();
            d["trace_distance"] = r.trace_distance;
            d["a_full"] = r.a_full;
            d["a_adiabatic"] = r.a_adiabatic;
            d["amplitude_error"] = r.amplitude_error;
            d["truncation_shift"] = r.truncation_shift;
            d["kappa_over_j"] = r.kappa_over_j;
            d["rho_full_reduced"] = r.rho_full_reduced.data();
            d["rho_effective"] = r.rho_effective.data();
            return d;
        },
        py::arg("j"), py::arg("delta"), py::arg("kappa"), py::arg("gamma"), py::arg("alpha") = cplx(0.0, 0.0),
        py::arg("n_max") = 4, py::arg("t_final") = 0.0);

    m.def(
        "dynamics",
        [](double zeta, double xi1, double xi2, double t_final, double dt, int sample_every) {
            const auto rows = cmd_dynamics({zeta, xi1, xi2}, t_final, dt, sample_every);
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["t"] = r.t;
                d["concurrence"] = r.concurrence;
                d["pop_ee"] = r.pop_ee;
                d["pop_ge"] = r.pop_ge;
                d["pop_eg"] = r.pop_eg;
                d["pop_gg"] = r.pop_gg;
                d["trace_drift"] = r.trace_drift;
                out.append(d);
            }
            return out;
        },
        py::arg("zeta"), py::arg("xi1"), py::arg("xi2") = 0.0, py::arg("t_final") = 50.0, py::arg("dt") = 1e-2,
        py::arg("sample_every") = 100);
}
