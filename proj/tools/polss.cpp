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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polss/errors.hpp"
#include "polss/sweep.hpp"

namespace {

using namespace polss;
using nlohmann::ordered_json;

struct Options {
    double zeta = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    std::string solver = "analytic";
    std::vector<double> grid = {0.0, 10.0, 81.0, 0.0, 4.0, 81.0};
    std::string out;
    double j = 1.0;
    double delta = 0.0;
    double kappa = 1.0;
    double gamma = 1.0;
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    int nmax = 4;
    double t_final = 0.0;
    double dt = 1e-2;
    unsigned workers = 1;
    int sample_every = 10;
};

DimensionlessParams dimensionless(const Options& o) { return {o.zeta, o.xi1, o.xi2}; }

PhysicalParams physical(const Options& o) {
    PhysicalParams p;
    p.j = o.j;
    p.delta = o.delta;
    p.kappa = o.kappa;
    p.gamma = o.gamma;
    p.alpha = cplx(o.alpha_re, o.alpha_im);
    p.n_max = o.nmax;
    return p;
}

int grid_steps(double v, const char* what) {
    if (!(v >= 1.0) || v != std::floor(v)) throw InvalidArgument(std::string(what) + " steps must be a positive integer");
    return static_cast<int>(v);
}

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json params_json(const DimensionlessParams& d) { return {{"zeta", d.zeta}, {"xi1", d.xi1}, {"xi2", d.xi2}}; }

// Opens --out, or returns nullptr for stdout.
std::unique_ptr<std::ofstream> open_output(const std::string& path) {
    if (path.empty()) return nullptr;
    auto f = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*f) throw InvalidArgument("cannot write output file: " + path);
    return f;
}

void finish_output(std::ofstream* f, const std::string& path) {
    if (f == nullptr) return;
    f->flush();
    if (!*f) throw InvalidArgument("failed writing output file: " + path);
}

int exit_code(const Error& e) {
    if (dynamic_cast<const NotEntangled*>(&e) != nullptr) return 4;
    if (dynamic_cast<const NumericalError*>(&e) != nullptr) return 3;
    return 2;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int run_steady(const Options& o) {
    const auto r = cmd_steady(dimensionless(o), parse_solver(o.solver));
    ordered_json j;
    j["params"] = params_json(r.params);
    j["solver"] = std::string(solver_name(r.solver));
    j["rho"] = matrix_json(r.rho.data());
    j["concurrence"] = r.concurrence;
    j["negativity"] = r.negativity;
    j["purity"] = r.purity;
    j["residual"] = r.residual;
    j["equation_residual"] = r.equation_residual;
    if (r.discrepancy) j["discrepancy"] = *r.discrepancy;
    print_json(j);
    return 0;
}

int run_sweep(const Options& o) {
    SweepConfig cfg;
    cfg.zeta = {o.grid[0], o.grid[1], grid_steps(o.grid[2], "zeta")};
    cfg.xi1 = {o.grid[3], o.grid[4], grid_steps(o.grid[5], "xi1")};
    cfg.xi2 = o.xi2;
    cfg.solver = parse_solver(o.solver);
    cfg.workers = o.workers;
    cfg.validate();

    auto file = open_output(o.out);
    const auto records = cmd_sweep(cfg);
    write_sweep_csv(file ? *file : std::cout, records);
    finish_output(file.get(), o.out);

    const auto& best = records[sweep_argmax(records)];
    auto& summary = file ? std::cout : std::cerr;
    summary << "argmax concurrence " << format_double(best.concurrence) << " at zeta=" << format_double(best.zeta)
            << " xi1=" << format_double(best.xi1) << " xi2=" << format_double(best.xi2) << '\n';
    return 0;
}

int run_witness(const Options& o) {
    const auto r = cmd_witness(dimensionless(o), o.workers);
    ordered_json coeffs;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const std::string key = std::string(pauli_name(static_cast<Pauli>(a))) + "," +
                                    std::string(pauli_name(static_cast<Pauli>(b)));
            coeffs[key] = r.witness.coefficients[a][b];
        }
    }
    ordered_json dominant = ordered_json::array();
    for (const auto& [a, b] : r.dominant) {
        dominant.push_back({std::string(pauli_name(a)), std::string(pauli_name(b))});
    }
    ordered_json j;
    j["params"] = params_json(r.params);
    j["normalization"] = r.normalization;
    j["coefficients"] = coeffs;
    j["expectation"] = r.witness.expectation;
    j["concurrence"] = r.concurrence;
    j["negativity"] = r.negativity;
    j["product_samples"] = {{"pure", r.samples.pure_count},
                            {"mixtures", r.samples.mixture_count},
                            {"min_pure", r.samples.min_pure},
                            {"min_mixture", r.samples.min_mixture}};
    j["threshold"] = r.threshold;
    j["dominant"] = dominant;
    print_json(j);
    return 0;
}

int run_validate(const Options& o) {
    const auto r = cmd_validate(physical(o), o.t_final, o.dt > 0.0 ? o.dt : 1e-3);
    ordered_json j;
    j["physical"] = {{"j", r.params.j},
                     {"delta", r.params.delta},
                     {"kappa", r.params.kappa},
                     {"gamma", r.params.gamma},
                     {"alpha", complex_json(r.params.alpha)},
                     {"nmax", r.params.n_max}};
    j["mapped"] = params_json(r.mapped);
    j["kappa_over_j"] = r.kappa_over_j;
    j["trace_distance"] = r.trace_distance;
    j["a_full"] = complex_json(r.a_full);
    j["a_adiabatic"] = complex_json(r.a_adiabatic);
    j["amplitude_error"] = r.amplitude_error;
    j["truncation_shift"] = r.truncation_shift;
    j["truncation_converged"] = r.truncation_converged;
    if (r.relaxation_distance) j["relaxation_distance"] = *r.relaxation_distance;
    j["rho_full_reduced"] = matrix_json(r.rho_full_reduced.data());
    j["rho_effective"] = matrix_json(r.rho_effective.data());
    print_json(j);
    return 0;
}

int run_dynamics(const Options& o) {
    if (!(o.t_final > 0.0)) throw InvalidArgument("dynamics needs --t-final > 0");
    auto file = open_output(o.out);
    const auto rows = cmd_dynamics(dimensionless(o), o.t_final, o.dt, o.sample_every);
    write_dynamics_csv(file ? *file : std::cout, rows);
    finish_output(file.get(), o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state entanglement of two driven polaritonic qubits"};
    app.set_config("--config", "", "flat key = value file; keys match the long flag names");
    app.require_subcommand(1);

    Options o;
    app.add_option("--zeta", o.zeta, "exchange coupling");
    app.add_option("--xi1", o.xi1, "drive, real part");
    app.add_option("--xi2", o.xi2, "drive, imaginary part");
    app.add_option("--solver", o.solver, "analytic | numeric | both")->capture_default_str();
    app.add_option("--grid", o.grid, "zeta_min,zeta_max,zeta_steps,xi1_min,xi1_max,xi1_steps")
        ->expected(6)
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--out", o.out, "output CSV path (default stdout)");
    app.add_option("--j", o.j, "mode-qubit hopping")->capture_default_str();
    app.add_option("--delta", o.delta, "mode detuning")->capture_default_str();
    app.add_option("--kappa", o.kappa, "mode decay rate")->capture_default_str();
    app.add_option("--gamma", o.gamma, "qubit decay rate")->capture_default_str();
    app.add_option("--alpha-re", o.alpha_re, "mode drive, real part");
    app.add_option("--alpha-im", o.alpha_im, "mode drive, imaginary part");
    app.add_option("--nmax", o.nmax, "photon-number cutoff")->capture_default_str();
    app.add_option("--t-final", o.t_final, "evolution time");
    app.add_option("--dt", o.dt, "RK4 step")->capture_default_str();
    app.add_option("--workers", o.workers, "worker threads")->capture_default_str();
    app.add_option("--sample-every", o.sample_every, "dynamics output stride in steps")->capture_default_str();

    auto* steady = app.add_subcommand("steady", "steady state and entanglement measures");
    auto* sweep = app.add_subcommand("sweep", "concurrence over a (zeta, xi1) grid as CSV");
    auto* witness = app.add_subcommand("witness", "entanglement witness in the Pauli basis");
    auto* validate = app.add_subcommand("validate", "full three-subsystem model against the effective model");
    auto* dynamics = app.add_subcommand("dynamics", "time series from |gg> as CSV");
    for (auto* sub : {steady, sweep, witness, validate, dynamics}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*steady) return run_steady(o);
        if (*sweep) return run_sweep(o);
        if (*witness) return run_witness(o);
        if (*validate) return run_validate(o);
        if (*dynamics) return run_dynamics(o);
    } catch (const Error& e) {
        std::cerr << "polss: " << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "polss: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
