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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polss/analytic.hpp"
#include "polss/entangle.hpp"
#include "polss/lindblad.hpp"
#include "polss/model.hpp"

namespace polss {

enum class Solver { analytic, numeric, both };

Solver parse_solver(std::string_view name);
std::string_view solver_name(Solver s);

/// Inclusive uniform grid; steps == 1 yields just `min`.
struct GridRange {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    double at(int i) const;
    void validate(std::string_view what) const;
};

struct SweepConfig {
    GridRange zeta{0.0, 10.0, 81};
    GridRange xi1{0.0, 4.0, 81};
    double xi2 = 0.0;
    Solver solver = Solver::analytic;
    unsigned workers = 1;

    void validate() const;
};

struct SweepRecord {
    double zeta = 0, xi1 = 0, xi2 = 0;
    double concurrence = 0, negativity = 0, purity = 0;
    double pop_ee = 0, pop_ge = 0, pop_eg = 0, pop_gg = 0;
    double residual = 0;

    /// Populations sum to 1 within 1e-9 and purity lies in [1/4, 1].
    bool satisfies_invariants() const;
};

/// Stationary state of the effective model. `analytic` uses the closed form on
/// the xi2 = 0 line and the stationarity equations on the xi1 = 0 line; other
/// points need the numeric solver.
DensityMatrix effective_steady_state(const DimensionlessParams& d, Solver solver);

struct SteadyReport {
    DimensionlessParams params;
    Solver solver;
    DensityMatrix rho;
    double concurrence;
    double negativity;
    double purity;
    double residual;           // ||L vec(rho)||_2 against the effective Liouvillian
    double equation_residual;  // norm of the sixteen stationarity equations
    std::optional<double> discrepancy;  // analytic vs numeric Frobenius distance (solver = both)
};

SteadyReport cmd_steady(const DimensionlessParams& d, Solver solver);

/// One row per grid point, zeta-major. Results do not depend on cfg.workers.
std::vector<SweepRecord> cmd_sweep(const SweepConfig& cfg);

/// First record with the largest concurrence.
std::size_t sweep_argmax(std::span<const SweepRecord> records);

struct WitnessReport {
    DimensionlessParams params;
    Witness witness;
    double concurrence;
    double negativity;
    ProductSampleReport samples;
    double threshold;
    std::vector<std::pair<Pauli, Pauli>> dominant;
    std::string normalization;  // how W was scaled before thresholding
};

/// Throws NotEntangled when the steady state has a positive partial transpose.
WitnessReport cmd_witness(const DimensionlessParams& d, unsigned workers = 1, double threshold = 0.05);

struct ValidateReport {
    PhysicalParams params;
    DimensionlessParams mapped;
    DensityMatrix rho_full_reduced;
    DensityMatrix rho_effective;
    double trace_distance;
    cplx a_full;
    cplx a_adiabatic;
    double amplitude_error;
    double truncation_shift;  // max |delta rho_qubits| between n_max and n_max + 2
    bool truncation_converged;
    double kappa_over_j;
    std::optional<double> relaxation_distance;  // full model, t_final > 0 only
};

inline constexpr double kTruncationTol = 1e-6;

/// Throws NumericalError if the qubit state shifts by >= kTruncationTol when
/// n_max grows by two.
ValidateReport cmd_validate(const PhysicalParams& p, double t_final = 0.0, double dt = 1e-3);

struct DynamicsRow {
    double t;
    double concurrence;
    double pop_ee, pop_ge, pop_eg, pop_gg;
    double trace_drift;
};

/// Effective-model trajectory from |gg><gg|.
std::vector<DynamicsRow> cmd_dynamics(const DimensionlessParams& d, double t_final, double dt, int sample_every);

/// %.17g formatting, locale independent.
std::string format_double(double v);

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_dynamics_csv(std::ostream& out, std::span<const DynamicsRow> rows);

}  // namespace polss
