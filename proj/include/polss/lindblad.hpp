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

#include <functional>

#include "polss/model.hpp"
#include "polss/qops.hpp"

namespace polss {

/// Superoperator acting on column-stacked density matrices,
/// vec(A rho B) = (B^T kron A) vec(rho).
struct Liouvillian {
    HilbertSpace space;
    Matrix matrix;
};

struct SteadyStateResult {
    DensityMatrix rho;
    double residual;  // ||L vec(rho)||_2
    double gap;       // second-smallest singular value of L
};

inline constexpr double kSteadyResidualTol = 1e-9;
inline constexpr double kSteadyGapTol = 1e-8;

Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, int dim);

Liouvillian build_liouvillian(const LindbladModel& m);

/// Replaces the first row of L with the trace functional and solves
/// L' vec(rho) = e_0. Throws NumericalError when the null space is not one
/// dimensional (gap below kSteadyGapTol) or the solution fails validation.
SteadyStateResult steady_state(const Liouvillian& l);

/// rho, t, |Tr rho - 1|. Called at t = 0, every `sample_every` steps and at the final time.
using EvolveObserver = std::function<void(double t, const Matrix& rho, double trace_drift)>;

struct EvolveOptions {
    int sample_every = 0;  // 0: only the first and last samples
    double abort_drift = 1e-6;
};

/// Fixed-step RK4 on the master equation in matrix form. The state is
/// re-Hermitized once per step; the trace is monitored but never rescaled.
DensityMatrix evolve(const LindbladModel& m, const DensityMatrix& rho0, double t_final, double dt,
                     const EvolveObserver& observer = {}, EvolveOptions options = {});

}  // namespace polss
