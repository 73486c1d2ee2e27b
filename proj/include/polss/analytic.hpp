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

#include <array>

#include <Eigen/Dense>

#include "polss/qops.hpp"

namespace polss {

/// Fifteen real parameters of a two-qubit density matrix in the basis
/// {|ee>, |ge>, |eg>, |gg>}:
///
///   [ A        B1+iB2   C1+iC2   D1+iD2 ]
///   [ .        E        F1+iF2   G1+iG2 ]
///   [ .        .        H        I1+iI2 ]
///   [ .        .        .        1-A-E-H]
///
/// with the lower triangle the Hermitian completion.
struct RhoParametrization {
    double A = 0, B1 = 0, B2 = 0, C1 = 0, C2 = 0, D1 = 0, D2 = 0, E = 0;
    double F1 = 0, F2 = 0, G1 = 0, G2 = 0, H = 0, I1 = 0, I2 = 0;

    static constexpr std::size_t kSize = 15;
    static constexpr std::array<const char*, kSize> kNames = {"A",  "B1", "B2", "C1", "C2", "D1", "D2", "E",
                                                              "F1", "F2", "G1", "G2", "H",  "I1", "I2"};

    std::array<double, kSize> to_array() const;
    static RhoParametrization from_array(const std::array<double, kSize>& v);
};

/// Assembles the 4x4 matrix; throws NumericalError if it is not a valid state.
DensityMatrix to_density_matrix(const RhoParametrization& p);

/// Reads the upper triangle of a two-qubit state back into the parametrization.
RhoParametrization from_density_matrix(const DensityMatrix& rho);

/// Exact stationary state for xi2 = 0, d = zeta^2 + (1 + 2 xi1^2)^2.
RhoParametrization closed_form(double zeta, double xi1);

/// Real linear system coeffs * p = rhs equivalent to L(rho) = M = 0 for the
/// effective model. Rows walk the upper triangle of M row by row: M_11,
/// Re/Im M_12, Re/Im M_13, Re/Im M_14, M_22, ..., M_44. Sixteen equations in
/// fifteen unknowns ordered as in RhoParametrization::kNames.
struct StationarityEquations {
    Eigen::Matrix<double, 16, 15> coeffs;
    Eigen::Matrix<double, 16, 1> rhs;
};

StationarityEquations stationarity_equations(double zeta, double xi1, double xi2);

/// Least-squares solve of the stationarity equations. Throws NumericalError if
/// the system has rank < 15 or its residual exceeds 1e-10.
RhoParametrization solve_linear_system(double zeta, double xi1, double xi2);

/// Euclidean norm of the sixteen equation residuals.
double residual(double zeta, double xi1, double xi2, const RhoParametrization& p);

}  // namespace polss
