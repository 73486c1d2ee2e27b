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

#include "polss/analytic.hpp"

#include <cmath>
#include <sstream>

#include "polss/errors.hpp"

namespace polss {

std::array<double, RhoParametrization::kSize> RhoParametrization::to_array() const {
    return {A, B1, B2, C1, C2, D1, D2, E, F1, F2, G1, G2, H, I1, I2};
}

RhoParametrization RhoParametrization::from_array(const std::array<double, kSize>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11], v[12], v[13], v[14]};
}

DensityMatrix to_density_matrix(const RhoParametrization& p) {
    Matrix m(4, 4);
    const cplx b(p.B1, p.B2), c(p.C1, p.C2), d(p.D1, p.D2), f(p.F1, p.F2), g(p.G1, p.G2), i(p.I1, p.I2);
    // clang-format off
    m << p.A,          b,            c,            d,
         std::conj(b), p.E,          f,            g,
         std::conj(c), std::conj(f), p.H,          i,
         std::conj(d), std::conj(g), std::conj(i), 1.0 - p.A - p.E - p.H;
    // clang-format on
    return DensityMatrix(Operator(HilbertSpace({2, 2}), std::move(m)));
}

RhoParametrization from_density_matrix(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw InvalidArgument("from_density_matrix: expected a two-qubit state");
    const auto& m = rho.data();
    return {m(0, 0).real(), m(0, 1).real(), m(0, 1).imag(), m(0, 2).real(), m(0, 2).imag(),
            m(0, 3).real(), m(0, 3).imag(), m(1, 1).real(), m(1, 2).real(), m(1, 2).imag(),
            m(1, 3).real(), m(1, 3).imag(), m(2, 2).real(), m(2, 3).real(), m(2, 3).imag()};
}

RhoParametrization closed_form(double zeta, double xi1) {
    const double x2 = xi1 * xi1;
    const double x3 = x2 * xi1;
    const double x4 = x2 * x2;
    const double d = zeta * zeta + (1.0 + 2.0 * x2) * (1.0 + 2.0 * x2);

    RhoParametrization p;
    p.A = x4 / d;
    p.B1 = 0.0;
    p.B2 = -x3 / d;
    p.C1 = 0.0;
    p.C2 = -x3 / d;
    p.D1 = -x2 / d;
    p.D2 = zeta * x2 / d;
    p.E = (x2 + x4) / d;
    p.F1 = x2 / d;
    p.F2 = 0.0;
    p.G1 = -zeta * xi1 / d;
    p.G2 = -(xi1 + x3) / d;
    p.H = (x2 + x4) / d;
    p.I1 = -zeta * xi1 / d;
    p.I2 = -(xi1 + x3) / d;
    return p;
}

namespace {

enum Unknown : int { A, B1, B2, C1, C2, D1, D2, E, F1, F2, G1, G2, H, I1, I2 };

struct Term {
    double coeff;
    Unknown var;
};

}  // namespace

StationarityEquations stationarity_equations(double z, double x1, double x2) {
    StationarityEquations eq;
    eq.coeffs.setZero();
    eq.rhs.setZero();
    int row = 0;
    auto put = [&](std::initializer_list<Term> terms, double rhs = 0.0) {
        for (const auto& t : terms) eq.coeffs(row, t.var) += t.coeff;
        eq.rhs(row) = rhs;
        ++row;
    };

    // M_11
    put({{-4, A}, {2 * x2, B1}, {-2 * x1, B2}, {2 * x2, C1}, {-2 * x1, C2}});
    // Re, Im M_12
    put({{-x2, A}, {-3, B1}, {-z, C2}, {x2, D1}, {-x1, D2}, {x2, E}, {x2, F1}, {-x1, F2}});
    put({{x1, A}, {-3, B2}, {z, C1}, {x1, D1}, {x2, D2}, {-x1, E}, {-x1, F1}, {-x2, F2}});
    // Re, Im M_13
    put({{-x2, A}, {-z, B2}, {-3, C1}, {x2, D1}, {-x1, D2}, {x2, F1}, {x1, F2}, {x2, H}});
    put({{x1, A}, {z, B1}, {-3, C2}, {x1, D1}, {x2, D2}, {-x1, F1}, {x2, F2}, {-x1, H}});
    // Re, Im M_14. The B terms are -x2 B1 - x1 B2, mirroring the C terms.
    put({{-x2, B1}, {-x1, B2}, {-x2, C1}, {-x1, C2}, {-2, D1}, {x2, G1}, {x1, G2}, {x2, I1}, {x1, I2}});
    put({{x1, B1}, {-x2, B2}, {x1, C1}, {-x2, C2}, {-2, D2}, {-x1, G1}, {x2, G2}, {-x1, I1}, {x2, I2}});
    // M_22
    put({{2, A}, {-2 * x2, B1}, {2 * x1, B2}, {-2, E}, {-2 * z, F2}, {2 * x2, G1}, {-2 * x1, G2}});
    // Re, Im M_23
    put({{-x2, B1}, {x1, B2}, {-x2, C1}, {x1, C2}, {-2, F1}, {x2, G1}, {-x1, G2}, {x2, I1}, {-x1, I2}});
    put({{x1, B1}, {x2, B2}, {-x1, C1}, {-x2, C2}, {z, E}, {-2, F2}, {x1, G1}, {x2, G2}, {-z, H}, {-x1, I1},
         {-x2, I2}});
    // Re, Im M_24
    put({{-x2, A}, {2, C1}, {-x2, D1}, {x1, D2}, {-2 * x2, E}, {-x2, F1}, {-x1, F2}, {-1, G1}, {-x2, H}, {z, I2}},
        -x2);
    put({{x1, A}, {2, C2}, {-x1, D1}, {-x2, D2}, {2 * x1, E}, {x1, F1}, {-x2, F2}, {-1, G2}, {x1, H}, {-z, I1}},
        x1);
    // M_33
    put({{2, A}, {-2 * x2, C1}, {2 * x1, C2}, {2 * z, F2}, {-2, H}, {2 * x2, I1}, {-2 * x1, I2}});
    // Re, Im M_34
    put({{-x2, A}, {2, B1}, {-x2, D1}, {x1, D2}, {-x2, E}, {-x2, F1}, {x1, F2}, {z, G2}, {-2 * x2, H}, {-1, I1}},
        -x2);
    put({{x1, A}, {2, B2}, {-x1, D1}, {-x2, D2}, {x1, E}, {x1, F1}, {x2, F2}, {-z, G1}, {2 * x1, H}, {-1, I2}},
        x1);
    // M_44
    put({{2, E}, {-2 * x2, G1}, {2 * x1, G2}, {2, H}, {-2 * x2, I1}, {2 * x1, I2}});

    return eq;
}

RhoParametrization solve_linear_system(double zeta, double xi1, double xi2) {
    const auto eq = stationarity_equations(zeta, xi1, xi2);
    Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 16, 15>> qr(eq.coeffs);
    if (qr.rank() < 15) {
        std::ostringstream msg;
        msg << "solve_linear_system: rank " << qr.rank() << " < 15 at zeta=" << zeta << ", xi=(" << xi1 << ", "
            << xi2 << ")";
        throw NumericalError(msg.str());
    }
    const Eigen::Matrix<double, 15, 1> x = qr.solve(eq.rhs);
    const double res = (eq.coeffs * x - eq.rhs).norm();
    if (res > 1e-10) {
        std::ostringstream msg;
        msg << "solve_linear_system: inconsistent system, residual " << res;
        throw NumericalError(msg.str());
    }
    std::array<double, 15> v{};
    for (int i = 0; i < 15; ++i) v[i] = x(i);
    return RhoParametrization::from_array(v);
}

double residual(double zeta, double xi1, double xi2, const RhoParametrization& p) {
    const auto eq = stationarity_equations(zeta, xi1, xi2);
    const auto arr = p.to_array();
    const Eigen::Map<const Eigen::Matrix<double, 15, 1>> x(arr.data());
    return (eq.coeffs * x - eq.rhs).norm();
}

}  // namespace polss
