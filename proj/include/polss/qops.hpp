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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace polss {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsdFloor = -1e-8;
}  // namespace tol

/// Ordered tensor factorization of a finite Hilbert space. The first factor is
/// the slowest-varying index of the composite basis.
class HilbertSpace {
public:
    explicit HilbertSpace(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    std::size_t num_subsystems() const { return dims_.size(); }
    int dim(std::size_t subsystem) const { return dims_.at(subsystem); }
    int total_dim() const { return total_; }

    friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

private:
    std::vector<int> dims_;
    int total_ = 1;
};

/// Dense square complex matrix tagged with the space it acts on.
class Operator {
public:
    Operator(HilbertSpace space, Matrix data);

    static Operator identity(const HilbertSpace& space);
    static Operator zero(const HilbertSpace& space);

    const HilbertSpace& space() const { return space_; }
    const Matrix& data() const { return data_; }
    int dim() const { return space_.total_dim(); }
    cplx operator()(int row, int col) const { return data_(row, col); }

    Operator adjoint() const { return {space_, data_.adjoint()}; }
    cplx trace() const { return data_.trace(); }

    /// Largest elementwise |m - m^dagger|.
    double hermiticity_error() const;
    bool is_hermitian(double tol = tol::kHermitian) const { return hermiticity_error() <= tol; }

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(cplx s);

    friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
    friend Operator operator*(Operator lhs, cplx s) { return lhs *= s; }
    friend Operator operator*(cplx s, Operator rhs) { return rhs *= s; }
    friend Operator operator*(const Operator& lhs, const Operator& rhs);

private:
    HilbertSpace space_;
    Matrix data_;
};

/// An Operator that is Hermitian, unit-trace and positive semidefinite within
/// the library tolerances. Construction validates and throws NumericalError.
class DensityMatrix {
public:
    explicit DensityMatrix(Operator op);
    DensityMatrix(HilbertSpace space, Matrix data) : DensityMatrix(Operator(std::move(space), std::move(data))) {}

    /// Projector onto a (normalized on the fly) pure state.
    static DensityMatrix pure(const HilbertSpace& space, const Vector& psi);

    const Operator& op() const { return op_; }
    const Matrix& data() const { return op_.data(); }
    const HilbertSpace& space() const { return op_.space(); }
    int dim() const { return op_.dim(); }

    double purity() const;

private:
    Operator op_;
};

Operator kron(const Operator& a, const Operator& b);

/// Transposes the indices of one tensor factor. Works for any factor dimension.
Operator partial_transpose(const Operator& m, std::size_t subsystem);
inline Operator partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
    return partial_transpose(rho.op(), subsystem);
}

/// Traces out every factor not listed in `keep`; kept factors retain their order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
    return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

struct HermitianEigen {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // column i pairs with values(i)
};

HermitianEigen eig_hermitian(const Operator& m);

/// Full complex spectrum of a general square matrix (no ordering guarantee).
Vector eig_general(const Operator& m);

/// Tr[m rho].
cplx expectation_value(const Operator& m, const DensityMatrix& rho);

/// Half the trace norm of the difference.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double frobenius_distance(const Operator& a, const Operator& b);

/// Single-qubit operators in the {|e>, |g>} basis (excited state first).
namespace qubit {
HilbertSpace space();
Operator identity();
Operator sigma_x();
Operator sigma_y();
Operator sigma_z();
/// |g><e|
Operator lowering();
}  // namespace qubit

/// Truncated bosonic mode with Fock states |0>..|n_max>.
namespace boson {
HilbertSpace space(int n_max);
Operator annihilation(int n_max);
Operator number(int n_max);
}  // namespace boson

}  // namespace polss
