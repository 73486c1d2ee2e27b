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

#include "polss/qops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "polss/errors.hpp"

namespace polss {

HilbertSpace::HilbertSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw InvalidArgument("HilbertSpace: empty dimension list");
    }
    for (int d : dims_) {
        if (d < 1) {
            throw InvalidArgument("HilbertSpace: subsystem dimension must be >= 1, got " + std::to_string(d));
        }
        total_ *= d;
    }
}

Operator::Operator(HilbertSpace space, Matrix data) : space_(std::move(space)), data_(std::move(data)) {
    const auto n = space_.total_dim();
    if (data_.rows() != n || data_.cols() != n) {
        throw InvalidArgument("Operator: matrix is " + std::to_string(data_.rows()) + "x" +
                              std::to_string(data_.cols()) + " but space has dimension " + std::to_string(n));
    }
}

Operator Operator::identity(const HilbertSpace& space) {
    return {space, Matrix::Identity(space.total_dim(), space.total_dim())};
}

Operator Operator::zero(const HilbertSpace& space) {
    return {space, Matrix::Zero(space.total_dim(), space.total_dim())};
}

double Operator::hermiticity_error() const {
    return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

Operator& Operator::operator+=(const Operator& rhs) {
    if (!(space_ == rhs.space_)) throw InvalidArgument("Operator +: space mismatch");
    data_ += rhs.data_;
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    if (!(space_ == rhs.space_)) throw InvalidArgument("Operator -: space mismatch");
    data_ -= rhs.data_;
    return *this;
}

Operator& Operator::operator*=(cplx s) {
    data_ *= s;
    return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
    if (!(lhs.space_ == rhs.space_)) throw InvalidArgument("Operator *: space mismatch");
    return {lhs.space_, lhs.data_ * rhs.data_};
}

DensityMatrix::DensityMatrix(Operator op) : op_(std::move(op)) {
    const double herm = op_.hermiticity_error();
    if (herm > tol::kHermitian) {
        throw NumericalError("DensityMatrix: not Hermitian (max |rho - rho^dag| = " + std::to_string(herm) + ")");
    }
    const double tr_err = std::abs(op_.trace() - 1.0);
    if (tr_err > tol::kTrace) {
        throw NumericalError("DensityMatrix: trace deviates from 1 by " + std::to_string(tr_err));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(op_.data(), Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < tol::kPsdFloor) {
        throw NumericalError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
    }
}

DensityMatrix DensityMatrix::pure(const HilbertSpace& space, const Vector& psi) {
    const double norm = psi.norm();
    if (norm == 0.0) throw InvalidArgument("DensityMatrix::pure: zero vector");
    const Vector v = psi / norm;
    return DensityMatrix(Operator(space, v * v.adjoint()));
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return data().squaredNorm();
}

Operator kron(const Operator& a, const Operator& b) {
    std::vector<int> dims = a.space().dims();
    dims.insert(dims.end(), b.space().dims().begin(), b.space().dims().end());
    const auto na = a.dim();
    const auto nb = b.dim();
    Matrix out(na * nb, na * nb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.data();
        }
    }
    return {HilbertSpace(std::move(dims)), std::move(out)};
}

namespace {

// Product of the dimensions after `subsystem`: the stride of its digit.
int stride_of(const HilbertSpace& space, std::size_t subsystem) {
    int stride = 1;
    for (std::size_t k = subsystem + 1; k < space.num_subsystems(); ++k) stride *= space.dim(k);
    return stride;
}

}  // namespace

Operator partial_transpose(const Operator& m, std::size_t subsystem) {
    const auto& space = m.space();
    if (subsystem >= space.num_subsystems()) {
        throw InvalidArgument("partial_transpose: subsystem index " + std::to_string(subsystem) + " out of range");
    }
    const int d = space.dim(subsystem);
    const int stride = stride_of(space, subsystem);
    const int n = m.dim();
    Matrix out(n, n);
    for (int r = 0; r < n; ++r) {
        const int dr = (r / stride) % d;
        for (int c = 0; c < n; ++c) {
            const int dc = (c / stride) % d;
            out(r + (dc - dr) * stride, c + (dr - dc) * stride) = m(r, c);
        }
    }
    return {space, std::move(out)};
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep_in) {
    const auto& space = rho.space();
    if (keep_in.empty()) throw InvalidArgument("partial_trace: keep set is empty");
    std::vector<std::size_t> keep(keep_in.begin(), keep_in.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.back() >= space.num_subsystems()) {
        throw InvalidArgument("partial_trace: subsystem index " + std::to_string(keep.back()) + " out of range");
    }

    const std::size_t ns = space.num_subsystems();
    std::vector<bool> kept(ns, false);
    std::vector<int> kept_dims;
    for (auto k : keep) {
        kept[k] = true;
        kept_dims.push_back(space.dim(k));
    }
    HilbertSpace reduced(kept_dims);

    // Per full index: (index into reduced space, index into traced-out space).
    const int n = rho.dim();
    std::vector<int> kept_index(n), traced_index(n);
    for (int i = 0; i < n; ++i) {
        int rem = i, stride_all = n, ki = 0, ti = 0;
        for (std::size_t s = 0; s < ns; ++s) {
            stride_all /= space.dim(s);
            const int digit = rem / stride_all;
            rem %= stride_all;
            if (kept[s]) {
                ki = ki * space.dim(s) + digit;
            } else {
                ti = ti * space.dim(s) + digit;
            }
        }
        kept_index[i] = ki;
        traced_index[i] = ti;
    }

    Matrix out = Matrix::Zero(reduced.total_dim(), reduced.total_dim());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (traced_index[r] == traced_index[c]) out(kept_index[r], kept_index[c]) += rho.data()(r, c);
        }
    }
    return DensityMatrix(Operator(std::move(reduced), std::move(out)));
}

HermitianEigen eig_hermitian(const Operator& m) {
    const double herm = m.hermiticity_error();
    if (herm > tol::kHermitian) {
        throw InvalidArgument("eig_hermitian: input is not Hermitian (max deviation " + std::to_string(herm) + ")");
    }
    // Eigen reads only the lower triangle; feed it the exact Hermitian part.
    const Matrix h = 0.5 * (m.data() + m.data().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) throw NumericalError("eig_hermitian: eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

Vector eig_general(const Operator& m) {
    Eigen::ComplexEigenSolver<Matrix> es(m.data(), false);
    if (es.info() != Eigen::Success) throw NumericalError("eig_general: eigensolver did not converge");
    return es.eigenvalues();
}

cplx expectation_value(const Operator& m, const DensityMatrix& rho) {
    if (!(m.space() == rho.space())) throw InvalidArgument("expectation_value: space mismatch");
    return (m.data() * rho.data()).trace();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (!(a.space() == b.space())) throw InvalidArgument("trace_distance: space mismatch");
    const auto eig = eig_hermitian(a.op() - b.op());
    return 0.5 * eig.values.cwiseAbs().sum();
}

double frobenius_distance(const Operator& a, const Operator& b) {
    if (!(a.space() == b.space())) throw InvalidArgument("frobenius_distance: space mismatch");
    return (a.data() - b.data()).norm();
}

namespace qubit {

HilbertSpace space() { return HilbertSpace({2}); }

Operator identity() { return Operator::identity(space()); }

Operator sigma_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return {space(), m};
}

Operator sigma_y() {
    Matrix m(2, 2);
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return {space(), m};
}

Operator sigma_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return {space(), m};
}

Operator lowering() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return {space(), m};
}

}  // namespace qubit

namespace boson {

HilbertSpace space(int n_max) {
    if (n_max < 0) throw InvalidArgument("boson::space: n_max must be >= 0");
    return HilbertSpace({n_max + 1});
}

Operator annihilation(int n_max) {
    const auto hs = space(n_max);
    Matrix m = Matrix::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {hs, m};
}

Operator number(int n_max) {
    const auto hs = space(n_max);
    Matrix m = Matrix::Zero(n_max + 1, n_max + 1);
    for (int n = 0; n <= n_max; ++n) m(n, n) = n;
    return {hs, m};
}

}  // namespace boson

}  // namespace polss
