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

#include "polss/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "polss/errors.hpp"
#include "polss/model.hpp"

namespace polss {

namespace {

constexpr std::array<Pauli, 4> kPaulis = {Pauli::id, Pauli::x, Pauli::y, Pauli::z};

// Eigenvalues above this are treated as zero when testing for a negative
// partial transpose.
constexpr double kSpectrumNoise = 1e-14;

void require_two_qubit(const HilbertSpace& space, const char* who) {
    if (space.dims() != std::vector<int>{2, 2}) throw InvalidArgument(std::string(who) + ": expected a two-qubit operator");
}

}  // namespace

std::string_view pauli_name(Pauli p) {
    switch (p) {
        case Pauli::id: return "id";
        case Pauli::x: return "x";
        case Pauli::y: return "y";
        case Pauli::z: return "z";
    }
    return "?";
}

Operator pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::id: return qubit::identity();
        case Pauli::x: return qubit::sigma_x();
        case Pauli::y: return qubit::sigma_y();
        case Pauli::z: return qubit::sigma_z();
    }
    throw InvalidArgument("pauli_matrix: bad label");
}

Operator pauli_product(Pauli on_qubit1, Pauli on_qubit2) {
    return on_qubit(pauli_matrix(on_qubit1), 1) * on_qubit(pauli_matrix(on_qubit2), 2);
}

PauliCoefficients pauli_decompose(const Operator& w) {
    require_two_qubit(w.space(), "pauli_decompose");
    if (!w.is_hermitian()) throw InvalidArgument("pauli_decompose: input is not Hermitian");
    PauliCoefficients c{};
    for (auto j : kPaulis) {
        for (auto k : kPaulis) {
            c[static_cast<int>(j)][static_cast<int>(k)] = (w * pauli_product(j, k)).trace().real() / 4.0;
        }
    }
    return c;
}

Operator pauli_reconstruct(const PauliCoefficients& c) {
    Operator w = Operator::zero(two_qubit_space());
    for (auto j : kPaulis) {
        for (auto k : kPaulis) w += c[static_cast<int>(j)][static_cast<int>(k)] * pauli_product(j, k);
    }
    return w;
}

Operator spin_flip(const DensityMatrix& rho) {
    require_two_qubit(rho.space(), "spin_flip");
    const Matrix yy = kron(qubit::sigma_y(), qubit::sigma_y()).data();
    return {rho.space(), yy * rho.data().conjugate() * yy};
}

double concurrence(const DensityMatrix& rho) {
    require_two_qubit(rho.space(), "concurrence");
    // With rho = X X^dagger, the square roots of the eigenvalues of rho rho~ are
    // the singular values of X^T (sigma^y (x) sigma^y) X.
    const auto e = eig_hermitian(rho.op());
    const Matrix x = e.vectors * e.values.cwiseMax(0.0).cwiseSqrt().cast<cplx>().asDiagonal();
    const Matrix yy = kron(qubit::sigma_y(), qubit::sigma_y()).data();
    const Matrix m = x.transpose() * yy * x;
    const Eigen::VectorXd s = Eigen::JacobiSVD<Matrix>(m).singularValues();
    return std::clamp(s(0) - s(1) - s(2) - s(3), 0.0, 1.0);
}

double negativity(const DensityMatrix& rho) {
    require_two_qubit(rho.space(), "negativity");
    const auto eig = eig_hermitian(partial_transpose(rho, kQubit2Factor));
    double n = 0.0;
    for (double v : eig.values) {
        if (v < -kSpectrumNoise) n -= v;
    }
    return n;
}

double expectation(const Operator& w, const DensityMatrix& rho) { return (w * rho.op()).trace().real(); }

Witness construct_witness(const DensityMatrix& rho) {
    require_two_qubit(rho.space(), "construct_witness");
    const auto eig = eig_hermitian(partial_transpose(rho, kQubit2Factor));
    const double lowest = eig.values(0);
    if (!(lowest < -kSpectrumNoise)) {
        throw NotEntangled("construct_witness: partial transpose is positive semidefinite (lowest eigenvalue " +
                           std::to_string(lowest) + ")");
    }

    int degenerate = 1;
    while (degenerate < 4 && eig.values(degenerate) - lowest <= 1e-10) ++degenerate;
    Vector eta = eig.vectors.col(0);
    if (degenerate > 1) {
        const Matrix basis = eig.vectors.leftCols(degenerate);
        const Vector ee_projection = basis * basis.row(0).adjoint();
        if (ee_projection.norm() > 1e-12) eta = ee_projection / ee_projection.norm();
    }
    for (int i = 0; i < eta.size(); ++i) {
        if (std::abs(eta(i)) > 1e-12) {
            eta *= std::abs(eta(i)) / eta(i);
            break;
        }
    }

    Operator w = partial_transpose(Operator(rho.space(), eta * eta.adjoint()), kQubit2Factor);
    w *= 1.0 / w.data().norm();
    auto coeffs = pauli_decompose(w);
    const double value = expectation(w, rho);
    return {std::move(w), coeffs, value};
}

namespace {

Vector bloch_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
    const double cos_theta = u(rng);
    const double half = 0.5 * std::acos(cos_theta);
    Vector v(2);
    v << std::cos(half), std::polar(std::sin(half), phi(rng));
    return v;
}

Vector product_state(std::mt19937_64& rng) {
    const Vector q1 = bloch_state(rng);
    const Vector q2 = bloch_state(rng);
    // qubit 2 is the slow factor
    Vector v(4);
    for (int i2 = 0; i2 < 2; ++i2) {
        for (int i1 = 0; i1 < 2; ++i1) v(2 * i2 + i1) = q2(i2) * q1(i1);
    }
    return v;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

double quad(const Matrix& w, const Vector& v) { return v.dot(w * v).real(); }

template <class F>
double parallel_min(std::size_t count, unsigned workers, F&& value_of) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<double> mins(workers, std::numeric_limits<double>::infinity());
    auto run = [&](unsigned wid) {
        const std::size_t lo = count * wid / workers;
        const std::size_t hi = count * (wid + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) mins[wid] = std::min(mins[wid], value_of(i));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned wid = 0; wid < workers; ++wid) pool.emplace_back(run, wid);
    }
    return *std::min_element(mins.begin(), mins.end());
}

}  // namespace

ProductSampleReport sample_product_states(const Operator& w, std::size_t n_pure, std::size_t n_mixtures,
                                          std::uint64_t seed, unsigned workers) {
    require_two_qubit(w.space(), "sample_product_states");
    const Matrix& wm = w.data();
    ProductSampleReport rep;
    rep.pure_count = n_pure;
    rep.mixture_count = n_mixtures;
    rep.min_pure = parallel_min(n_pure, workers, [&](std::size_t i) {
        auto rng = sample_rng(seed, 0, i);
        return quad(wm, product_state(rng));
    });
    rep.min_mixture = parallel_min(n_mixtures, workers, [&](std::size_t i) {
        auto rng = sample_rng(seed, 1, i);
        const Vector a = product_state(rng);
        const Vector b = product_state(rng);
        const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const Matrix sigma = p * a * a.adjoint() + (1.0 - p) * b * b.adjoint();
        return (wm * sigma).trace().real();
    });
    return rep;
}

std::vector<std::pair<Pauli, Pauli>> dominant_terms(const PauliCoefficients& c, double threshold) {
    std::vector<std::pair<Pauli, Pauli>> out;
    for (auto j : kPaulis) {
        for (auto k : kPaulis) {
            if (std::abs(c[static_cast<int>(j)][static_cast<int>(k)]) > threshold) out.emplace_back(j, k);
        }
    }
    return out;
}

}  // namespace polss
