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
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "polss/qops.hpp"

namespace polss {

enum class Pauli : int { id = 0, x = 1, y = 2, z = 3 };

std::string_view pauli_name(Pauli p);
Operator pauli_matrix(Pauli p);

/// c[j][k] multiplies sigma_1^j (x) sigma_2^k, j and k indexed by Pauli.
using PauliCoefficients = std::array<std::array<double, 4>, 4>;

/// sigma_1^j (x) sigma_2^k on the two-qubit space.
Operator pauli_product(Pauli on_qubit1, Pauli on_qubit2);

/// c_jk = Tr[w (sigma_1^j sigma_2^k)] / 4. Throws InvalidArgument for
/// non-Hermitian or non-4x4 input.
PauliCoefficients pauli_decompose(const Operator& w);
Operator pauli_reconstruct(const PauliCoefficients& c);

/// rho~ = (sigma^y (x) sigma^y) rho^* (sigma^y (x) sigma^y).
Operator spin_flip(const DensityMatrix& rho);

/// Wootters concurrence: the square roots of the eigenvalues of rho rho~,
/// sorted descending, as max(0, l1 - l2 - l3 - l4). The roots are taken as
/// singular values of X^T (sigma^y (x) sigma^y) X with rho = X X^dagger.
double concurrence(const DensityMatrix& rho);

/// Sum of |negative eigenvalues| of the partial transpose on qubit 2.
double negativity(const DensityMatrix& rho);

struct Witness {
    Operator op;  // unit Frobenius norm
    PauliCoefficients coefficients;
    double expectation;  // Tr[W rho] for the state it was built from
};

/// W = PT(|eta><eta|) where eta is the eigenvector of PT(rho) with the most
/// negative eigenvalue (PT on qubit 2). Ties among degenerate eigenvectors go
/// to the vector of the eigenspace with the largest |ee> overlap. Throws
/// NotEntangled for PPT input.
Witness construct_witness(const DensityMatrix& rho);

/// Expectation of a two-qubit operator in a state, real part.
double expectation(const Operator& w, const DensityMatrix& rho);

struct ProductSampleReport {
    double min_pure = 0.0;
    double min_mixture = 0.0;
    std::size_t pure_count = 0;
    std::size_t mixture_count = 0;

    double min_value() const { return min_pure < min_mixture ? min_pure : min_mixture; }
};

/// Evaluates Tr[W sigma] over Bloch-uniform pure product states and random
/// two-component convex mixtures of them. Sample i draws from its own
/// generator seeded by (seed, i), so the result is independent of `workers`.
ProductSampleReport sample_product_states(const Operator& w, std::size_t n_pure = 10000,
                                          std::size_t n_mixtures = 1000, std::uint64_t seed = 20260101,
                                          unsigned workers = 1);

/// Terms with |c_jk| > threshold, in (j, k) row-major order.
std::vector<std::pair<Pauli, Pauli>> dominant_terms(const PauliCoefficients& c, double threshold = 0.05);

}  // namespace polss
