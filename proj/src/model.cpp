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

#include "polss/model.hpp"

#include <cmath>
#include <string>

#include "polss/errors.hpp"

namespace polss {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void PhysicalParams::validate() const {
    if (!(finite(j) && finite(delta) && finite(kappa) && finite(gamma) && finite(alpha.real()) &&
          finite(alpha.imag()))) {
        throw InvalidArgument("PhysicalParams: all rates must be finite");
    }
    if (!(kappa > 0.0)) throw InvalidArgument("PhysicalParams: kappa must be > 0");
    if (!(gamma > 0.0)) throw InvalidArgument("PhysicalParams: gamma must be > 0");
    if (n_max < 1) throw InvalidArgument("PhysicalParams: n_max must be >= 1");
}

void DimensionlessParams::validate() const {
    if (!(finite(zeta) && finite(xi1) && finite(xi2))) {
        throw InvalidArgument("DimensionlessParams: zeta, xi1, xi2 must be finite");
    }
}

HilbertSpace two_qubit_space() { return HilbertSpace({2, 2}); }

HilbertSpace full_space(int n_max) { return HilbertSpace({2, 2, n_max + 1}); }

Operator on_qubit(const Operator& single, int which) {
    if (which == 1) return kron(qubit::identity(), single);
    if (which == 2) return kron(single, qubit::identity());
    throw InvalidArgument("on_qubit: qubit index must be 1 or 2, got " + std::to_string(which));
}

Operator qubit_lowering(int which) { return on_qubit(qubit::lowering(), which); }

FullModelOperators full_model_operators(int n_max) {
    if (n_max < 1) throw InvalidArgument("full_model_operators: n_max must be >= 1");
    const auto mode_id = Operator::identity(boson::space(n_max));
    const auto qubits_id = Operator::identity(two_qubit_space());
    return {kron(qubit_lowering(1), mode_id), kron(qubit_lowering(2), mode_id),
            kron(qubits_id, boson::annihilation(n_max))};
}

DressedEnergies dressed_energies(int n, double omega_d, double g) {
    if (n < 1) throw InvalidArgument("dressed_energies: n must be >= 1, got " + std::to_string(n));
    const double split = g * std::sqrt(static_cast<double>(n));
    return {n * omega_d + split, n * omega_d - split};
}

LindbladModel build_full_model(const PhysicalParams& p) {
    p.validate();
    const auto ops = full_model_operators(p.n_max);
    const Operator ad = ops.a.adjoint();

    Operator h = p.j * (ops.sigma1 * ad + ops.sigma1.adjoint() * ops.a + ops.sigma2 * ad + ops.sigma2.adjoint() * ops.a);
    h -= cplx(p.delta) * (ad * ops.a);
    h += p.alpha * ad + std::conj(p.alpha) * ops.a;

    const double sg = std::sqrt(2.0 * p.gamma);
    const double sk = std::sqrt(2.0 * p.kappa);
    return {std::move(h), {sg * ops.sigma1, sg * ops.sigma2, sk * ops.a}};
}

namespace {

// Shared by the dimensionless and physical effective Hamiltonians.
Operator effective_hamiltonian(double exchange, cplx drive) {
    const auto s1 = qubit_lowering(1);
    const auto s2 = qubit_lowering(2);
    Operator h = exchange * (s1 * s2.adjoint() + s1.adjoint() * s2);
    h += drive * (s1.adjoint() + s2.adjoint());
    h += std::conj(drive) * (s1 + s2);
    return h;
}

}  // namespace

LindbladModel build_effective_model(const DimensionlessParams& d) {
    d.validate();
    const double r2 = std::sqrt(2.0);
    return {effective_hamiltonian(d.zeta, d.xi()), {r2 * qubit_lowering(1), r2 * qubit_lowering(2)}};
}

Operator physical_effective_hamiltonian(const PhysicalParams& p) {
    const cplx denom(p.delta, p.kappa);
    return effective_hamiltonian((p.j * p.j / denom).real(), p.j * p.alpha / denom);
}

DimensionlessParams map_physical(const PhysicalParams& p) {
    if (!(p.gamma > 0.0)) throw InvalidArgument("map_physical: gamma must be > 0");
    if (p.delta == 0.0 && p.kappa == 0.0) throw InvalidArgument("map_physical: Delta and kappa are both zero");
    const cplx denom = p.gamma * cplx(p.delta, p.kappa);
    const cplx xi = p.alpha * p.j / denom;
    return {(p.j * p.j / denom).real(), xi.real(), xi.imag()};
}

cplx adiabatic_amplitude(cplx sigma1_expect, cplx sigma2_expect, const PhysicalParams& p) {
    if (!(p.kappa > 0.0)) throw InvalidArgument("adiabatic_amplitude: kappa must be > 0");
    const cplx denom(p.delta, p.kappa);
    return (p.j * (sigma1_expect + sigma2_expect) + p.alpha) / denom;
}

Operator swap_qubits(const Operator& m) {
    const auto& space = m.space();
    if (space.num_subsystems() < 2 || space.dim(0) != 2 || space.dim(1) != 2) {
        throw InvalidArgument("swap_qubits: factors 0 and 1 must both be qubits");
    }
    const int n = m.dim();
    const int rest = n / 4;
    // index = (q2 * 2 + q1) * rest + tail  ->  (q1 * 2 + q2) * rest + tail
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        const int q = i / rest;
        const int tail = i % rest;
        const int swapped = (q % 2) * 2 + q / 2;
        perm[i] = swapped * rest + tail;
    }
    Matrix out(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) out(perm[r], perm[c]) = m(r, c);
    }
    return {space, std::move(out)};
}

}  // namespace polss
