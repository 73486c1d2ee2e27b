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

#include <vector>

#include "polss/qops.hpp"

namespace polss {

/// Hamiltonian plus jump operators; the generator is
///   d rho/dt = -i[H, rho] + sum_j (L_j rho L_j^dag - 1/2 {L_j^dag L_j, rho}).
struct LindbladModel {
    Operator hamiltonian;
    std::vector<Operator> jumps;
};

/// Two end-cavity polaritonic qubits coupled to a driven, lossy central mode.
/// Rates share whatever frequency unit the caller picks (the CLI uses J).
struct PhysicalParams {
    double j = 1.0;      // hopping between the central mode and each qubit
    double delta = 0.0;  // detuning of the central mode from the polariton line
    double kappa = 1.0;  // central-mode decay rate
    double gamma = 1.0;  // polariton decay rate
    cplx alpha{0.0, 0.0};  // drive amplitude on the central mode
    int n_max = 4;         // photon-number cutoff of the central mode

    void validate() const;
};

/// Effective two-qubit parameters with time measured in units of 1/gamma.
struct DimensionlessParams {
    double zeta = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;

    cplx xi() const { return {xi1, xi2}; }
    void validate() const;
};

// Tensor-factor layout. The two-qubit basis is {|ee>, |ge>, |eg>, |gg>} with
// the qubit-1 label written first, so qubit 1 is the fast index and the
// factor order is (qubit 2, qubit 1). The full model appends the mode.
inline constexpr std::size_t kQubit2Factor = 0;
inline constexpr std::size_t kQubit1Factor = 1;
inline constexpr std::size_t kModeFactor = 2;

HilbertSpace two_qubit_space();
HilbertSpace full_space(int n_max);

/// sigma_1 or sigma_2 (`which` = 1 or 2) lowering operator on the two-qubit space.
Operator qubit_lowering(int which);

/// Lifts a single-qubit operator onto qubit `which` (1 or 2) of the two-qubit space.
Operator on_qubit(const Operator& single, int which);

struct FullModelOperators {
    Operator sigma1;
    Operator sigma2;
    Operator a;
};

FullModelOperators full_model_operators(int n_max);

struct DressedEnergies {
    double plus;
    double minus;
};

/// E_n^{+-} = n omega_d +- g sqrt(n) of a resonant atom-cavity pair, n >= 1.
DressedEnergies dressed_energies(int n, double omega_d, double g);

/// H = J sum_j (sigma_j a^dag + sigma_j^dag a) - Delta a^dag a + alpha a^dag + alpha^* a,
/// jumps {sqrt(2 gamma) sigma_1, sqrt(2 gamma) sigma_2, sqrt(2 kappa) a}.
LindbladModel build_full_model(const PhysicalParams& p);

/// H = zeta (s1 s2^dag + s1^dag s2) + xi (s1^dag + s2^dag) + xi^* (s1 + s2),
/// jumps {sqrt(2) s1, sqrt(2) s2}.
LindbladModel build_effective_model(const DimensionlessParams& d);

/// Effective Hamiltonian after eliminating the mode, in physical units:
/// Re[J^2/(Delta + i kappa)] (s1 s2^dag + h.c.) + J alpha/(Delta + i kappa) (s1^dag + s2^dag) + h.c.
Operator physical_effective_hamiltonian(const PhysicalParams& p);

/// zeta = Re[J^2 / (gamma (Delta + i kappa))], xi = alpha J / (gamma (Delta + i kappa)).
DimensionlessParams map_physical(const PhysicalParams& p);

/// Mode amplitude predicted by adiabatic elimination:
/// <a> = (J (<s1> + <s2>) + alpha) / (Delta + i kappa).
cplx adiabatic_amplitude(cplx sigma1_expect, cplx sigma2_expect, const PhysicalParams& p);

/// Conjugates by SWAP of the two qubit factors (which must be factors 0 and 1).
Operator swap_qubits(const Operator& m);

}  // namespace polss
