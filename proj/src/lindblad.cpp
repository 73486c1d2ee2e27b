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

#include "polss/lindblad.hpp"

#include <cmath>
#include <sstream>

#include "polss/errors.hpp"

namespace polss {

Vector vectorize(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvectorize(const Vector& v, int dim) {
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

namespace {

void check_model(const LindbladModel& m) {
    for (const auto& jump : m.jumps) {
        if (!(jump.space() == m.hamiltonian.space())) {
            throw InvalidArgument("LindbladModel: jump operator space differs from the Hamiltonian's");
        }
    }
}

}  // namespace

Liouvillian build_liouvillian(const LindbladModel& m) {
    check_model(m);
    const int d = m.hamiltonian.dim();
    const Matrix id = Matrix::Identity(d, d);
    const Matrix& h = m.hamiltonian.data();
    const HilbertSpace flat({d});
    auto kr = [&](const Matrix& a, const Matrix& b) { return kron(Operator(flat, a), Operator(flat, b)).data(); };

    Matrix l = cplx(0, -1) * (kr(id, h) - kr(h.transpose(), id));
    for (const auto& jump : m.jumps) {
        const Matrix& lj = jump.data();
        const Matrix ldl = lj.adjoint() * lj;
        l += kr(lj.conjugate(), lj) - 0.5 * kr(id, ldl) - 0.5 * kr(ldl.transpose(), id);
    }
    return {m.hamiltonian.space(), std::move(l)};
}

SteadyStateResult steady_state(const Liouvillian& l) {
    const int d = l.space.total_dim();
    const int n = d * d;
    if (l.matrix.rows() != n || l.matrix.cols() != n) throw InvalidArgument("steady_state: Liouvillian size mismatch");

    Eigen::BDCSVD<Matrix> svd(l.matrix);
    const auto& sv = svd.singularValues();  // descending
    const double gap = n >= 2 ? sv(n - 2) : sv(0);
    if (!(gap > kSteadyGapTol)) {
        std::ostringstream msg;
        msg << "steady_state: degenerate null space (second-smallest singular value " << gap << ")";
        throw NumericalError(msg.str());
    }

    Matrix a = l.matrix;
    a.row(0).setZero();
    for (int i = 0; i < d; ++i) a(0, i * d + i) = 1.0;
    Vector b = Vector::Zero(n);
    b(0) = 1.0;
    const Vector x = a.fullPivLu().solve(b);

    Matrix rho = unvectorize(x, d);
    rho = 0.5 * (rho + rho.adjoint());
    const double residual = (l.matrix * vectorize(rho)).norm();
    if (residual > kSteadyResidualTol) {
        std::ostringstream msg;
        msg << "steady_state: residual " << residual << " exceeds " << kSteadyResidualTol;
        throw NumericalError(msg.str());
    }
    return {DensityMatrix(Operator(l.space, std::move(rho))), residual, gap};
}

DensityMatrix evolve(const LindbladModel& m, const DensityMatrix& rho0, double t_final, double dt,
                     const EvolveObserver& observer, EvolveOptions options) {
    check_model(m);
    if (!(rho0.space() == m.hamiltonian.space())) throw InvalidArgument("evolve: rho0 is not on the model's space");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("evolve: dt must be positive");
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw InvalidArgument("evolve: t_final must be >= 0");

    // d rho = -i (K rho - rho K^dag) + sum L rho L^dag with K = H - i/2 sum L^dag L
    Matrix k = m.hamiltonian.data();
    for (const auto& jump : m.jumps) k -= cplx(0, 0.5) * (jump.data().adjoint() * jump.data());
    const cplx mi(0, -1);
    auto rhs = [&](const Matrix& r) {
        Matrix out = mi * (k * r - r * k.adjoint());
        for (const auto& jump : m.jumps) out += jump.data() * r * jump.data().adjoint();
        return out;
    };

    const auto steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
    Matrix rho = rho0.data();
    auto drift_of = [](const Matrix& r) { return std::abs(r.trace() - 1.0); };
    if (observer) observer(0.0, rho, drift_of(rho));

    for (long s = 1; s <= steps; ++s) {
        // last step may be shortened to land exactly on t_final
        const double h = std::min(dt, t_final - (s - 1) * dt);
        const Matrix k1 = rhs(rho);
        const Matrix k2 = rhs(rho + 0.5 * h * k1);
        const Matrix k3 = rhs(rho + 0.5 * h * k2);
        const Matrix k4 = rhs(rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = 0.5 * (rho + rho.adjoint()).eval();

        const double drift = drift_of(rho);
        if (!(drift <= options.abort_drift)) {
            std::ostringstream msg;
            msg << "evolve: trace drift " << drift << " at t = " << (s - 1) * dt + h
                << " exceeds " << options.abort_drift << "; retry with a smaller dt (current " << dt << ")";
            throw NumericalError(msg.str());
        }
        if (observer && (s == steps || (options.sample_every > 0 && s % options.sample_every == 0))) {
            observer(s == steps ? t_final : s * dt, rho, drift);
        }
    }
    return DensityMatrix(Operator(rho0.space(), std::move(rho)));
}

}  // namespace polss
