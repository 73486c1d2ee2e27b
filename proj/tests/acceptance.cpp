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

// Acceptance gate. Prints one PASS/FAIL line per criterion; pass criterion
// numbers as arguments to run a subset. Exit status is nonzero on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polss/analytic.hpp"
#include "polss/entangle.hpp"
#include "polss/errors.hpp"
#include "polss/lindblad.hpp"
#include "polss/model.hpp"
#include "polss/sweep.hpp"

using namespace polss;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

DensityMatrix numeric_state(const DimensionlessParams& d) {
    return steady_state(build_liouvillian(build_effective_model(d))).rho;
}

// 11 x 11 grid, zeta in {0..10}, xi1 in {0..4}.
template <class F>
void for_each_small_grid(F&& f) {
    for (int i = 0; i <= 10; ++i) {
        for (int k = 0; k <= 10; ++k) f(static_cast<double>(i), 0.4 * k);
    }
}

Outcome criterion1() {
    double worst = 0.0;
    for_each_small_grid([&](double z, double x) {
        const auto a = to_density_matrix(closed_form(z, x));
        worst = std::max(worst, frobenius_distance(a.op(), numeric_state({z, x, 0.0}).op()));
    });
    return {worst <= 1e-9, fmt("max Frobenius distance %.3e (tol 1e-9)", worst)};
}

Outcome criterion2() {
    const double c = concurrence(to_density_matrix(closed_form(10.0, 2.135)));
    const auto records = cmd_sweep(SweepConfig{});
    const auto& best = records[sweep_argmax(records)];
    const double cell_z = 10.0 / 80.0;
    const double cell_x = 4.0 / 80.0;
    const bool value_ok = std::abs(c - 0.30) <= 0.02;
    const bool where_ok =
        std::abs(best.zeta - 10.0) <= cell_z + 1e-12 && std::abs(best.xi1 - 2.135) <= cell_x + 1e-12;
    return {value_ok && where_ok,
            fmt("C(10, 2.135) = %.6f (want 0.30 +- 0.02); grid argmax at (%.4g, %.4g) with C = %.6f", c, best.zeta,
                best.xi1, best.concurrence)};
}

Outcome criterion3() {
    double worst_res = 0.0;
    double worst_param = 0.0;
    for_each_small_grid([&](double z, double x) {
        const auto p = closed_form(z, x);
        worst_res = std::max(worst_res, residual(z, x, 0.0, p));
        const auto a = p.to_array();
        const auto b = solve_linear_system(z, x, 0.0).to_array();
        for (std::size_t i = 0; i < a.size(); ++i) worst_param = std::max(worst_param, std::abs(a[i] - b[i]));
    });
    return {worst_res <= 1e-12 && worst_param <= 1e-12,
            fmt("max equation residual %.3e, max parameter difference %.3e (tol 1e-12)", worst_res, worst_param)};
}

Outcome criterion4() {
    double worst = 0.0;
    for (double z : {0.0, 5.0, 10.0}) {
        for (double v : {0.5, 1.0, 2.135}) {
            const double a = concurrence(numeric_state({z, 0.0, v}));
            const double b = concurrence(numeric_state({z, v, 0.0}));
            worst = std::max(worst, std::abs(a - b));
        }
    }
    return {worst <= 1e-9, fmt("max |C(z,0,v) - C(z,v,0)| = %.3e (tol 1e-9)", worst)};
}

Outcome criterion5() {
    const DimensionlessParams d{10.0, 2.135, 0.0};
    Vector gg = Vector::Zero(4);
    gg(3) = 1.0;
    double max_drift = 0.0;
    const auto end = evolve(build_effective_model(d), DensityMatrix::pure(two_qubit_space(), gg), 50.0, 1e-2,
                            [&](double, const Matrix&, double drift) { max_drift = std::max(max_drift, std::abs(drift)); },
                            {.sample_every = 1});
    const double dist = trace_distance(end, to_density_matrix(closed_form(10.0, 2.135)));
    return {dist <= 1e-5 && max_drift <= 1e-8,
            fmt("trace distance at t = 50: %.3e (tol 1e-5), max trace drift %.3e (tol 1e-8)", dist, max_drift)};
}

Outcome criterion6() {
    PhysicalParams p;
    p.j = 1.0;
    p.delta = 10.0;
    p.gamma = 0.01;
    p.n_max = 4;
    // drive fixed so that |xi| = 2.135 at kappa = 10 J
    p.alpha = 2.135 * p.gamma * std::abs(cplx(p.delta, 10.0)) / p.j;

    std::vector<double> distances;
    double worst_shift = 0.0;
    double worst_amplitude = 0.0;
    for (double kappa : {10.0, 20.0, 40.0}) {
        p.kappa = kappa;
        worst_amplitude = std::max(worst_amplitude, std::abs(p.alpha / cplx(p.delta, p.kappa)));
        try {
            const auto r = cmd_validate(p);
            distances.push_back(r.trace_distance);
            worst_shift = std::max(worst_shift, r.truncation_shift);
        } catch (const NumericalError& e) {
            return {false, std::string("full model: ") + e.what()};
        }
    }
    const bool monotone = distances[1] < distances[0] && distances[2] < distances[1];
    return {monotone && worst_shift < kTruncationTol && worst_amplitude <= 0.1,
            fmt("alpha = %.5f, |alpha/(Delta+i kappa)| <= %.4f; trace distances %.6f, %.6f, %.6f for kappa/J = 10, 20, "
                "40; truncation shift %.3e (tol 1e-6)",
                p.alpha.real(), worst_amplitude, distances[0], distances[1], distances[2], worst_shift)};
}

Outcome criterion7() {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    const auto space = two_qubit_space();
    auto random_vector = [&](int d) {
        Vector v(d);
        for (int i = 0; i < d; ++i) v(i) = cplx(normal(rng), normal(rng));
        return Vector(v / v.norm());
    };
    auto random_state = [&] {
        Matrix g(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int k = 0; k < 4; ++k) g(i, k) = cplx(normal(rng), normal(rng));
        }
        Matrix r = g * g.adjoint();
        r /= r.trace();
        r = 0.5 * (r + r.adjoint()).eval();
        return DensityMatrix(Operator(space, r));
    };
    auto product = [](const Vector& a, const Vector& b) {
        Vector v(4);
        for (int i2 = 0; i2 < 2; ++i2) {
            for (int i1 = 0; i1 < 2; ++i1) v(2 * i2 + i1) = b(i2) * a(i1);
        }
        return v;
    };

    double err_basic = 0.0;
    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    err_basic = std::max(err_basic, std::abs(concurrence(DensityMatrix::pure(space, bell)) - 1.0));
    for (int t = 0; t < 100; ++t) {
        err_basic = std::max(err_basic,
                             concurrence(DensityMatrix::pure(space, product(random_vector(2), random_vector(2)))));
        const Vector ab = random_vector(2);
        Vector v = Vector::Zero(4);
        v(0) = ab(0);
        v(3) = ab(1);
        err_basic = std::max(err_basic, std::abs(concurrence(DensityMatrix::pure(space, v)) -
                                                 2.0 * std::abs(ab(0) * ab(1))));
    }

    double err_lu = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_state();
        auto unitary = [&] {
            Matrix g(2, 2);
            for (int i = 0; i < 2; ++i) {
                for (int k = 0; k < 2; ++k) g(i, k) = cplx(normal(rng), normal(rng));
            }
            return Matrix(Eigen::HouseholderQR<Matrix>(g).householderQ());
        };
        const Matrix u = kron(Operator(qubit::space(), unitary()), Operator(qubit::space(), unitary())).data();
        Matrix r = u * rho.data() * u.adjoint();
        r = 0.5 * (r + r.adjoint()).eval();
        err_lu = std::max(err_lu, std::abs(concurrence(DensityMatrix(Operator(space, r))) - concurrence(rho)));
    }

    int disagreements = 0;
    int entangled = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto rho = random_state();
        const bool c = concurrence(rho) > 1e-12;
        const bool n = negativity(rho) > 1e-12;
        disagreements += c != n ? 1 : 0;
        entangled += c ? 1 : 0;
    }
    return {err_basic <= 1e-10 && err_lu <= 1e-9 && disagreements == 0,
            fmt("reference-state error %.3e (tol 1e-10), local-unitary error %.3e (tol 1e-9), sign disagreements "
                "%d / 1000 (%d entangled)",
                err_basic, err_lu, disagreements, entangled)};
}

Outcome criterion8() {
    const auto r = cmd_witness({10.0, 2.135, 0.0});
    const auto& c = r.witness.coefficients;
    auto has = [&](Pauli a, Pauli b) {
        return std::find(r.dominant.begin(), r.dominant.end(), std::pair{a, b}) != r.dominant.end();
    };
    const bool detects = r.witness.expectation < 0.0;
    const bool positive = r.samples.min_value() >= -1e-8;
    const bool terms = has(Pauli::z, Pauli::id) && has(Pauli::id, Pauli::z) && has(Pauli::z, Pauli::z) &&
                       has(Pauli::x, Pauli::y);
    std::ostringstream dom;
    for (const auto& [a, b] : r.dominant) dom << " (" << pauli_name(a) << "," << pauli_name(b) << ")";
    return {detects && positive && terms,
            fmt("Tr[W rho] = %.6f; min over product samples %.3e; |c| > 0.05:%s; c(z,id) = %.4f, c(id,z) = %.4f, "
                "c(z,z) = %.4f, c(x,y) = %.4f",
                r.witness.expectation, r.samples.min_value(), dom.str().c_str(), c[3][0], c[0][3], c[3][3],
                c[1][2])};
}

Outcome criterion9() {
    auto run = [](unsigned workers) {
        SweepConfig cfg;
        cfg.workers = workers;
        std::ostringstream out;
        write_sweep_csv(out, cmd_sweep(cfg));
        return out.str();
    };
    const auto a = run(1);
    const auto b = run(1);
    const auto c = run(8);
    return {a == b && a == c, fmt("81 x 81 grid: %zu bytes; repeat identical: %s; 1 vs 8 workers identical: %s",
                                  a.size(), a == b ? "yes" : "no", a == c ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3,
                                                            criterion4, criterion5, criterion6,
                                                            criterion7, criterion8, criterion9};
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "unknown criterion: %s\n", argv[i]);
            return 2;
        }
        selected.insert(n);
    }
    if (selected.empty()) {
        for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) selected.insert(n);
    }

    int failures = 0;
    for (int n : selected) {
        Outcome o;
        try {
            o = criteria[n - 1]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
