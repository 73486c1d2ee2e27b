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

#include <doctest.h>

#include <numeric>

#include "polss/errors.hpp"
#include "polss/qops.hpp"
#include "test_support.hpp"

using namespace polss;
using polss::testing::max_abs_diff;

namespace {

Matrix diag(std::initializer_list<cplx> entries) {
    Vector v(static_cast<int>(entries.size()));
    int i = 0;
    for (auto e : entries) v(i++) = e;
    return v.asDiagonal();
}

}  // namespace

TEST_CASE("HilbertSpace multiplies dimensions and rejects empty factors") {
    HilbertSpace s({2, 2, 5});
    CHECK(s.total_dim() == 20);
    CHECK(s.num_subsystems() == 3);
    CHECK_THROWS_AS(HilbertSpace({2, 0}), InvalidArgument);
    CHECK_THROWS_AS(HilbertSpace(std::vector<int>{}), InvalidArgument);
}

TEST_CASE("Operator rejects non-square or mis-sized data") {
    CHECK_THROWS_AS(Operator(HilbertSpace({2}), Matrix::Zero(2, 3)), InvalidArgument);
    CHECK_THROWS_AS(Operator(HilbertSpace({2, 2}), Matrix::Zero(2, 2)), InvalidArgument);
}

TEST_CASE("kron") {
    SUBCASE("identity times identity") {
        const auto k = kron(qubit::identity(), qubit::identity());
        CHECK(k.space().dims() == std::vector<int>{2, 2});
        CHECK(max_abs_diff(k.data(), Matrix::Identity(4, 4)) == 0.0);
    }
    SUBCASE("sigma_z on the slow factor") {
        const auto k = kron(qubit::sigma_z(), qubit::identity());
        CHECK(max_abs_diff(k.data(), diag({1, 1, -1, -1})) == 0.0);
    }
    SUBCASE("trace factorizes") {
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 20; ++trial) {
            const Operator a(qubit::space(), polss::testing::ginibre(rng, 2, 2));
            const Operator b(qubit::space(), polss::testing::ginibre(rng, 2, 2));
            CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
        }
    }
    SUBCASE("associative") {
        std::mt19937_64 rng(2);
        const Operator a(HilbertSpace({2}), polss::testing::ginibre(rng, 2, 2));
        const Operator b(HilbertSpace({3}), polss::testing::ginibre(rng, 3, 3));
        const Operator c(HilbertSpace({2}), polss::testing::ginibre(rng, 2, 2));
        const auto left = kron(kron(a, b), c);
        const auto right = kron(a, kron(b, c));
        CHECK(left.space() == right.space());
        CHECK(max_abs_diff(left.data(), right.data()) < 1e-13);
    }
}

TEST_CASE("DensityMatrix validation") {
    CHECK_NOTHROW(polss::testing::bell_phi_plus());
    CHECK_THROWS_AS(DensityMatrix(Operator(qubit::space(), diag({0.5, 0.4}))), NumericalError);
    CHECK_THROWS_AS(DensityMatrix(Operator(qubit::space(), diag({1.5, -0.5}))), NumericalError);
    Matrix non_herm = diag({0.5, 0.5});
    non_herm(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix(Operator(qubit::space(), non_herm)), NumericalError);
}

TEST_CASE("partial_transpose") {
    std::mt19937_64 rng(3);
    SUBCASE("product state keeps positivity") {
        const auto a = polss::testing::random_state(rng, qubit::space());
        const auto b = polss::testing::random_state(rng, qubit::space());
        const auto pt = partial_transpose(DensityMatrix(kron(a.op(), b.op())), 1);
        const Operator expected = kron(a.op(), Operator(qubit::space(), b.data().transpose()));
        CHECK(max_abs_diff(pt.data(), expected.data()) < 1e-15);
        CHECK(eig_hermitian(pt).values.minCoeff() > -1e-12);
    }
    SUBCASE("involution, trace and Hermiticity preserved exactly") {
        for (int trial = 0; trial < 10; ++trial) {
            const auto rho = polss::testing::random_state(rng, HilbertSpace({2, 2}));
            for (std::size_t s : {0u, 1u}) {
                const auto pt = partial_transpose(rho, s);
                CHECK(max_abs_diff(partial_transpose(pt, s).data(), rho.data()) == 0.0);
                CHECK(pt.trace() == rho.op().trace());
                CHECK(pt.hermiticity_error() == rho.op().hermiticity_error());
            }
        }
    }
    SUBCASE("Bell state spectrum") {
        // Flip construction: PT of |Phi+><Phi+| is SWAP / 2.
        Matrix swap_half = Matrix::Zero(4, 4);
        swap_half(0, 0) = swap_half(3, 3) = swap_half(1, 2) = swap_half(2, 1) = 0.5;
        const auto pt = partial_transpose(polss::testing::bell_phi_plus(), 1);
        CHECK(max_abs_diff(pt.data(), swap_half) < 1e-15);
        const auto ev = eig_hermitian(pt).values;
        CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(ev(1) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(ev(3) == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("bad index") {
        CHECK_THROWS_AS(partial_transpose(polss::testing::bell_phi_plus(), 2), InvalidArgument);
    }
}

TEST_CASE("partial_trace") {
    std::mt19937_64 rng(4);
    SUBCASE("product factorization, either side") {
        const auto a = polss::testing::random_state(rng, qubit::space());
        const auto b = polss::testing::random_state(rng, HilbertSpace({3}));
        const DensityMatrix ab(kron(a.op(), b.op()));
        CHECK(max_abs_diff(partial_trace(ab, {0}).data(), a.data()) < 1e-14);
        CHECK(max_abs_diff(partial_trace(ab, {1}).data(), b.data()) < 1e-14);
    }
    SUBCASE("maximally entangled marginal") {
        const auto m = partial_trace(polss::testing::bell_phi_plus(), {0});
        CHECK(max_abs_diff(m.data(), 0.5 * Matrix::Identity(2, 2)) < 1e-15);
    }
    SUBCASE("three factors, keep two, trace preserved") {
        const auto rho = polss::testing::random_state(rng, HilbertSpace({2, 2, 4}));
        const auto red = partial_trace(rho, {0, 1});
        CHECK(red.space().dims() == std::vector<int>{2, 2});
        CHECK(std::abs(red.op().trace() - rho.op().trace()) < 1e-12);
        CHECK(red.op().hermiticity_error() < 1e-15);
        for (std::size_t keep = 0; keep < 3; ++keep) {
            CHECK(std::abs(partial_trace(rho, {keep}).op().trace() - 1.0) < 1e-12);
        }
        // Oracle: explicit sum over the traced mode index.
        Matrix expected = Matrix::Zero(4, 4);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                for (int n = 0; n < 4; ++n) expected(r, c) += rho.data()(r * 4 + n, c * 4 + n);
            }
        }
        CHECK(max_abs_diff(red.data(), expected) < 1e-15);
    }
    SUBCASE("full keep set is the identity map") {
        const auto rho = polss::testing::random_state(rng, HilbertSpace({2, 3}));
        CHECK(max_abs_diff(partial_trace(rho, {0, 1}).data(), rho.data()) == 0.0);
    }
    SUBCASE("errors") {
        const auto rho = polss::testing::bell_phi_plus();
        CHECK_THROWS_AS(partial_trace(rho, std::span<const std::size_t>{}), InvalidArgument);
        CHECK_THROWS_AS(partial_trace(rho, {5}), InvalidArgument);
    }
}

TEST_CASE("eig_hermitian") {
    std::mt19937_64 rng(5);
    SUBCASE("identity and sigma_z") {
        CHECK(eig_hermitian(Operator::identity(HilbertSpace({4}))).values.isApprox(Eigen::VectorXd::Ones(4)));
        const auto ez = eig_hermitian(qubit::sigma_z()).values;
        CHECK(ez(0) == -1.0);
        CHECK(ez(1) == 1.0);
    }
    SUBCASE("trace identity, orthonormality and reconstruction") {
        for (int trial = 0; trial < 20; ++trial) {
            const auto h = polss::testing::random_hermitian(rng, HilbertSpace({2, 3}));
            const auto eig = eig_hermitian(h);
            CHECK(std::abs(eig.values.sum() - h.trace().real()) < 1e-10);
            const Matrix& v = eig.vectors;
            CHECK(max_abs_diff(v.adjoint() * v, Matrix::Identity(6, 6)) < 1e-10);
            const Matrix recon = v * eig.values.cast<cplx>().asDiagonal() * v.adjoint();
            CHECK((recon - h.data()).norm() <= 1e-9 * h.data().norm());
            for (int i = 1; i < 6; ++i) CHECK(eig.values(i - 1) <= eig.values(i));
        }
    }
    SUBCASE("recovers a planted spectrum") {
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix u = polss::testing::random_unitary(rng, 5);
            Eigen::VectorXd lam(5);
            for (int i = 0; i < 5; ++i) lam(i) = std::normal_distribution<double>()(rng);
            std::sort(lam.data(), lam.data() + 5);
            const Operator h(HilbertSpace({5}), u * lam.cast<cplx>().asDiagonal() * u.adjoint());
            CHECK((eig_hermitian(h).values - lam).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
    SUBCASE("rejects non-Hermitian input") {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 1) = 1.0;
        CHECK_THROWS_AS(eig_hermitian(Operator(qubit::space(), m)), InvalidArgument);
    }
}

namespace {

bool contains(const Vector& ev, cplx value, double tol) {
    for (int i = 0; i < ev.size(); ++i) {
        if (std::abs(ev(i) - value) < tol) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("eig_general") {
    SUBCASE("diagonal") {
        const auto ev = eig_general(Operator(qubit::space(), diag({1.0, cplx(2, 1)})));
        CHECK(contains(ev, 1.0, 1e-14));
        CHECK(contains(ev, cplx(2, 1), 1e-14));
    }
    SUBCASE("nilpotent") {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 1) = 1.0;
        const auto ev = eig_general(Operator(qubit::space(), m));
        CHECK(ev.cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("Bell state: rho rho~ = rho^2") {
        const auto rho = polss::testing::bell_phi_plus();
        const Matrix yy = kron(qubit::sigma_y(), qubit::sigma_y()).data();
        const Operator prod(rho.space(), rho.data() * (yy * rho.data().conjugate() * yy));
        const auto ev = eig_general(prod);
        CHECK(contains(ev, 1.0, 1e-12));
        CHECK(ev.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("sum and product identities on random 4x4") {
        std::mt19937_64 rng(6);
        for (int trial = 0; trial < 20; ++trial) {
            const Operator m(HilbertSpace({4}), polss::testing::ginibre(rng, 4, 4));
            const auto ev = eig_general(m);
            const double scale = m.data().norm();
            CHECK(std::abs(ev.sum() - m.trace()) <= 1e-8 * scale);
            CHECK(std::abs(ev.prod() - m.data().determinant()) <= 1e-8 * std::pow(scale, 4));
        }
    }
}

TEST_CASE("trace distance and Frobenius distance") {
    const auto a = polss::testing::basis_state(0);
    const auto b = polss::testing::basis_state(3);
    CHECK(trace_distance(a, b) == doctest::Approx(1.0));
    CHECK(trace_distance(a, a) == doctest::Approx(0.0));
    CHECK(frobenius_distance(a.op(), b.op()) == doctest::Approx(std::sqrt(2.0)));
}
