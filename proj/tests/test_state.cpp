// Copyright 2026 The cshadow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "cshadow/error.hpp"
#include "cshadow/state.hpp"
#include "test_helpers.hpp"

using namespace cshadow;
using Catch::Approx;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Matrix diag(std::initializer_list<double> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) {
        v(i++) = x;
    }
    return v.asDiagonal();
}

} // namespace

TEST_CASE("make_ghz", "[state]") {
    SECTION("three qubits") {
        const auto ghz = make_ghz(3);
        for (std::size_t i = 0; i < 8; ++i) {
            const double expected = (i == 0 || i == 7) ? kInvSqrt2 : 0.0;
            CHECK(std::abs(ghz[i] - Complex(expected)) < 1e-15);
        }
    }
    SECTION("one qubit is |+>") {
        const auto plus = make_ghz(1);
        CHECK(std::abs(plus[0] - Complex(kInvSqrt2)) < 1e-15);
        CHECK(std::abs(plus[1] - Complex(kInvSqrt2)) < 1e-15);
    }
    SECTION("overlap with |00>") {
        CHECK(std::abs(make_ghz(2).inner(PureState::basis(2, 0)) - Complex(kInvSqrt2)) < 1e-15);
    }
    SECTION("size range") {
        CHECK_THROWS_AS(make_ghz(0), SizeError);
        CHECK_THROWS_AS(make_ghz(kMaxQubits + 1), SizeError);
        CHECK_NOTHROW(make_ghz(kMaxQubits));
    }
}

TEST_CASE("make_theta_family", "[state]") {
    SECTION("theta = 0 is the product state") {
        const auto s = make_theta_family(4, 0.0);
        CHECK(s.overlap(PureState::basis(4, 0)) == Approx(1.0).margin(1e-15));
    }
    SECTION("theta = pi/4 is GHZ elementwise") {
        for (int n = 1; n <= 6; ++n) {
            const auto a = make_theta_family(n, std::numbers::pi / 4);
            const auto b = make_ghz(n);
            CHECK((a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() <= 1e-15);
        }
    }
    SECTION("theta = pi/6, n = 2") {
        const auto s = make_theta_family(2, std::numbers::pi / 6);
        CHECK(s[0].real() == Approx(std::sqrt(3.0) / 2).margin(1e-15));
        CHECK(std::abs(s[1]) == 0.0);
        CHECK(std::abs(s[2]) == 0.0);
        CHECK(s[3].real() == Approx(0.5).margin(1e-15));
    }
    SECTION("range") {
        CHECK_THROWS_AS(make_theta_family(2, -0.1), DomainError);
        CHECK_THROWS_AS(make_theta_family(2, 1.0), DomainError);
    }
}

TEST_CASE("PureState and HermitianOperator validate invariants", "[state]") {
    CHECK_THROWS_AS(PureState(2, Vector::Ones(4)), NumericalError);
    CHECK_THROWS_AS(PureState(2, Vector::Ones(3) / std::sqrt(3.0)), SizeError);
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(HermitianOperator(1, m), NumericalError);
    CHECK_THROWS_AS(HermitianOperator(2, Matrix::Identity(2, 2)), SizeError);
}

TEST_CASE("tensor ordering", "[state]") {
    SECTION("identity") {
        const auto i4 = tensor(HermitianOperator::identity(1), HermitianOperator::identity(1));
        CHECK(testing::max_abs_diff(i4.entries(), Matrix::Identity(4, 4)) == 0.0);
    }
    SECTION("left factor sits on qubit 0") {
        const auto p0 = HermitianOperator::projector(PureState::basis(1, 0));
        const auto out = tensor(p0, HermitianOperator::identity(1));
        CHECK(testing::max_abs_diff(out.entries(), diag({1, 1, 0, 0})) == 0.0);
    }
    SECTION("padded two-qubit projector has trace 16") {
        std::mt19937_64 gen(7);
        const auto proj = HermitianOperator::projector(testing::random_state(2, gen));
        CHECK(tensor(proj, HermitianOperator::identity(4)).trace() == Approx(16.0).margin(1e-12));
    }
    SECTION("overflow") {
        CHECK_THROWS_AS(tensor(HermitianOperator::identity(6), HermitianOperator::identity(5)), SizeError);
    }
}

TEST_CASE("partial_trace", "[state]") {
    SECTION("GHZ_3 single-qubit marginal") {
        const auto rho = HermitianOperator::projector(make_ghz(3));
        const auto r0 = partial_trace(rho, Bipartition(3, {0}));
        CHECK(testing::max_abs_diff(r0.entries(), diag({0.5, 0.5})) < 1e-15);
    }
    SECTION("product state factorizes") {
        const auto rho = HermitianOperator::projector(PureState::basis(2, 0b01));
        const auto r0 = partial_trace(rho, Bipartition(2, {0}));
        CHECK(testing::max_abs_diff(r0.entries(), diag({1, 0})) == 0.0);
        const auto r1 = partial_trace(rho, Bipartition(2, {1}));
        CHECK(testing::max_abs_diff(r1.entries(), diag({0, 1})) == 0.0);
    }
    SECTION("eigenvalues equal squared singular values of the reshaped amplitudes") {
        std::mt19937_64 gen(11);
        for (int trial = 0; trial < 20; ++trial) {
            const auto psi = testing::random_state(2, gen);
            Matrix reshaped(2, 2);
            reshaped << psi[0], psi[1], psi[2], psi[3];
            const Eigen::Vector2d sv = Eigen::JacobiSVD<Matrix>(reshaped).singularValues();
            const auto ev = partial_trace(HermitianOperator::projector(psi), Bipartition(2, {0})).eigenvalues();
            CHECK(ev[1] == Approx(sv(0) * sv(0)).margin(1e-12));
            CHECK(ev[0] == Approx(sv(1) * sv(1)).margin(1e-12));
        }
    }
    SECTION("result is a unit-trace PSD operator") {
        std::mt19937_64 gen(5);
        const auto rho = testing::random_density(4, gen);
        const auto r = partial_trace(rho, Bipartition(4, {1, 3}));
        CHECK(r.num_qubits() == 2);
        CHECK(r.trace() == Approx(1.0).margin(1e-10));
        for (double e : r.eigenvalues()) {
            CHECK(e >= -1e-12);
        }
    }
    SECTION("errors") {
        const auto rho = HermitianOperator::maximally_mixed(2);
        CHECK_THROWS_AS(partial_trace(HermitianOperator::identity(2), Bipartition(2, {0})), DomainError);
        CHECK_THROWS_AS(partial_trace(rho, Bipartition(3, {0})), DomainError);
        CHECK_THROWS_AS(Bipartition(2, {0, 1}), DomainError);
        CHECK_THROWS_AS(Bipartition(2, {}), DomainError);
        CHECK_THROWS_AS(Bipartition(2, {2}), DomainError);
        CHECK_THROWS_AS(Bipartition(3, {1, 1}), DomainError);
    }
}

TEST_CASE("partial traces over disjoint subsets commute", "[state][property]") {
    std::mt19937_64 gen(19);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho = testing::random_density(4, gen);
        const auto direct = partial_trace(rho, Bipartition(4, {0, 1}));
        const auto via2 = partial_trace(partial_trace(rho, Bipartition(4, {0, 1, 3})), Bipartition(3, {0, 1}));
        const auto via3 = partial_trace(partial_trace(rho, Bipartition(4, {0, 1, 2})), Bipartition(3, {0, 1}));
        CHECK(testing::max_abs_diff(direct.entries(), via2.entries()) < 1e-12);
        CHECK(testing::max_abs_diff(via2.entries(), via3.entries()) < 1e-12);
    }
}

TEST_CASE("schmidt_max", "[state]") {
    SECTION("GHZ across every cut") {
        for (int n = 2; n <= 5; ++n) {
            for (const auto &cut : Bipartition::all(n)) {
                CHECK(schmidt_max(make_ghz(n), cut) == Approx(0.5).margin(1e-12));
            }
        }
    }
    SECTION("product states") {
        std::mt19937_64 gen(3);
        const PureState product(4, testing::random_product_vector(4, gen));
        for (const auto &cut : Bipartition::all(4)) {
            CHECK(schmidt_max(product, cut) == Approx(1.0).margin(1e-12));
        }
    }
    SECTION("theta family, single-qubit cut") {
        // The 2 x 2^{n-1} reshape has entries cos(theta) at (0,0) and
        // sin(theta) at (1, last): singular values cos and sin.
        const auto s = make_theta_family(4, std::numbers::pi / 6);
        CHECK(schmidt_max(s, Bipartition(4, {0})) == Approx(0.75).margin(1e-12));
    }
    SECTION("agrees with the top eigenvalue of the reduced state") {
        std::mt19937_64 gen(23);
        for (int trial = 0; trial < 10; ++trial) {
            const auto psi = testing::random_state(4, gen);
            for (const auto &cut : Bipartition::all(4)) {
                const auto ev = partial_trace(HermitianOperator::projector(psi), cut).eigenvalues();
                CHECK(std::abs(schmidt_max(psi, cut) - ev.back()) < 1e-10);
            }
        }
    }
}

TEST_CASE("entanglement_entropy", "[state]") {
    const Bipartition first(4, {0});
    CHECK(entanglement_entropy(make_theta_family(4, std::numbers::pi / 4), first) == Approx(1.0).margin(1e-12));
    CHECK(entanglement_entropy(make_theta_family(4, 0.0), first) == Approx(0.0).margin(1e-12));
    const double c2 = std::pow(std::cos(std::numbers::pi / 8), 2), s2 = std::pow(std::sin(std::numbers::pi / 8), 2);
    const double expected = -c2 * std::log2(c2) - s2 * std::log2(s2);
    CHECK(entanglement_entropy(make_theta_family(4, std::numbers::pi / 8), first) == Approx(expected).margin(1e-12));
}

TEST_CASE("entropy is symmetric across a cut", "[state][property]") {
    std::mt19937_64 gen(29);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 4;
        const auto psi = testing::random_state(n, gen);
        for (const auto &cut : Bipartition::all(n)) {
            const Bipartition flipped(n, cut.subsystem_b());
            CHECK(std::abs(entanglement_entropy(psi, cut) - entanglement_entropy(psi, flipped)) < 1e-10);
        }
    }
}

TEST_CASE("Bipartition::all enumerates each cut once", "[state]") {
    CHECK(Bipartition::all(2).size() == 1);
    CHECK(Bipartition::all(3).size() == 3);
    CHECK(Bipartition::all(5).size() == 15);
    CHECK(Bipartition::all(1).empty());
}
