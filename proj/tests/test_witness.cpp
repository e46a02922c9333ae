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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "cshadow/error.hpp"
#include "cshadow/witness.hpp"
#include "test_helpers.hpp"

using namespace cshadow;

namespace {

PureState random_product_state(int n, std::mt19937_64 &gen) { return PureState(n, testing::random_product_vector(n, gen)); }

} // namespace

TEST_CASE("ghz_witness", "[witness]") {
    for (int n = 2; n <= 5; ++n) {
        const auto w = ghz_witness(n);
        CHECK(w.expectation(make_ghz(n)) == Catch::Approx(-0.5).margin(1e-12));
        CHECK(w.expectation(PureState::basis(n, 0)) == Catch::Approx(0.0).margin(1e-12));
        const auto ev = w.eigenvalues();
        CHECK(ev.front() == Catch::Approx(-0.5).margin(1e-12));
        CHECK(ev.back() == Catch::Approx(0.5).margin(1e-12));
    }
    std::mt19937_64 gen(1);
    const auto w = ghz_witness(3);
    for (int i = 0; i < 10000; ++i) {
        CHECK(w.expectation(random_product_state(3, gen)) >= -1e-12);
    }
    CHECK_THROWS_AS(ghz_witness(1), DomainError);
}

TEST_CASE("find_separable_anchor", "[witness]") {
    for (int n : {2, 3, 4}) {
        const auto anchor = find_separable_anchor(n);
        CHECK(anchor.overlap(PureState::basis(n, 0)) == Catch::Approx(1.0).margin(1e-15));
        CHECK(std::abs(ghz_witness(n).expectation(anchor)) <= 1e-9);
        for (const auto &cut : Bipartition::all(n)) {
            CHECK(schmidt_max(anchor, cut) == Catch::Approx(1.0).margin(1e-12));
        }
    }
    CHECK_THROWS_AS(find_separable_anchor(1), DomainError);
}

TEST_CASE("perturbed_target", "[witness]") {
    SECTION("theta = 0 is GHZ") {
        CHECK(testing::max_abs_diff(perturbed_target(4, 0.0).amplitudes(), make_ghz(4).amplitudes()) < 1e-15);
    }
    SECTION("normalization at theta = pi/4, n = 2") {
        const double norm = std::sqrt(1.0 + 1.0 / std::sqrt(2.0));
        const auto psi = perturbed_target(2, std::numbers::pi / 4);
        const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
        CHECK(psi[3].real() == Catch::Approx(c / std::sqrt(2.0) / norm).margin(1e-15));
        CHECK(psi[0].real() == Catch::Approx((c / std::sqrt(2.0) + s) / norm).margin(1e-15));
    }
    SECTION("normalization constant closed form") {
        for (double theta : {0.1, 0.5, 1.2}) {
            const auto psi = perturbed_target(3, theta);
            const double norm = std::sqrt(1.0 + std::sin(2 * theta) / std::sqrt(2.0));
            CHECK(psi[7].real() == Catch::Approx(std::cos(theta) / std::sqrt(2.0) / norm).margin(1e-14));
        }
    }
    SECTION("GHZ overlap decreases along a theta grid") {
        const auto ghz = make_ghz(3);
        double previous = 1.0 + 1e-12;
        for (int k = 0; k < 40; ++k) {
            const double theta = k * (std::numbers::pi / 2) / 40;
            const double ov = perturbed_target(3, theta).overlap(ghz);
            CHECK(ov <= previous + 1e-12);
            previous = ov;
        }
    }
    CHECK_THROWS_AS(perturbed_target(3, std::numbers::pi / 2), DomainError);
    CHECK_THROWS_AS(perturbed_target(3, -0.01), DomainError);
}

TEST_CASE("alpha_of_theta", "[witness]") {
    SECTION("theta = 0 gives one half") {
        for (int n = 2; n <= 6; ++n) {
            CHECK(alpha_of_theta(perturbed_target(n, 0.0)) == Catch::Approx(0.5).margin(1e-12));
        }
    }
    SECTION("approaches one near pi/2") {
        CHECK(alpha_of_theta(perturbed_target(3, std::numbers::pi / 2 - 1e-6)) == Catch::Approx(1.0).margin(1e-5));
    }
    SECTION("at least one half and below one on a grid") {
        for (int k = 0; k < 15; ++k) {
            const double a = alpha_of_theta(perturbed_target(4, k * 0.1));
            CHECK(a >= 0.5 - 1e-12);
            CHECK(a < 1.0);
        }
    }
    SECTION("matches a brute-force product-state ascent at n = 3, theta = 0.3") {
        std::mt19937_64 gen(2026);
        const auto psi = perturbed_target(3, 0.3);
        CHECK(std::abs(alpha_of_theta(psi) - testing::brute_force_product_overlap(psi, 100000, gen)) < 1e-6);
    }
    SECTION("upper bounds overlaps with random biseparable states") {
        std::mt19937_64 gen(4);
        const auto psi = perturbed_target(4, 0.7);
        const double alpha = alpha_of_theta(psi);
        for (int i = 0; i < 2000; ++i) {
            const auto a = testing::random_state(1 + i % 2, gen);
            const auto b = testing::random_state(4 - a.num_qubits(), gen);
            CHECK(tensor(a, b).overlap(psi) <= alpha + 1e-12);
        }
    }
}

TEST_CASE("embed_witness", "[witness]") {
    SECTION("full block GHZ value") {
        const auto spec = embed_witness(6, 6, 0.0);
        CHECK(true_witness_value(spec, make_ghz(6)) == Catch::Approx(-0.5).margin(1e-12));
    }
    SECTION("projector part has trace 2^{N-n}") {
        const auto spec = embed_witness(2, 6, 0.0);
        CHECK(spec.alpha * 64.0 - spec.embedded_operator.trace() == Catch::Approx(16.0).margin(1e-10));
    }
    SECTION("value on the target padded with maximally mixed qubits") {
        for (double theta : {0.0, 0.4, 1.0}) {
            const auto spec = embed_witness(3, 5, theta);
            const auto rho = tensor(HermitianOperator::projector(spec.target), HermitianOperator::maximally_mixed(2));
            CHECK(true_witness_value(spec, rho) == Catch::Approx(spec.alpha - 1.0).margin(1e-12));
        }
    }
    SECTION("structure") {
        const auto spec = embed_witness(2, 4, 0.6);
        const Matrix expected = spec.alpha * Matrix::Identity(16, 16) -
                                testing::dense_kron(HermitianOperator::projector(spec.target).entries(),
                                                    Matrix::Identity(4, 4));
        CHECK(testing::max_abs_diff(spec.embedded_operator.entries(), expected) < 1e-12);
        CHECK(spec.alpha < 1.0);
        CHECK(spec.to_record().rfind("N=4 n=2 theta=0.6 alpha=", 0) == 0);
        CHECK(spec.to_record().find("anchor=product:|0>^2") != std::string::npos);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(embed_witness(5, 4, 0.0), DomainError);
        CHECK_THROWS_AS(embed_witness(1, 4, 0.0), DomainError);
        CHECK_THROWS_AS(true_witness_value(embed_witness(2, 3, 0.0), make_ghz(2)), SizeError);
    }
}

TEST_CASE("true_witness_value", "[witness]") {
    const auto spec = embed_witness(3, 3, 0.0);
    CHECK(true_witness_value(spec, HermitianOperator::projector(make_ghz(3))) == Catch::Approx(-0.5).margin(1e-12));
    CHECK(true_witness_value(spec, HermitianOperator::projector(spec.anchor)) == Catch::Approx(0.0).margin(1e-12));
    std::mt19937_64 gen(6);
    const auto a = testing::random_density(3, gen), b = testing::random_density(3, gen);
    CHECK(true_witness_value(spec, (a + b) * 0.5) ==
          Catch::Approx(0.5 * (true_witness_value(spec, a) + true_witness_value(spec, b))).margin(1e-12));
}

TEST_CASE("witness is non-negative on product states", "[witness][property]") {
    std::mt19937_64 gen(8);
    for (const auto &[n, total, theta] : {std::tuple{2, 3, 0.0}, {3, 4, 0.3}, {3, 3, 0.9}, {4, 5, 0.5}, {2, 2, 1.3}}) {
        const auto spec = embed_witness(n, total, theta);
        double worst = 1.0;
        for (int i = 0; i < 10000; ++i) {
            worst = std::min(worst, true_witness_value(spec, random_product_state(total, gen)));
        }
        CHECK(worst >= -1e-9);
    }
}

TEST_CASE("witness spectrum", "[witness][property]") {
    for (const auto &[n, total, theta] : {std::tuple{2, 4, 0.4}, {3, 5, 0.0}, {4, 4, 1.1}}) {
        const auto spec = embed_witness(n, total, theta);
        const auto ev = spec.embedded_operator.eigenvalues();
        const std::size_t low = std::size_t{1} << (total - n);
        for (std::size_t i = 0; i < ev.size(); ++i) {
            CHECK(std::abs(ev[i] - (i < low ? spec.alpha - 1.0 : spec.alpha)) < 1e-10);
        }
    }
}

TEST_CASE("witness value ignores the idle register", "[witness][property]") {
    std::mt19937_64 gen(10);
    const auto spec = embed_witness(2, 4, 0.5);
    for (int i = 0; i < 10; ++i) {
        const auto block = testing::random_density(2, gen);
        const double v1 = true_witness_value(spec, tensor(block, testing::random_density(2, gen)));
        const double v2 = true_witness_value(spec, tensor(block, testing::random_density(2, gen)));
        CHECK(std::abs(v1 - v2) < 1e-10);
    }
}

TEST_CASE("fast witness shot values agree with the generic path", "[witness][property]") {
    RngStream rng(12);
    for (const auto &[n, total] : {std::pair{2, 2}, {2, 5}, {3, 5}, {5, 5}, {4, 6}}) {
        const auto spec = embed_witness(n, total, 0.35);
        for (int i = 0; i < 20; ++i) {
            const std::uint64_t b = rng.below(dimension_of(total));
            const MeasurementRecord r = i % 2 == 0
                                            ? MeasurementRecord{Ensemble::Pauli, sample_pauli_bases(total, rng), b}
                                            : MeasurementRecord{Ensemble::Clifford, sample_clifford(total, rng), b};
            const auto frame = make_frame(r);
            CHECK(std::abs(witness_shot_value(spec, frame) - shot_value(spec.embedded_operator, frame)) < 1e-10);
        }
    }
}

TEST_CASE("padded_target_state", "[witness]") {
    const auto spec = embed_witness(2, 4, 0.2);
    const auto padded = padded_target_state(spec);
    CHECK(padded.overlap(tensor(spec.target, PureState::basis(2, 0))) == Catch::Approx(1.0).margin(1e-12));
    CHECK(true_witness_value(spec, padded) == Catch::Approx(spec.alpha - 1.0).margin(1e-12));
}
