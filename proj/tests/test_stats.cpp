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
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "cshadow/error.hpp"
#include "cshadow/stats.hpp"
#include "cshadow/witness.hpp"
#include "test_helpers.hpp"

using namespace cshadow;
using Catch::Approx;

namespace {

double two_pass_variance(const std::vector<double> &v) {
    double mean = 0.0;
    for (double x : v) {
        mean += x;
    }
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return ss / static_cast<double>(v.size() - 1);
}

} // namespace

TEST_CASE("empirical_variance", "[stats]") {
    CHECK(empirical_variance({1, 1, 1}) == 0.0);
    CHECK(empirical_variance({0, 2}) == Approx(2.0));
    std::mt19937_64 gen(1);
    std::normal_distribution<double> normal(1e3, 2.0);
    std::vector<double> values(100000);
    for (auto &v : values) {
        v = normal(gen);
    }
    CHECK(std::abs(empirical_variance(values) - two_pass_variance(values)) < 1e-12 * two_pass_variance(values) + 1e-12);
    CHECK_THROWS_AS(empirical_variance({1.0}), DomainError);
    CHECK_THROWS_AS(empirical_variance({}), DomainError);
}

TEST_CASE("variance standard error", "[stats]") {
    std::mt19937_64 gen(2);
    std::normal_distribution<double> normal;
    std::vector<double> values(20000);
    for (auto &v : values) {
        v = normal(gen);
    }
    // Gaussian data: SE of s^2 is about sqrt(2 / (S - 1)).
    CHECK(variance_standard_error(values) == Approx(std::sqrt(2.0 / 19999.0)).epsilon(0.1));
    CHECK(mean_standard_error(values) == Approx(std::sqrt(empirical_variance(values) / 20000.0)));
    CHECK(mean_of({1, 2, 3}) == Approx(2.0));
    CHECK_THROWS_AS(mean_of({}), DomainError);
}

TEST_CASE("required_shots", "[stats]") {
    CHECK(required_shots(1.0, 0.01) == Approx(1e4));
    CHECK(required_shots(16.0, 0.01) == Approx(1.6e5));
    CHECK(required_shots(0.0, 0.01) == 0.0);
    CHECK_THROWS_AS(required_shots(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(required_shots(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(required_shots(-1.0, 0.1), DomainError);
}

TEST_CASE("norm bounds", "[stats]") {
    CHECK(pauli_norm_bound(1) == 4.0);
    CHECK(pauli_norm_bound(2) == 16.0);
    CHECK(pauli_norm_bound(6) == 4096.0);
    CHECK(clifford_norm_bound(6, 2) == 48.0);
    CHECK(clifford_norm_bound(5, 5) == 3.0);
    CHECK(clifford_norm_bound(7, 3) == 48.0);
    CHECK_THROWS_AS(pauli_norm_bound(0), DomainError);
    CHECK_THROWS_AS(clifford_norm_bound(4, 5), DomainError);
}

TEST_CASE("sample_complexity", "[stats]") {
    CHECK(sample_complexity(1, 0.1, 3.0) == Approx(300.0));
    CHECK(sample_complexity(std::exp(1.0), 0.01, 16.0) == Approx(1.6e5));
    double previous = 0.0;
    for (double m : {1.0, 10.0, 100.0, 1000.0}) {
        const double v = sample_complexity(m, 0.05, 4.0);
        CHECK(v >= previous);
        previous = v;
    }
    CHECK(sample_complexity(10, 0.01, 4.0) > sample_complexity(10, 0.02, 4.0));
    CHECK_THROWS_AS(sample_complexity(0.5, 0.1, 1.0), DomainError);
    CHECK_THROWS_AS(sample_complexity(2, 0.0, 1.0), DomainError);
}

TEST_CASE("crossover_block", "[stats]") {
    const auto c = crossover_block(6);
    CHECK(c.unit_factor == Approx(2.0));
    CHECK(c.with_clifford_factor == Approx(2.0 + std::log2(3.0) / 3.0));
    CHECK(c.with_clifford_factor == Approx(2.53).margin(0.005));
    CHECK(std::pow(4.0, c.with_clifford_factor) == Approx(3.0 * std::pow(2.0, 6 - c.with_clifford_factor)));
    CHECK_THROWS_AS(crossover_block(1), DomainError);
}

TEST_CASE("variance report", "[stats]") {
    const std::vector<double> v{0.0, 2.0, 4.0};
    const auto r = make_variance_report(v, 2, 6, 0.3, Ensemble::Clifford, 0.01);
    CHECK(r.mean == Approx(2.0));
    CHECK(r.single_shot_variance == Approx(4.0));
    CHECK(r.s_req == Approx(4.0e4));
    CHECK(r.bound_pauli == 16.0);
    CHECK(r.bound_clifford == 48.0);
    CHECK(r.shots_used == 3);
}

TEST_CASE("required shots are invariant under a constant shift", "[stats][property]") {
    std::mt19937_64 gen(3);
    const auto rho = testing::random_density(3, gen);
    const auto bank = generate_bank(ShotSimulator(rho), Ensemble::Pauli, 500, 3, "shift");
    const auto spec = embed_witness(2, 3, 0.4);
    const auto projector = HermitianOperator::identity(3) * spec.alpha - spec.embedded_operator;
    const double with_shift = required_shots(empirical_variance(shot_values(spec.embedded_operator, bank)), 0.01);
    const double without = required_shots(empirical_variance(shot_values(projector, bank)), 0.01);
    CHECK(with_shift == Approx(without).epsilon(1e-10));
}

TEST_CASE("paired t-test", "[stats]") {
    std::vector<double> a, b;
    for (int i = 0; i < 20; ++i) {
        a.push_back(1.0 + 0.1 * (i % 3));
        b.push_back(0.5 + 0.1 * ((i + 1) % 3));
    }
    CHECK(paired_t_pvalue_greater(a, b) < 1e-6);
    CHECK(paired_t_pvalue_greater(b, a) > 0.999);
    // t = 1 with 2 degrees of freedom: p = (1 - 1/sqrt(3)) / 2.
    CHECK(paired_t_pvalue_greater({1, 2, 3}, {0, 2, 3}) == Approx((1.0 - 1.0 / std::sqrt(3.0)) / 2.0).margin(1e-12));
    CHECK_THROWS_AS(paired_t_pvalue_greater({1}, {1}), DomainError);
    CHECK_THROWS_AS(paired_t_pvalue_greater({1, 2}, {1, 2, 3}), DomainError);
}

TEST_CASE("fit_line", "[stats]") {
    const auto fit = fit_line({1, 2, 3, 4}, {3, 5, 7, 9});
    CHECK(fit.slope == Approx(2.0));
    CHECK(fit.intercept == Approx(1.0));
    CHECK(fit.slope_stderr == Approx(0.0).margin(1e-12));
    const auto noisy = fit_line({0, 1, 2}, {0, 1, 1});
    CHECK(noisy.slope == Approx(0.5));
    // Residuals (1/6, -1/3, 1/6): s^2 = (1/6)/1, Sxx = 2.
    CHECK(noisy.slope_stderr == Approx(std::sqrt(1.0 / 12.0)));
    CHECK_THROWS_AS(fit_line({1, 1, 1}, {1, 2, 3}), DomainError);
    CHECK_THROWS_AS(fit_line({1, 2}, {1, 2}), DomainError);
}
