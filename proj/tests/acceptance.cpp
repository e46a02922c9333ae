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

// Acceptance suite: one PASS/FAIL line per criterion, at the stated tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "cshadow/bench/experiments.hpp"
#include "cshadow/ensemble.hpp"
#include "cshadow/shadow.hpp"
#include "cshadow/stats.hpp"
#include "cshadow/witness.hpp"
#include "test_helpers.hpp"

using namespace cshadow;
using namespace cshadow::bench;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char *name, double time_limit_s, const std::function<Outcome()> &body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception &e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && elapsed > time_limit_s) {
        out.pass = false;
        out.detail += "; exceeded time limit " + std::to_string(time_limit_s) + " s";
    }
    failures += out.pass ? 0 : 1;
    std::printf("[%s] %d %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, name, out.detail.c_str(), elapsed);
    std::fflush(stdout);
}

std::string num(double v) {
    std::ostringstream s;
    s.precision(4);
    s << v;
    return s.str();
}

std::vector<PauliBasisString> single_qubit_bases() {
    return {PauliBasisString::parse("X"), PauliBasisString::parse("Y"), PauliBasisString::parse("Z")};
}

// Criterion 1
Outcome pauli_channel_identities() {
    std::mt19937_64 gen(1);
    double worst_inverse = 0.0, worst_channel = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const auto rho = testing::random_density(1, gen);
        Matrix acc = Matrix::Zero(2, 2);
        for (const auto &s : single_qubit_bases()) {
            const auto p = outcome_probabilities(rho, s);
            for (std::uint64_t b = 0; b < 2; ++b) {
                acc += p[b] * invert_pauli({Ensemble::Pauli, s, b}).entries();
            }
        }
        worst_inverse = std::max(worst_inverse, testing::max_abs_diff(acc / 3.0, rho.entries()));
    }
    for (int which = 0; which < 4; ++which) {
        const Matrix p = testing::single_pauli(which);
        Matrix acc = Matrix::Zero(2, 2);
        for (const auto &s : single_qubit_bases()) {
            const Matrix u = basis_rotation_unitary(s);
            for (Eigen::Index b = 0; b < 2; ++b) {
                const Vector v = u.adjoint().col(b);
                acc += (v.adjoint() * p * v)(0, 0) * v * v.adjoint();
            }
        }
        const Matrix expected = which == 0 ? p : Matrix(p / 3.0);
        worst_channel = std::max(worst_channel, testing::max_abs_diff(acc / 3.0, expected));
    }
    return {worst_inverse <= 1e-10 && worst_channel <= 1e-10,
            "max inverse error " + num(worst_inverse) + ", max channel error " + num(worst_channel) + " (tol 1e-10)"};
}

// Criterion 2
Outcome clifford_two_design() {
    std::mt19937_64 gen(2);
    const auto rho1 = testing::random_density(1, gen);
    const auto group = enumerate_clifford_group(1);
    Matrix acc = Matrix::Zero(2, 2);
    for (const auto &t : group) {
        const Matrix u = basis_rotation_unitary(t);
        const Matrix rotated = u * rho1.entries() * u.adjoint();
        for (Eigen::Index b = 0; b < 2; ++b) {
            const Vector v = u.adjoint().col(b);
            acc += rotated(b, b).real() * v * v.adjoint();
        }
    }
    acc /= static_cast<double>(group.size());
    const double exact_err = testing::max_abs_diff(acc, (rho1.entries() + Matrix::Identity(2, 2)) / 3.0);

    const auto rho2 = testing::random_density(2, gen);
    RngStream rng(2);
    Matrix sampled = Matrix::Zero(4, 4);
    const int draws = 200000;
    for (int i = 0; i < draws; ++i) {
        const Matrix u = basis_rotation_unitary(sample_clifford(2, rng));
        const Matrix rotated = u * rho2.entries() * u.adjoint();
        for (Eigen::Index b = 0; b < 4; ++b) {
            const Vector v = u.adjoint().col(b);
            sampled += rotated(b, b).real() * v * v.adjoint();
        }
    }
    sampled /= draws;
    const double sample_err = testing::max_abs_diff(sampled, (rho2.entries() + Matrix::Identity(4, 4)) / 5.0);
    return {group.size() == 24 && exact_err <= 1e-10 && sample_err <= 2e-3,
            "N=1 enumeration error " + num(exact_err) + " (tol 1e-10), N=2 sampled error " + num(sample_err) +
                " (tol 2e-3)"};
}

// Criterion 3
Outcome unbiased_at_scale() {
    const int total = 6;
    const double theta = 0.3;
    const auto block_target = perturbed_target(2, theta);
    const PureState prepared = tensor(block_target, PureState::basis(total - 2, 0));
    const ShotSimulator sim(prepared);
    const std::size_t shots = 200000;
    std::string detail;
    bool pass = true;
    for (Ensemble e : {Ensemble::Pauli, Ensemble::Clifford}) {
        const auto bank = generate_bank(sim, e, shots, 3 + static_cast<int>(e), "unbiased");
        std::vector<ShotFrame> frames;
        frames.reserve(bank.size());
        for (const auto &r : bank.records()) {
            frames.push_back(make_frame(r));
        }
        double worst_ratio = 0.0;
        for (int n = 2; n <= total; ++n) {
            const auto spec = embed_witness(n, total, theta);
            std::vector<double> values;
            values.reserve(frames.size());
            for (const auto &f : frames) {
                values.push_back(witness_shot_value(spec, f));
            }
            const double err = std::abs(mean_of(values) - true_witness_value(spec, prepared));
            const double allowed = 5.0 * std::sqrt(empirical_variance(values) / static_cast<double>(shots));
            worst_ratio = std::max(worst_ratio, err / allowed);
            pass = pass && err <= allowed;
        }
        detail += std::string(to_string(e)) + " worst |w_hat - w|/(5 sigma) = " + num(worst_ratio) + "; ";
    }
    return {pass, detail + "need <= 1 for n = 2..6"};
}

struct CrossoverRun {
    CrossoverResult result;
    double seconds;
};

const CrossoverRun &crossover_sweep() {
    static const CrossoverRun run = [] {
        const auto start = std::chrono::steady_clock::now();
        auto res = run_crossover(default_config(ExperimentId::Crossover));
        return CrossoverRun{std::move(res),
                            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
    }();
    return run;
}

// Criterion 4
Outcome variance_bound() {
    const auto &run = crossover_sweep();
    int points = 0, violations = 0;
    double worst = 0.0;
    for (const auto &p : run.result.points) {
        const auto &r = p.report;
        if (r.total_qubits != 6) {
            continue;
        }
        ++points;
        const double bound = r.ensemble == Ensemble::Pauli ? r.bound_pauli : r.bound_clifford;
        worst = std::max(worst, r.single_shot_variance / bound);
        violations += r.single_shot_variance > bound + 5.0 * r.variance_stderr ? 1 : 0;
    }
    return {violations == 0 && points == 5 * 8 * 2,
            std::to_string(points) + " points at 10^4 shots, " + std::to_string(violations) +
                " violations, max Var/bound = " + num(worst) + " (sweep took " + num(run.seconds) + " s)"};
}

// Criterion 5
Outcome monotone_single_crossover() {
    const auto &run = crossover_sweep();
    bool pass = true;
    std::string detail;
    for (const auto &s : run.result.summaries) {
        const bool in_range = s.total_qubits == 6 ? (s.empirical_crossover >= 2 && s.empirical_crossover <= 4)
                                                  : (s.empirical_crossover >= 2 && s.empirical_crossover <= 5);
        const bool ok = s.pauli_non_decreasing && s.clifford_non_increasing && s.sign_changes == 1 && in_range;
        pass = pass && ok;
        detail += "N=" + std::to_string(s.total_qubits) + ": pauli_mono=" + (s.pauli_non_decreasing ? "y" : "n") +
                  " clifford_mono=" + (s.clifford_non_increasing ? "y" : "n") +
                  " sign_changes=" + std::to_string(s.sign_changes) +
                  " crossover=" + std::to_string(s.empirical_crossover) +
                  (s.total_qubits == 6 ? " (need 2..4)" : " (need 2..5)") + "; ";
    }
    return {pass, detail};
}

// Criterion 6
Outcome entropy_trend() {
    const auto cfg = default_config(ExperimentId::EntropyDiscrepancy);
    const auto res = run_entropy_discrepancy(cfg);
    const auto trend = analyze_entropy_trend(res);
    const bool pauli_ok = trend.pauli_pvalue < 0.01;
    const bool clifford_ok = std::abs(trend.clifford_slope) <= 3.0 * trend.clifford_slope_stderr;
    return {pauli_ok && clifford_ok,
            "N=" + std::to_string(res.num_qubits) + ", " + std::to_string(cfg.replicas) + " replicas x " +
                std::to_string(res.shots) + " shots, prepared " + to_string(cfg.prepared_state) +
                ": Pauli paired p = " + num(trend.pauli_pvalue) + " (need < 0.01), Clifford slope " +
                num(trend.clifford_slope) + " +/- " + num(trend.clifford_slope_stderr) + " (need |slope| <= 3 se)"};
}

// Criterion 7
Outcome witness_analytics() {
    bool pass = true;
    std::string detail;
    const double alpha0 = alpha_of_theta(perturbed_target(3, 0.0));
    pass = pass && std::abs(alpha0 - 0.5) <= 1e-15;
    detail += "alpha(0) - 1/2 = " + num(alpha0 - 0.5);

    const auto thetas = default_config(ExperimentId::Crossover).thetas;
    double worst_hs = 0.0;
    for (int total : {6, 7}) {
        for (int n = 2; n <= 6; ++n) {
            for (double theta : thetas) {
                const auto spec = embed_witness(n, total, theta);
                const Matrix projector =
                    spec.alpha * Matrix::Identity(spec.embedded_operator.entries().rows(),
                                                  spec.embedded_operator.entries().cols()) -
                    spec.embedded_operator.entries();
                const double hs = (projector * projector).trace().real();
                worst_hs = std::max(worst_hs, std::abs(hs - std::pow(2.0, total - n)));
            }
        }
    }
    pass = pass && worst_hs <= 1e-10;
    detail += ", max |Tr(O^2) - 2^(N-n)| = " + num(worst_hs);

    double worst_ghz = 0.0;
    for (int n = 2; n <= 6; ++n) {
        const auto w = ghz_witness(n);
        worst_ghz = std::max(worst_ghz, std::abs(w.expectation(make_ghz(n)) + 0.5));
        worst_ghz = std::max(worst_ghz, std::abs(w.expectation(find_separable_anchor(n))));
    }
    pass = pass && worst_ghz <= 1e-12;
    detail += ", GHZ witness error " + num(worst_ghz);

    std::mt19937_64 gen(7);
    double worst_alpha = 0.0;
    for (double theta : {0.0, 0.3, 0.6, 0.9, 1.2}) {
        const auto psi = perturbed_target(3, theta);
        worst_alpha = std::max(worst_alpha, std::abs(alpha_of_theta(psi) - testing::brute_force_product_overlap(psi, 100000, gen)));
    }
    pass = pass && worst_alpha <= 1e-6;
    detail += ", max |alpha - ascent oracle| = " + num(worst_alpha);
    return {pass, detail};
}

// Criterion 8
Outcome ghz_reconstruction() {
    const auto res = run_ghz_reconstruct(default_config(ExperimentId::GhzReconstruct));
    const auto &r = res.front();
    return {r.ensemble == Ensemble::Clifford && r.shots == 5000 && r.max_corner_error <= 0.05 &&
                r.max_off_support <= 0.05 && r.trace_error <= 1e-10,
            "corner error " + num(r.max_corner_error) + ", off-support " + num(r.max_off_support) + ", trace error " +
                num(r.trace_error)};
}

} // namespace

int main() {
    criterion(1, "exact Pauli channel identities", 1.0, pauli_channel_identities);
    criterion(2, "Clifford 2-design check", 120.0, clifford_two_design);
    criterion(3, "unbiasedness at N=6", 600.0, unbiased_at_scale);
    criterion(4, "variance-bound inequality", 0.0, variance_bound);
    criterion(5, "monotonicity and single crossover", 0.0, monotone_single_crossover);
    criterion(6, "entropy discrepancy trend", 300.0, entropy_trend);
    criterion(7, "witness analytics", 0.0, witness_analytics);
    criterion(8, "GHZ reconstruction", 0.0, ghz_reconstruction);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
