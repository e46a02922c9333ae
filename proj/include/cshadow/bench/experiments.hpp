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

#pragma once

#include <cstddef>
#include <vector>

#include "cshadow/bench/config.hpp"
#include "cshadow/stats.hpp"
#include "cshadow/witness.hpp"

namespace cshadow::bench {

struct GhzReconstruction {
    Ensemble ensemble;
    int num_qubits;
    std::size_t shots;
    Matrix ideal;
    Matrix reconstructed;
    double max_corner_error;
    double max_off_support;
    double trace_error;
};

std::vector<GhzReconstruction> run_ghz_reconstruct(const ExperimentConfig &cfg);

struct EntropyDiscrepancyResult {
    int num_qubits;
    std::size_t shots;
    std::vector<double> thetas;
    /// Entropy of qubit 0 against the rest, in bits.
    std::vector<double> entropy;
    std::vector<Ensemble> ensembles;
    /// discrepancy[e][t][r] = |o_hat - o| for ensemble e, theta t, replica r.
    std::vector<std::vector<std::vector<double>>> discrepancy;
    double bound_pauli;
    double bound_clifford;
};

EntropyDiscrepancyResult run_entropy_discrepancy(const ExperimentConfig &cfg);

struct EntropyTrend {
    /// Paired one-sided p-value for mean Pauli discrepancy at the last theta
    /// exceeding the first; NaN without a Pauli ensemble.
    double pauli_pvalue;
    /// Per-replica OLS slope of Clifford discrepancy against entropy,
    /// averaged over replicas, with its standard error.
    double clifford_slope;
    double clifford_slope_stderr;
};

EntropyTrend analyze_entropy_trend(const EntropyDiscrepancyResult &result);

struct ErrorPoint {
    int total_qubits;
    int block_size;
    double theta;
    Ensemble ensemble;
    std::size_t shots;
    double true_value;
    double mean_error;
    double error_stderr;
};

struct ErrorCurve {
    int total_qubits;
    int block_size;
    double theta;
    Ensemble ensemble;
    /// log10(error) against log10(shots).
    LinearFit loglog;
};

struct ErrorVsShotsResult {
    std::vector<ErrorPoint> points;
    std::vector<ErrorCurve> curves;
};

ErrorVsShotsResult run_error_vs_shots(const ExperimentConfig &cfg);

struct CrossoverPoint {
    double true_value;
    VarianceReport report;
};

/// Per (N, n, ensemble): the largest S_req over the theta grid.
struct CrossoverAggregate {
    int total_qubits;
    int block_size;
    Ensemble ensemble;
    double s_req;
    double s_req_stderr;
    double theta_at_max;
    double bound;
};

struct CrossoverSummary {
    int total_qubits;
    /// Smallest n with Clifford S_req <= Pauli S_req, or -1.
    int empirical_crossover;
    /// Largest n with Pauli S_req < Clifford S_req, or -1.
    int last_pauli_favourable;
    int sign_changes;
    bool pauli_non_decreasing;
    bool clifford_non_increasing;
    /// Points whose variance exceeds its norm bound by more than 5 standard errors.
    int bound_violations;
    CrossoverEstimate bound_crossover;
};

struct CrossoverResult {
    std::vector<CrossoverPoint> points;
    std::vector<CrossoverAggregate> aggregates;
    std::vector<CrossoverSummary> summaries;
};

CrossoverResult run_crossover(const ExperimentConfig &cfg);

/// Summary statistics of an aggregate table; exposed for testing.
CrossoverSummary summarize_crossover(int total_qubits, const std::vector<CrossoverAggregate> &aggregates,
                                     const std::vector<CrossoverPoint> &points);

} // namespace cshadow::bench
