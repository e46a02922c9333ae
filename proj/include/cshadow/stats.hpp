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

#include <string>
#include <vector>

#include "cshadow/shadow.hpp"

namespace cshadow {

inline constexpr double kDefaultEpsilon = 0.01;

/// Unbiased sample variance (divisor S - 1), single pass.
double empirical_variance(const std::vector<double> &values);

/// Normal-approximation standard error of the sample variance,
/// sqrt((m4 - (S-3)/(S-1) s^4) / S) with m4 the central fourth moment.
double variance_standard_error(const std::vector<double> &values);

double mean_of(const std::vector<double> &values);

/// sqrt(variance / S)
double mean_standard_error(const std::vector<double> &values);

/// Var / epsilon^2
double required_shots(double variance, double epsilon);

/// Local-Pauli shadow-norm bound 4^n for an n-local observable with unit operator norm.
double pauli_norm_bound(int block_size);

/// Global-Clifford bound 3 Tr(O^2) = 3 * 2^{N-n} for the padded rank-1 projector.
double clifford_norm_bound(int total_qubits, int block_size);

/// Bound-shaped shot estimate max(ln M, 1) * bound / epsilon^2 (constant set to 1).
double sample_complexity(double observable_count, double epsilon, double norm_bound);

struct CrossoverEstimate {
    /// Solution of 4^n = 2^{N-n}: N / 3.
    double unit_factor;
    /// Solution of 4^n = 3 * 2^{N-n}: (N + log2 3) / 3.
    double with_clifford_factor;
};

CrossoverEstimate crossover_block(int total_qubits);

struct VarianceReport {
    int block_size;
    int total_qubits;
    double theta;
    Ensemble ensemble;
    std::size_t shots_used;
    double mean;
    double single_shot_variance;
    double variance_stderr;
    double epsilon;
    double s_req;
    double bound_pauli;
    double bound_clifford;
};

VarianceReport make_variance_report(const std::vector<double> &values, int block_size, int total_qubits, double theta,
                                    Ensemble ensemble, double epsilon);

/// One-sided paired t-test of mean(a - b) > 0. Returns the p-value.
double paired_t_pvalue_greater(const std::vector<double> &a, const std::vector<double> &b);

struct LinearFit {
    double slope;
    double intercept;
    double slope_stderr;
};

/// Ordinary least squares y = intercept + slope * x.
LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y);

} // namespace cshadow
