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

#include "cshadow/stats.hpp"

#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "cshadow/error.hpp"

namespace cshadow {

double empirical_variance(const std::vector<double> &values) {
    if (values.size() < 2) {
        throw DomainError("variance needs at least two values");
    }
    // Welford
    double mean = 0.0, m2 = 0.0;
    std::size_t k = 0;
    for (double v : values) {
        ++k;
        const double delta = v - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (v - mean);
    }
    return m2 / static_cast<double>(values.size() - 1);
}

double variance_standard_error(const std::vector<double> &values) {
    const double s2 = empirical_variance(values);
    const double mean = mean_of(values);
    const auto n = static_cast<double>(values.size());
    double m4 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m4 += d * d * d * d;
    }
    m4 /= n;
    const double spread = m4 - (n - 3.0) / (n - 1.0) * s2 * s2;
    return std::sqrt(std::max(spread, 0.0) / n);
}

double mean_of(const std::vector<double> &values) {
    if (values.empty()) {
        throw DomainError("mean of an empty sample");
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double mean_standard_error(const std::vector<double> &values) {
    return std::sqrt(empirical_variance(values) / static_cast<double>(values.size()));
}

double required_shots(double variance, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw DomainError("target error epsilon must be positive");
    }
    if (variance < 0.0) {
        throw DomainError("variance must be non-negative");
    }
    return variance / (epsilon * epsilon);
}

double pauli_norm_bound(int block_size) {
    if (block_size < 1) {
        throw DomainError("block size must be at least 1");
    }
    return std::pow(4.0, block_size);
}

double clifford_norm_bound(int total_qubits, int block_size) {
    if (block_size < 1 || block_size > total_qubits) {
        throw DomainError("block size must lie in [1, N]");
    }
    return 3.0 * std::pow(2.0, total_qubits - block_size);
}

double sample_complexity(double observable_count, double epsilon, double norm_bound) {
    if (!(observable_count >= 1.0) || !(epsilon > 0.0) || !(norm_bound >= 0.0)) {
        throw DomainError("sample complexity needs M >= 1, epsilon > 0, bound >= 0");
    }
    return std::max(std::log(observable_count), 1.0) * norm_bound / (epsilon * epsilon);
}

CrossoverEstimate crossover_block(int total_qubits) {
    if (total_qubits < 2) {
        throw DomainError("crossover needs N >= 2");
    }
    const double n = total_qubits;
    return {n / 3.0, (n + std::log2(3.0)) / 3.0};
}

VarianceReport make_variance_report(const std::vector<double> &values, int block_size, int total_qubits, double theta,
                                    Ensemble ensemble, double epsilon) {
    const double var = empirical_variance(values);
    return VarianceReport{block_size,
                          total_qubits,
                          theta,
                          ensemble,
                          values.size(),
                          mean_of(values),
                          var,
                          variance_standard_error(values),
                          epsilon,
                          required_shots(var, epsilon),
                          pauli_norm_bound(block_size),
                          clifford_norm_bound(total_qubits, block_size)};
}

double paired_t_pvalue_greater(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw DomainError("paired test needs two equal-length samples of size >= 2");
    }
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff[i] = a[i] - b[i];
    }
    const double se = mean_standard_error(diff);
    const double m = mean_of(diff);
    if (se == 0.0) {
        return m > 0.0 ? 0.0 : 1.0;
    }
    const boost::math::students_t dist(static_cast<double>(diff.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, m / se));
}

LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 3) {
        throw DomainError("line fit needs at least three (x, y) pairs");
    }
    const double mx = mean_of(x), my = mean_of(y);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw DomainError("line fit needs at least two distinct x values");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - intercept - slope * x[i];
        rss += r * r;
    }
    const double sigma2 = rss / static_cast<double>(x.size() - 2);
    return {slope, intercept, std::sqrt(sigma2 / sxx)};
}

} // namespace cshadow
