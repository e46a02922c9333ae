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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cshadow/shadow.hpp"
#include "cshadow/stats.hpp"

namespace cshadow::bench {

enum class ExperimentId { GhzReconstruct, EntropyDiscrepancy, ErrorVsShots, Crossover };

const char *to_string(ExperimentId id);
ExperimentId experiment_from_string(const std::string &name);

/// State fed to the simulator. `Target` is the observable's own state
/// (rho_pert padded with |0> for witness experiments, the theta-family state
/// for entropy-discrepancy).
enum class PreparedState { Target, Ghz, Mixed };

const char *to_string(PreparedState p);
PreparedState prepared_state_from_string(const std::string &name);

struct ExperimentConfig {
    ExperimentId experiment = ExperimentId::Crossover;
    std::vector<int> total_qubits;
    std::vector<int> block_sizes;
    std::vector<double> thetas;
    std::vector<Ensemble> ensembles;
    std::vector<std::size_t> shots;
    double epsilon = kDefaultEpsilon;
    std::uint64_t seed = 42;
    Estimator estimator;
    PreparedState prepared_state = PreparedState::Target;
    int replicas = 1;
    int workers = 1;
    std::string output_dir = "results";
};

/// Defaults for one experiment; every field is populated.
ExperimentConfig default_config(ExperimentId id);

/// Flat `key = value` file. `experiment` is required; other keys override the
/// experiment's defaults. Unknown keys are rejected.
ExperimentConfig parse_config(std::istream &in);
ExperimentConfig load_config(const std::string &path);

/// Sets one field from its textual form, using the same syntax as the file.
void set_config_value(ExperimentConfig &cfg, const std::string &key, const std::string &value);

/// Throws ConfigError on the first violated constraint.
void validate(const ExperimentConfig &cfg);

/// Canonical `key = value` dump (fixed key order, round-trip precision).
/// Parsing it yields an identical config; its SHA-256 is the config hash.
std::string canonical_text(const ExperimentConfig &cfg);

/// Angle literal: a number, or `[c*]pi[/d]` such as `pi/4` or `3*pi/8`.
double parse_angle(const std::string &text);

} // namespace cshadow::bench
