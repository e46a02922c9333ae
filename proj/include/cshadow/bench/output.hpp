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

#include "cshadow/bench/config.hpp"
#include "cshadow/bench/experiments.hpp"

namespace cshadow::bench {

/// Long-format result row; every row of results.csv carries the seed and version.
struct ResultRow {
    std::string experiment;
    int total_qubits;
    int block_size;
    double theta;
    std::string ensemble;
    std::size_t shots;
    std::string metric;
    double value;
    double stderr_value;
};

/// Per-figure table. Cells are preformatted so reruns are byte-identical.
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct Plot {
    std::string name;
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<PlotSeries> series;
};

struct Report {
    ExperimentId experiment;
    std::vector<ResultRow> rows;
    std::vector<Table> tables;
    std::vector<Plot> plots;
    /// Human-readable `key: value` lines for the terminal.
    std::vector<std::string> summary;
};

const char *version();

/// Shortest round-trip decimal form.
std::string format_number(double v);

Report make_report(const std::vector<GhzReconstruction> &result);
Report make_report(const EntropyDiscrepancyResult &result);
Report make_report(const ErrorVsShotsResult &result);
Report make_report(const CrossoverResult &result);

/// Validates, runs the configured experiment and builds its report.
Report run_experiment(const ExperimentConfig &cfg);

/// Hex SHA-256 of the canonical config text with run-only fields
/// (workers, output_dir) normalized.
std::string config_hash(const ExperimentConfig &cfg);

void write_csv(const std::string &path, const Table &table);
std::string render_svg(const Plot &plot);

/// Writes every table as CSV with a .meta.json sidecar, every plot as SVG,
/// results.csv (the only file with a wall-time column) and config.ini into
/// cfg.output_dir.
void write_report(const Report &report, const ExperimentConfig &cfg, double wall_time_seconds);

} // namespace cshadow::bench
