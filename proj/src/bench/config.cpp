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

#include "cshadow/bench/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "cshadow/error.hpp"

namespace cshadow::bench {

namespace {

std::string trim(const std::string &s) { return boost::algorithm::trim_copy(s); }

template <typename T> T parse_number(const std::string &text, const std::string &key) {
    const std::string t = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError(key + ": cannot parse '" + text + "' as a number");
    }
    return value;
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> parts;
    boost::algorithm::split(parts, text, boost::algorithm::is_any_of(","));
    for (auto &p : parts) {
        p = trim(p);
    }
    if (parts.size() == 1 && parts.front().empty()) {
        parts.clear();
    }
    return parts;
}

// "2,3,4" or "2..6"
std::vector<int> parse_int_list(const std::string &text, const std::string &key) {
    std::vector<int> out;
    for (const auto &part : split_list(text)) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_number<int>(part, key));
            continue;
        }
        const int lo = parse_number<int>(part.substr(0, dots), key);
        const int hi = parse_number<int>(part.substr(dots + 2), key);
        if (hi < lo) {
            throw ConfigError(key + ": empty range '" + part + "'");
        }
        for (int v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
    }
    return out;
}

// "0, pi/8, pi/4" or "linspace(0, pi/4, 8)"
std::vector<double> parse_angle_list(const std::string &text, const std::string &key) {
    const std::string t = trim(text);
    if (boost::algorithm::starts_with(t, "linspace(") && boost::algorithm::ends_with(t, ")")) {
        const auto args = split_list(t.substr(9, t.size() - 10));
        if (args.size() != 3) {
            throw ConfigError(key + ": linspace takes (start, stop, count)");
        }
        const double a = parse_angle(args[0]);
        const double b = parse_angle(args[1]);
        const int count = parse_number<int>(args[2], key);
        if (count < 1) {
            throw ConfigError(key + ": linspace count must be positive");
        }
        std::vector<double> out;
        for (int i = 0; i < count; ++i) {
            out.push_back(count == 1 ? a : a + (b - a) * i / (count - 1));
        }
        return out;
    }
    std::vector<double> out;
    for (const auto &part : split_list(t)) {
        try {
            out.push_back(parse_angle(part));
        } catch (const ConfigError &e) {
            throw ConfigError(key + ": " + e.what());
        }
    }
    return out;
}

std::vector<Ensemble> parse_ensembles(const std::string &text) {
    if (trim(text) == "both") {
        return {Ensemble::Pauli, Ensemble::Clifford};
    }
    std::vector<Ensemble> out;
    for (const auto &part : split_list(text)) {
        try {
            out.push_back(ensemble_from_string(part));
        } catch (const Error &) {
            throw ConfigError("ensembles: expected pauli, clifford or both, got '" + part + "'");
        }
    }
    return out;
}

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

template <typename T, typename F> std::string join(const std::vector<T> &values, F format) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format(values[i]);
    }
    return out;
}

const std::vector<std::string> &known_keys() {
    static const std::vector<std::string> keys{"experiment", "num_qubits",     "block_sizes", "thetas",
                                               "ensembles",  "shots",          "epsilon",     "seed",
                                               "estimator",  "prepared_state", "replicas",    "workers",
                                               "output_dir"};
    return keys;
}

std::vector<double> default_theta_grid() {
    std::vector<double> thetas;
    for (int i = 0; i < 8; ++i) {
        thetas.push_back(std::numbers::pi / 4 * i / 7);
    }
    return thetas;
}

} // namespace

const char *to_string(ExperimentId id) {
    switch (id) {
    case ExperimentId::GhzReconstruct:
        return "ghz-reconstruct";
    case ExperimentId::EntropyDiscrepancy:
        return "entropy-discrepancy";
    case ExperimentId::ErrorVsShots:
        return "error-vs-shots";
    case ExperimentId::Crossover:
        return "crossover";
    }
    return "?";
}

ExperimentId experiment_from_string(const std::string &name) {
    for (auto id : {ExperimentId::GhzReconstruct, ExperimentId::EntropyDiscrepancy, ExperimentId::ErrorVsShots,
                    ExperimentId::Crossover}) {
        if (name == to_string(id)) {
            return id;
        }
    }
    throw ConfigError("unknown experiment '" + name + "'");
}

const char *to_string(PreparedState p) {
    switch (p) {
    case PreparedState::Target:
        return "target";
    case PreparedState::Ghz:
        return "ghz";
    case PreparedState::Mixed:
        return "mixed";
    }
    return "?";
}

PreparedState prepared_state_from_string(const std::string &name) {
    for (auto p : {PreparedState::Target, PreparedState::Ghz, PreparedState::Mixed}) {
        if (name == to_string(p)) {
            return p;
        }
    }
    throw ConfigError("prepared_state must be target, ghz or mixed, got '" + name + "'");
}

double parse_angle(const std::string &text) {
    std::string t = trim(text);
    const auto pi_at = t.find("pi");
    if (pi_at == std::string::npos) {
        return parse_number<double>(t, "angle");
    }
    double coefficient = 1.0;
    double divisor = 1.0;
    const std::string head = trim(t.substr(0, pi_at));
    const std::string tail = trim(t.substr(pi_at + 2));
    if (!head.empty()) {
        if (head.back() != '*') {
            throw ConfigError("cannot parse angle '" + text + "'");
        }
        coefficient = parse_number<double>(head.substr(0, head.size() - 1), "angle");
    }
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw ConfigError("cannot parse angle '" + text + "'");
        }
        divisor = parse_number<double>(tail.substr(1), "angle");
        if (divisor == 0.0) {
            throw ConfigError("angle '" + text + "' divides by zero");
        }
    }
    return coefficient * std::numbers::pi / divisor;
}

ExperimentConfig default_config(ExperimentId id) {
    ExperimentConfig cfg;
    cfg.experiment = id;
    cfg.thetas = default_theta_grid();
    cfg.ensembles = {Ensemble::Pauli, Ensemble::Clifford};
    switch (id) {
    case ExperimentId::GhzReconstruct:
        cfg.total_qubits = {3};
        cfg.block_sizes = {3};
        cfg.thetas = {0.0};
        cfg.ensembles = {Ensemble::Clifford};
        cfg.shots = {5000};
        cfg.prepared_state = PreparedState::Ghz;
        cfg.output_dir = "results/ghz-reconstruct";
        break;
    case ExperimentId::EntropyDiscrepancy:
        cfg.total_qubits = {4};
        cfg.block_sizes = {4};
        cfg.shots = {5000};
        cfg.replicas = 20;
        cfg.prepared_state = PreparedState::Mixed;
        cfg.output_dir = "results/entropy-discrepancy";
        break;
    case ExperimentId::ErrorVsShots:
        cfg.total_qubits = {6};
        cfg.block_sizes = {2, 3, 4, 5, 6};
        cfg.shots = {100, 316, 1000, 3162, 10000};
        cfg.replicas = 20;
        cfg.output_dir = "results/error-vs-shots";
        break;
    case ExperimentId::Crossover:
        cfg.total_qubits = {6, 7};
        cfg.block_sizes = {2, 3, 4, 5, 6};
        cfg.shots = {10000};
        cfg.output_dir = "results/crossover";
        break;
    }
    return cfg;
}

void set_config_value(ExperimentConfig &cfg, const std::string &key, const std::string &raw) {
    const std::string value = trim(raw);
    if (key == "experiment") {
        cfg.experiment = experiment_from_string(value);
    } else if (key == "num_qubits") {
        cfg.total_qubits = parse_int_list(value, key);
    } else if (key == "block_sizes") {
        cfg.block_sizes = parse_int_list(value, key);
    } else if (key == "thetas") {
        cfg.thetas = parse_angle_list(value, key);
    } else if (key == "ensembles") {
        cfg.ensembles = parse_ensembles(value);
    } else if (key == "shots") {
        cfg.shots.clear();
        for (const auto &part : split_list(value)) {
            cfg.shots.push_back(parse_number<std::size_t>(part, key));
        }
    } else if (key == "epsilon") {
        cfg.epsilon = parse_number<double>(value, key);
    } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(value, key);
    } else if (key == "estimator") {
        try {
            cfg.estimator = Estimator::parse(value);
        } catch (const Error &e) {
            throw ConfigError(std::string("estimator: ") + e.what());
        }
    } else if (key == "prepared_state") {
        cfg.prepared_state = prepared_state_from_string(value);
    } else if (key == "replicas") {
        cfg.replicas = parse_number<int>(value, key);
    } else if (key == "workers") {
        cfg.workers = parse_number<int>(value, key);
    } else if (key == "output_dir") {
        cfg.output_dir = value;
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config(std::istream &in) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error &e) {
        throw ConfigError(std::string("malformed config: ") + e.message() + " (line " + std::to_string(e.line()) +
                          ")");
    }
    for (const auto &[key, child] : tree) {
        if (!child.empty()) {
            throw ConfigError("config sections are not supported ('[" + key + "]')");
        }
        if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    const auto id = tree.get_optional<std::string>("experiment");
    if (!id) {
        throw ConfigError("config must set 'experiment'");
    }
    ExperimentConfig cfg = default_config(experiment_from_string(trim(*id)));
    for (const auto &[key, child] : tree) {
        if (key != "experiment") {
            set_config_value(cfg, key, child.data());
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config '" + path + "'");
    }
    return parse_config(in);
}

void validate(const ExperimentConfig &cfg) {
    auto fail = [](const std::string &msg) { throw ConfigError(msg); };
    if (cfg.total_qubits.empty()) {
        fail("num_qubits must not be empty");
    }
    if (cfg.block_sizes.empty()) {
        fail("block_sizes must not be empty");
    }
    if (cfg.thetas.empty()) {
        fail("thetas must not be empty");
    }
    if (cfg.ensembles.empty()) {
        fail("ensembles must not be empty");
    }
    if (cfg.shots.empty()) {
        fail("shots must not be empty");
    }
    if (std::set<Ensemble>(cfg.ensembles.begin(), cfg.ensembles.end()).size() != cfg.ensembles.size()) {
        fail("ensembles contains duplicates");
    }
    for (std::size_t i = 0; i < cfg.shots.size(); ++i) {
        if (cfg.shots[i] < 2) {
            fail("every shots entry must be at least 2");
        }
        if (i > 0 && cfg.shots[i] <= cfg.shots[i - 1]) {
            fail("shots schedule must be strictly increasing");
        }
    }
    for (int n_total : cfg.total_qubits) {
        if (n_total < 1 || n_total > kMaxQubits) {
            fail("num_qubits entries must lie in [1, " + std::to_string(kMaxQubits) + "]");
        }
    }
    if (std::set<int>(cfg.total_qubits.begin(), cfg.total_qubits.end()).size() != cfg.total_qubits.size()) {
        fail("num_qubits contains duplicates");
    }
    if (std::set<int>(cfg.block_sizes.begin(), cfg.block_sizes.end()).size() != cfg.block_sizes.size()) {
        fail("block_sizes contains duplicates");
    }
    if (!std::is_sorted(cfg.block_sizes.begin(), cfg.block_sizes.end())) {
        fail("block_sizes must be increasing");
    }
    if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) {
        fail("epsilon must be positive");
    }
    if (cfg.replicas < 1) {
        fail("replicas must be at least 1");
    }
    if (cfg.workers < 1) {
        fail("workers must be at least 1");
    }
    if (cfg.output_dir.empty()) {
        fail("output_dir must not be empty");
    }
    if (cfg.estimator.kind == Estimator::Kind::MedianOfMeans && cfg.estimator.batches > cfg.shots.front()) {
        fail("estimator batch count exceeds the smallest shot budget");
    }
    for (double theta : cfg.thetas) {
        if (!(theta >= 0.0) || !(theta < std::numbers::pi / 2)) {
            fail("thetas must lie in [0, pi/2)");
        }
    }
    switch (cfg.experiment) {
    case ExperimentId::GhzReconstruct:
        if (cfg.total_qubits.size() != 1 || cfg.shots.size() != 1) {
            fail("ghz-reconstruct takes a single num_qubits and a single shots value");
        }
        break;
    case ExperimentId::EntropyDiscrepancy:
        if (cfg.total_qubits.size() != 1 || cfg.total_qubits.front() < 2) {
            fail("entropy-discrepancy takes a single num_qubits >= 2");
        }
        if (cfg.shots.size() != 1) {
            fail("entropy-discrepancy takes a single shots value");
        }
        if (cfg.replicas < 2) {
            fail("entropy-discrepancy needs at least 2 replicas");
        }
        for (double theta : cfg.thetas) {
            if (theta > std::numbers::pi / 4 + 1e-12) {
                fail("entropy-discrepancy thetas must lie in [0, pi/4]");
            }
        }
        break;
    case ExperimentId::ErrorVsShots:
    case ExperimentId::Crossover:
        for (int n_total : cfg.total_qubits) {
            for (int n : cfg.block_sizes) {
                if (n < 2 || n > n_total) {
                    fail("block_sizes must lie in [2, num_qubits] for every num_qubits");
                }
            }
        }
        if (cfg.experiment == ExperimentId::ErrorVsShots && cfg.shots.size() < 2) {
            fail("error-vs-shots needs at least two shot budgets");
        }
        if (cfg.experiment == ExperimentId::Crossover && cfg.shots.size() != 1) {
            fail("crossover takes a single shots value");
        }
        break;
    }
}

std::string canonical_text(const ExperimentConfig &cfg) {
    std::ostringstream out;
    const auto ints = [](int v) { return std::to_string(v); };
    out << "experiment = " << to_string(cfg.experiment) << '\n';
    out << "num_qubits = " << join(cfg.total_qubits, ints) << '\n';
    out << "block_sizes = " << join(cfg.block_sizes, ints) << '\n';
    out << "thetas = " << join(cfg.thetas, format_double) << '\n';
    out << "ensembles = " << join(cfg.ensembles, [](Ensemble e) { return std::string(cshadow::to_string(e)); })
        << '\n';
    out << "shots = " << join(cfg.shots, [](std::size_t s) { return std::to_string(s); }) << '\n';
    out << "epsilon = " << format_double(cfg.epsilon) << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "estimator = " << cfg.estimator.to_string() << '\n';
    out << "prepared_state = " << to_string(cfg.prepared_state) << '\n';
    out << "replicas = " << cfg.replicas << '\n';
    out << "workers = " << cfg.workers << '\n';
    out << "output_dir = " << cfg.output_dir << '\n';
    return out.str();
}

} // namespace cshadow::bench
