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

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cshadow/bench/config.hpp"
#include "cshadow/bench/output.hpp"
#include "cshadow/error.hpp"
#include "cshadow/witness.hpp"

using namespace cshadow;
using namespace cshadow::bench;

namespace {

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string ensemble;
    std::string shots;
    std::optional<double> epsilon;
    std::optional<int> replicas;
    std::optional<int> workers;
    std::string prepared_state;
};

void add_experiment_flags(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config, "Flat key = value config file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--ensemble", o.ensemble, "pauli, clifford or both");
    cmd->add_option("--shots", o.shots, "Comma-separated shot schedule");
    cmd->add_option("--epsilon", o.epsilon, "Target additive error");
    cmd->add_option("--replicas", o.replicas, "Seed replicas");
    cmd->add_option("--workers", o.workers, "Worker threads");
    cmd->add_option("--prepared-state", o.prepared_state, "target, ghz or mixed");
}

ExperimentConfig build_config(ExperimentId id, const Overrides &o) {
    ExperimentConfig cfg = default_config(id);
    if (!o.config.empty()) {
        cfg = load_config(o.config);
        if (cfg.experiment != id) {
            throw ConfigError(std::string("config is for '") + to_string(cfg.experiment) + "', not '" + to_string(id) + "'");
        }
    }
    if (o.seed) {
        cfg.seed = *o.seed;
    }
    if (!o.out.empty()) {
        cfg.output_dir = o.out;
    }
    if (!o.ensemble.empty()) {
        set_config_value(cfg, "ensembles", o.ensemble);
    }
    if (!o.shots.empty()) {
        set_config_value(cfg, "shots", o.shots);
    }
    if (o.epsilon) {
        cfg.epsilon = *o.epsilon;
    }
    if (o.replicas) {
        cfg.replicas = *o.replicas;
    }
    if (o.workers) {
        cfg.workers = *o.workers;
    }
    if (!o.prepared_state.empty()) {
        set_config_value(cfg, "prepared_state", o.prepared_state);
    }
    validate(cfg);
    return cfg;
}

int run(ExperimentId id, const Overrides &o) {
    const auto cfg = build_config(id, o);
    const auto start = std::chrono::steady_clock::now();
    const auto report = run_experiment(cfg);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_report(report, cfg, wall);
    for (const auto &line : report.summary) {
        std::cout << line << '\n';
    }
    std::cout << "wrote " << cfg.output_dir << " (config " << config_hash(cfg).substr(0, 12) << ", " << wall << " s)\n";
    return 0;
}

PureState parse_state(const std::string &spec, int n) {
    if (spec == "ghz") {
        return make_ghz(n);
    }
    if (spec.rfind("theta=", 0) == 0) {
        return make_theta_family(n, parse_angle(spec.substr(6)));
    }
    if (spec.rfind("basis=", 0) == 0) {
        return PureState::basis(n, std::stoull(spec.substr(6), nullptr, 2));
    }
    throw ConfigError("state must be ghz, mixed, theta=<angle> or basis=<bits>, got '" + spec + "'");
}

int print_error(const std::string &kind, const std::string &message, int code) {
    nlohmann::json line;
    line["error"] = {{"kind", kind}, {"message", message}};
    std::cerr << line.dump() << '\n';
    return code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Classical shadow benchmarks: Pauli vs Clifford witness estimation"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    Overrides ghz_o, entropy_o, error_o, crossover_o;
    auto *ghz = app.add_subcommand("ghz-reconstruct", "Reconstruct a GHZ density matrix from shadows");
    auto *entropy = app.add_subcommand("entropy-discrepancy", "Estimation error against entanglement entropy");
    auto *error = app.add_subcommand("error-vs-shots", "Witness estimation error against shot budget");
    auto *crossover = app.add_subcommand("crossover", "Required shots against witness block size");
    add_experiment_flags(ghz, ghz_o);
    add_experiment_flags(entropy, entropy_o);
    add_experiment_flags(error, error_o);
    add_experiment_flags(crossover, crossover_o);

    auto *bank = app.add_subcommand("bank", "Generate or inspect snapshot banks");
    bank->require_subcommand(1);
    auto *generate = bank->add_subcommand("generate", "Simulate shots and save them as a bank file");
    std::string state = "ghz", ensemble = "clifford", out_file;
    int num_qubits = 3, workers = 1;
    std::size_t shots = 5000;
    std::uint64_t seed = 42;
    generate->add_option("--state", state, "ghz, mixed, theta=<angle> or basis=<bits>");
    generate->add_option("--num-qubits", num_qubits, "Register size")->check(CLI::Range(1, kMaxQubits));
    generate->add_option("--ensemble", ensemble, "pauli or clifford");
    generate->add_option("--shots", shots, "Number of shots")->check(CLI::PositiveNumber);
    generate->add_option("--seed", seed, "Master seed");
    generate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    generate->add_option("--out", out_file, "Bank file to write")->required();

    auto *info = bank->add_subcommand("info", "Describe a bank and optionally estimate a witness from it");
    std::string in_file;
    std::optional<int> witness_block;
    double witness_theta = 0.0;
    std::string estimator = "mean";
    info->add_option("file", in_file, "Bank file")->required()->check(CLI::ExistingFile);
    info->add_option("--witness-block", witness_block, "Estimate the block-n perturbed GHZ witness");
    info->add_option("--theta", witness_theta, "Witness perturbation angle");
    info->add_option("--estimator", estimator, "mean or mom:<k>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return print_error("usage", e.what(), 2);
    }

    try {
        if (ghz->parsed()) {
            return run(ExperimentId::GhzReconstruct, ghz_o);
        }
        if (entropy->parsed()) {
            return run(ExperimentId::EntropyDiscrepancy, entropy_o);
        }
        if (error->parsed()) {
            return run(ExperimentId::ErrorVsShots, error_o);
        }
        if (crossover->parsed()) {
            return run(ExperimentId::Crossover, crossover_o);
        }
        if (generate->parsed()) {
            const Ensemble e = ensemble_from_string(ensemble);
            const auto sim = state == "mixed" ? ShotSimulator(HermitianOperator::maximally_mixed(num_qubits))
                                              : ShotSimulator(parse_state(state, num_qubits));
            const auto b = generate_bank(sim, e, shots, seed, state, workers);
            save_bank(out_file, b);
            std::cout << "wrote " << b.size() << " " << to_string(e) << " records to " << out_file << '\n';
            return 0;
        }
        if (info->parsed()) {
            const auto b = load_bank(in_file);
            std::cout << "ensemble: " << to_string(b.ensemble()) << '\n'
                      << "num_qubits: " << b.num_qubits() << '\n'
                      << "records: " << b.size() << '\n'
                      << "master_seed: " << b.master_seed() << '\n'
                      << "source: " << b.source_label() << '\n';
            if (witness_block) {
                const auto spec = embed_witness(*witness_block, b.num_qubits(), witness_theta);
                const auto values = witness_shot_values(spec, b);
                std::cout << "witness: " << spec.to_record() << '\n'
                          << "estimate: " << format_number(combine_shot_values(values, Estimator::parse(estimator)))
                          << '\n';
                if (values.size() >= 2) {
                    std::cout << "single_shot_variance: " << format_number(empirical_variance(values)) << '\n';
                }
            }
            return 0;
        }
    } catch (const ConfigError &e) {
        return print_error(e.kind(), e.what(), 2);
    } catch (const IoError &e) {
        return print_error(e.kind(), e.what(), 3);
    } catch (const Error &e) {
        return print_error(e.kind(), e.what(), 1);
    } catch (const std::exception &e) {
        return print_error("internal", e.what(), 1);
    }
    return 0;
}
