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

#include "cshadow/bench/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "cshadow/error.hpp"
#include "cshadow/parallel.hpp"

namespace cshadow::bench {

namespace {

std::uint64_t fnv1a(const std::string &text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fmt(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

// Master seed of the bank identified by `key`.
std::uint64_t bank_seed(std::uint64_t master, const std::string &key) {
    return RngStream::derive(master, fnv1a(key)).seed();
}

struct Prepared {
    std::string label;
    std::optional<PureState> pure;
    std::optional<HermitianOperator> mixed;

    ShotSimulator simulator() const { return pure ? ShotSimulator(*pure) : ShotSimulator(*mixed); }
    HermitianOperator density() const { return pure ? HermitianOperator::projector(*pure) : *mixed; }
};

Prepared shared_state(PreparedState kind, int total_qubits) {
    if (kind == PreparedState::Ghz) {
        return {"ghz", make_ghz(total_qubits), std::nullopt};
    }
    return {"mixed", std::nullopt, HermitianOperator::maximally_mixed(total_qubits)};
}

double witness_true_value(const WitnessSpec &spec, const Prepared &p) {
    return p.pure ? true_witness_value(spec, *p.pure) : true_witness_value(spec, *p.mixed);
}

std::vector<ShotFrame> frames_of(const SnapshotBank &bank) {
    std::vector<ShotFrame> frames;
    frames.reserve(bank.size());
    for (const auto &r : bank.records()) {
        frames.push_back(make_frame(r));
    }
    return frames;
}

std::vector<double> witness_values(const WitnessSpec &spec, const std::vector<ShotFrame> &frames) {
    std::vector<double> values;
    values.reserve(frames.size());
    for (const auto &f : frames) {
        values.push_back(witness_shot_value(spec, f));
    }
    return values;
}

double replica_stderr(const std::vector<double> &values) {
    return values.size() < 2 ? 0.0 : mean_standard_error(values);
}

// One unit of bank work: a register size, an ensemble and a replica.
struct BankUnit {
    int total_qubits;
    Ensemble ensemble;
    int replica;
};

std::vector<BankUnit> bank_units(const ExperimentConfig &cfg, int replicas) {
    std::vector<BankUnit> units;
    for (int n_total : cfg.total_qubits) {
        for (Ensemble e : cfg.ensembles) {
            for (int r = 0; r < replicas; ++r) {
                units.push_back({n_total, e, r});
            }
        }
    }
    return units;
}

std::string unit_key(const char *experiment, const BankUnit &u, const std::string &state_label) {
    return std::string(experiment) + "/N=" + std::to_string(u.total_qubits) + "/" + to_string(u.ensemble) + "/" +
           state_label + "/r=" + std::to_string(u.replica);
}

// Runs `evaluate(spec_index, spec, values, true_value)` for every witness
// (n, theta) of the unit, generating banks per the prepared-state policy:
// one shared bank per unit for GHZ / mixed, one per witness for the target.
template <typename Evaluate>
void for_each_witness(const ExperimentConfig &cfg, const BankUnit &unit, std::size_t shots, const char *experiment,
                      Evaluate evaluate) {
    std::optional<Prepared> shared;
    std::vector<ShotFrame> shared_frames;
    if (cfg.prepared_state != PreparedState::Target) {
        shared = shared_state(cfg.prepared_state, unit.total_qubits);
        const auto bank = generate_bank(shared->simulator(), unit.ensemble, shots,
                                        bank_seed(cfg.seed, unit_key(experiment, unit, shared->label)), shared->label);
        shared_frames = frames_of(bank);
    }
    std::size_t index = 0;
    for (int n : cfg.block_sizes) {
        for (double theta : cfg.thetas) {
            const auto spec = embed_witness(n, unit.total_qubits, theta);
            if (shared) {
                evaluate(index++, spec, witness_values(spec, shared_frames), witness_true_value(spec, *shared));
                continue;
            }
            const Prepared target{"target:n=" + std::to_string(n) + ",theta=" + fmt(theta), padded_target_state(spec),
                                  std::nullopt};
            const auto bank = generate_bank(target.simulator(), unit.ensemble, shots,
                                            bank_seed(cfg.seed, unit_key(experiment, unit, target.label)), target.label);
            evaluate(index++, spec, witness_values(spec, frames_of(bank)), witness_true_value(spec, target));
        }
    }
}

} // namespace

std::vector<GhzReconstruction> run_ghz_reconstruct(const ExperimentConfig &cfg) {
    validate(cfg);
    const int n = cfg.total_qubits.front();
    const std::size_t shots = cfg.shots.front();
    const Prepared prepared = cfg.prepared_state == PreparedState::Mixed ? shared_state(PreparedState::Mixed, n)
                                                                         : shared_state(PreparedState::Ghz, n);
    const Matrix ideal = prepared.density().entries();
    std::vector<GhzReconstruction> out;
    for (Ensemble e : cfg.ensembles) {
        const BankUnit unit{n, e, 0};
        const auto bank = generate_bank(prepared.simulator(), e, shots,
                                        bank_seed(cfg.seed, unit_key("ghz-reconstruct", unit, prepared.label)),
                                        prepared.label, cfg.workers);
        const Matrix rec = reconstruct_density(bank).entries();
        const auto d = static_cast<Eigen::Index>(dimension_of(n));
        double corner = 0.0, off = 0.0;
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                const double err = std::abs(rec(r, c) - ideal(r, c));
                if (std::abs(ideal(r, c)) > 1e-12) {
                    corner = std::max(corner, err);
                } else {
                    off = std::max(off, err);
                }
            }
        }
        out.push_back({e, n, shots, ideal, rec, corner, off, std::abs(rec.trace() - Complex(1.0))});
    }
    return out;
}

EntropyDiscrepancyResult run_entropy_discrepancy(const ExperimentConfig &cfg) {
    validate(cfg);
    EntropyDiscrepancyResult res;
    const int n = cfg.total_qubits.front();
    res.num_qubits = n;
    res.shots = cfg.shots.front();
    res.thetas = cfg.thetas;
    res.ensembles = cfg.ensembles;
    const double s = static_cast<double>(res.shots);
    res.bound_pauli = std::sqrt(std::pow(4.0, n)) / std::sqrt(s);
    res.bound_clifford = std::sqrt(3.0) / std::sqrt(s);

    std::vector<PureState> states;
    std::vector<HermitianOperator> observables;
    const Bipartition cut(n, {0});
    for (double theta : cfg.thetas) {
        states.push_back(make_theta_family(n, theta));
        observables.push_back(HermitianOperator::projector(states.back()));
        res.entropy.push_back(entanglement_entropy(states.back(), cut));
    }
    const std::size_t nt = cfg.thetas.size();
    res.discrepancy.assign(cfg.ensembles.size(),
                           std::vector<std::vector<double>>(nt, std::vector<double>(static_cast<std::size_t>(cfg.replicas))));

    const auto units = bank_units(cfg, cfg.replicas);
    detail::parallel_for(units.size(), cfg.workers, [&](std::size_t ui) {
        const auto &unit = units[ui];
        const auto ei = static_cast<std::size_t>(
            std::find(cfg.ensembles.begin(), cfg.ensembles.end(), unit.ensemble) - cfg.ensembles.begin());
        std::optional<Prepared> shared;
        std::optional<SnapshotBank> shared_bank;
        if (cfg.prepared_state != PreparedState::Target) {
            shared = shared_state(cfg.prepared_state, n);
            shared_bank = generate_bank(shared->simulator(), unit.ensemble, res.shots,
                                        bank_seed(cfg.seed, unit_key("entropy-discrepancy", unit, shared->label)),
                                        shared->label);
        }
        for (std::size_t t = 0; t < nt; ++t) {
            const auto &obs = observables[t];
            double truth = 0.0;
            std::vector<double> values;
            if (shared) {
                truth = obs.trace_product(shared->density());
                values = shot_values(obs, *shared_bank);
            } else {
                const Prepared target{"target:theta=" + fmt(cfg.thetas[t]), states[t], std::nullopt};
                truth = 1.0;
                const auto bank =
                    generate_bank(target.simulator(), unit.ensemble, res.shots,
                                  bank_seed(cfg.seed, unit_key("entropy-discrepancy", unit, target.label)), target.label);
                values = shot_values(obs, bank);
            }
            res.discrepancy[ei][t][static_cast<std::size_t>(unit.replica)] =
                std::abs(combine_shot_values(values, cfg.estimator) - truth);
        }
    });
    return res;
}

EntropyTrend analyze_entropy_trend(const EntropyDiscrepancyResult &res) {
    EntropyTrend trend{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::quiet_NaN()};
    for (std::size_t e = 0; e < res.ensembles.size(); ++e) {
        const auto &d = res.discrepancy[e];
        if (res.ensembles[e] == Ensemble::Pauli && d.size() >= 2) {
            trend.pauli_pvalue = paired_t_pvalue_greater(d.back(), d.front());
        }
        if (res.ensembles[e] == Ensemble::Clifford && d.size() >= 3) {
            std::vector<double> slopes;
            for (std::size_t r = 0; r < d.front().size(); ++r) {
                std::vector<double> y;
                for (const auto &per_theta : d) {
                    y.push_back(per_theta[r]);
                }
                slopes.push_back(fit_line(res.entropy, y).slope);
            }
            trend.clifford_slope = mean_of(slopes);
            trend.clifford_slope_stderr = replica_stderr(slopes);
        }
    }
    return trend;
}

ErrorVsShotsResult run_error_vs_shots(const ExperimentConfig &cfg) {
    validate(cfg);
    const auto units = bank_units(cfg, cfg.replicas);
    const std::size_t per_unit = cfg.block_sizes.size() * cfg.thetas.size();
    const std::size_t ns = cfg.shots.size();
    // errors[unit][witness][shots]
    std::vector<std::vector<std::vector<double>>> errors(units.size(),
                                                         std::vector<std::vector<double>>(per_unit, std::vector<double>(ns)));
    std::vector<std::vector<double>> truths(units.size(), std::vector<double>(per_unit));
    detail::parallel_for(units.size(), cfg.workers, [&](std::size_t ui) {
        for_each_witness(cfg, units[ui], cfg.shots.back(), "error-vs-shots",
                         [&](std::size_t wi, const WitnessSpec &, std::vector<double> values, double truth) {
                             truths[ui][wi] = truth;
                             for (std::size_t si = 0; si < ns; ++si) {
                                 const std::vector<double> prefix(values.begin(),
                                                                  values.begin() + static_cast<std::ptrdiff_t>(cfg.shots[si]));
                                 errors[ui][wi][si] = std::abs(combine_shot_values(prefix, cfg.estimator) - truth);
                             }
                         });
    });

    ErrorVsShotsResult res;
    const auto replicas = static_cast<std::size_t>(cfg.replicas);
    for (std::size_t ui = 0; ui < units.size(); ui += replicas) {
        const auto &unit = units[ui];
        std::size_t wi = 0;
        for (int n : cfg.block_sizes) {
            for (double theta : cfg.thetas) {
                std::vector<double> log_s, log_err;
                for (std::size_t si = 0; si < ns; ++si) {
                    std::vector<double> reps;
                    for (std::size_t r = 0; r < replicas; ++r) {
                        reps.push_back(errors[ui + r][wi][si]);
                    }
                    const double mean = mean_of(reps);
                    res.points.push_back({unit.total_qubits, n, theta, unit.ensemble, cfg.shots[si], truths[ui][wi], mean,
                                          replica_stderr(reps)});
                    log_s.push_back(std::log10(static_cast<double>(cfg.shots[si])));
                    log_err.push_back(std::log10(std::max(mean, 1e-300)));
                }
                LinearFit fit{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::quiet_NaN()};
                if (ns >= 3) {
                    fit = fit_line(log_s, log_err);
                }
                res.curves.push_back({unit.total_qubits, n, theta, unit.ensemble, fit});
                ++wi;
            }
        }
    }
    return res;
}

CrossoverSummary summarize_crossover(int total_qubits, const std::vector<CrossoverAggregate> &aggregates,
                                     const std::vector<CrossoverPoint> &points) {
    CrossoverSummary s{total_qubits, -1, -1, -1, true, true, 0, crossover_block(total_qubits)};
    std::map<int, const CrossoverAggregate *> pauli, clifford;
    for (const auto &a : aggregates) {
        if (a.total_qubits == total_qubits) {
            (a.ensemble == Ensemble::Pauli ? pauli : clifford)[a.block_size] = &a;
        }
    }
    auto monotone = [](const std::map<int, const CrossoverAggregate *> &series, int direction) {
        const CrossoverAggregate *prev = nullptr;
        for (const auto &[n, a] : series) {
            if (prev != nullptr) {
                const double cushion = 3.0 * std::hypot(prev->s_req_stderr, a->s_req_stderr);
                if (direction * (a->s_req - prev->s_req) < -cushion) {
                    return false;
                }
            }
            prev = a;
        }
        return true;
    };
    s.pauli_non_decreasing = monotone(pauli, +1);
    s.clifford_non_increasing = monotone(clifford, -1);
    if (!pauli.empty() && !clifford.empty()) {
        s.sign_changes = 0;
        int last_sign = 0;
        for (const auto &[n, p] : pauli) {
            const auto it = clifford.find(n);
            if (it == clifford.end()) {
                continue;
            }
            const double diff = p->s_req - it->second->s_req;
            if (diff >= 0.0 && s.empirical_crossover < 0) {
                s.empirical_crossover = n;
            }
            if (diff < 0.0) {
                s.last_pauli_favourable = n;
            }
            const int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
            if (sign != 0) {
                if (last_sign != 0 && sign != last_sign) {
                    ++s.sign_changes;
                }
                last_sign = sign;
            }
        }
    }
    for (const auto &p : points) {
        const auto &r = p.report;
        if (r.total_qubits != total_qubits) {
            continue;
        }
        const double bound = r.ensemble == Ensemble::Pauli ? r.bound_pauli : r.bound_clifford;
        if (r.single_shot_variance > bound + 5.0 * r.variance_stderr) {
            ++s.bound_violations;
        }
    }
    return s;
}

CrossoverResult run_crossover(const ExperimentConfig &cfg) {
    validate(cfg);
    const auto units = bank_units(cfg, 1);
    const std::size_t per_unit = cfg.block_sizes.size() * cfg.thetas.size();
    std::vector<std::vector<std::optional<CrossoverPoint>>> slots(units.size(),
                                                                  std::vector<std::optional<CrossoverPoint>>(per_unit));
    detail::parallel_for(units.size(), cfg.workers, [&](std::size_t ui) {
        const auto &unit = units[ui];
        for_each_witness(cfg, unit, cfg.shots.front(), "crossover",
                         [&](std::size_t wi, const WitnessSpec &spec, std::vector<double> values, double truth) {
                             slots[ui][wi] = CrossoverPoint{truth, make_variance_report(values, spec.block_size,
                                                                                         spec.total_qubits, spec.theta,
                                                                                         unit.ensemble, cfg.epsilon)};
                         });
    });

    CrossoverResult res;
    for (std::size_t ui = 0; ui < units.size(); ++ui) {
        for (std::size_t wi = 0; wi < per_unit; ++wi) {
            res.points.push_back(*slots[ui][wi]);
        }
        std::size_t wi = 0;
        for (int n : cfg.block_sizes) {
            CrossoverAggregate agg{units[ui].total_qubits, n, units[ui].ensemble, -1.0, 0.0, 0.0, 0.0};
            for (std::size_t t = 0; t < cfg.thetas.size(); ++t, ++wi) {
                const auto &r = slots[ui][wi]->report;
                if (r.s_req > agg.s_req) {
                    agg.s_req = r.s_req;
                    agg.s_req_stderr = r.variance_stderr / (cfg.epsilon * cfg.epsilon);
                    agg.theta_at_max = r.theta;
                }
                agg.bound = units[ui].ensemble == Ensemble::Pauli ? r.bound_pauli : r.bound_clifford;
            }
            res.aggregates.push_back(agg);
        }
    }
    for (int n_total : cfg.total_qubits) {
        res.summaries.push_back(summarize_crossover(n_total, res.aggregates, res.points));
    }
    return res;
}

} // namespace cshadow::bench
