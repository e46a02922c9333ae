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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cshadow/ensemble.hpp"
#include "cshadow/rng.hpp"
#include "cshadow/state.hpp"

namespace cshadow {

enum class Ensemble : std::uint8_t { Pauli, Clifford };

const char *to_string(Ensemble e);
Ensemble ensemble_from_string(const std::string &name);

/// One classical shot (U, b). Bit q of the outcome (counted from the most
/// significant end, like basis indices) is the result on qubit q.
struct MeasurementRecord {
    Ensemble ensemble;
    UnitaryDescriptor descriptor;
    std::uint64_t outcome;

    int num_qubits() const { return num_qubits_of(descriptor); }
    int outcome_bit(int qubit) const;
    std::string outcome_string() const;
};

/// Frozen collection of shots on one register from one ensemble.
class SnapshotBank {
  public:
    SnapshotBank(Ensemble ensemble, int num_qubits, std::string source_label, std::uint64_t master_seed);

    /// Rejects records from another ensemble or register size.
    void append(MeasurementRecord record);
    void reserve(std::size_t n) { records_.reserve(n); }

    Ensemble ensemble() const { return ensemble_; }
    int num_qubits() const { return num_qubits_; }
    const std::string &source_label() const { return label_; }
    std::uint64_t master_seed() const { return seed_; }
    const std::vector<MeasurementRecord> &records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    /// First `count` records as a new bank (snapshot usage prefixes).
    SnapshotBank prefix(std::size_t count) const;

  private:
    Ensemble ensemble_;
    int num_qubits_;
    std::string label_;
    std::uint64_t seed_;
    std::vector<MeasurementRecord> records_;
};

/// Line-oriented bank format; see docs/bank-format.md.
void write_bank(std::ostream &out, const SnapshotBank &bank);
SnapshotBank read_bank(std::istream &in);
void save_bank(const std::string &path, const SnapshotBank &bank);
SnapshotBank load_bank(const std::string &path);

/// Outcome distribution <b|U rho U^dag|b>. Negative entries above -1e-10 are
/// clamped to zero and the vector renormalized; anything lower throws.
std::vector<double> outcome_probabilities(const HermitianOperator &rho, const UnitaryDescriptor &desc);

/// Inverse-CDF draw from a normalized distribution.
std::uint64_t sample_outcome(const std::vector<double> &probabilities, RngStream &rng);

/// Born-rule shot on a dense density matrix.
MeasurementRecord simulate_shot(const HermitianOperator &rho, const UnitaryDescriptor &desc, RngStream &rng);

/// Repeated-shot simulator. Caches the spectral decomposition of rho; a shot
/// draws one eigencomponent by weight and samples the outcome from it, so it
/// costs one circuit application instead of a dense conjugation.
class ShotSimulator {
  public:
    explicit ShotSimulator(const HermitianOperator &rho);
    explicit ShotSimulator(const PureState &psi);

    int num_qubits() const { return num_qubits_; }

    std::vector<double> probabilities(const UnitaryDescriptor &desc) const;
    MeasurementRecord shot(const UnitaryDescriptor &desc, RngStream &rng) const;
    MeasurementRecord shot(Ensemble ensemble, RngStream &rng) const;

  private:
    int num_qubits_;
    std::vector<double> weights_;
    std::vector<Vector> components_;
};

/// Shots per RNG stream when generating banks: shot i uses stream
/// derive(master_seed, i / kShotsPerStream).
inline constexpr std::size_t kShotsPerStream = 256;

/// Generates a bank of `shots` records. Output is independent of `workers`.
SnapshotBank generate_bank(const ShotSimulator &sim, Ensemble ensemble, std::size_t shots, std::uint64_t master_seed,
                           std::string label, int workers = 1);

/// Post-measurement vector U^dag|b> of a record: per-qubit states for Pauli
/// shots, one global vector for Clifford shots.
struct ShotFrame {
    Ensemble ensemble;
    int num_qubits;
    std::vector<std::array<Complex, 2>> local;
    Vector global;
};

ShotFrame make_frame(const MeasurementRecord &record);

/// tensor_j (3 U_j^dag|b_j><b_j|U_j - I)
HermitianOperator invert_pauli(const MeasurementRecord &record);

/// (2^N + 1) U^dag|b><b|U - I
HermitianOperator invert_clifford(const MeasurementRecord &record);

HermitianOperator invert_snapshot(const MeasurementRecord &record);

/// Single-shot estimate Tr(O rho_hat) without materializing rho_hat.
double shot_value(const HermitianOperator &obs, const ShotFrame &frame);

/// Tr(O rho_hat_i) for every record, in bank order.
std::vector<double> shot_values(const HermitianOperator &obs, const SnapshotBank &bank);

struct Estimator {
    enum class Kind { Mean, MedianOfMeans };
    Kind kind = Kind::Mean;
    std::size_t batches = 1;

    static Estimator mean() { return {}; }
    static Estimator median_of_means(std::size_t k) { return {Kind::MedianOfMeans, k}; }
    /// "mean" or "mom:<k>"
    static Estimator parse(const std::string &text);
    std::string to_string() const;
};

/// Mean of the values, or the median of `batches` equal-size batch means
/// (a trailing remainder of size < batches is dropped).
double combine_shot_values(const std::vector<double> &values, const Estimator &estimator);

double estimate_expectation(const HermitianOperator &obs, const SnapshotBank &bank, const Estimator &estimator = {});

/// Entrywise mean of the materialized snapshots. Unit trace; not necessarily
/// positive semidefinite.
HermitianOperator reconstruct_density(const SnapshotBank &bank);

} // namespace cshadow
