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

#include "cshadow/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cshadow/error.hpp"
#include "cshadow/parallel.hpp"

namespace cshadow {

namespace {

constexpr double kNegativeProbabilityTolerance = 1e-10;
constexpr double kImaginaryResidue = 1e-8;

void rotate_qubit(Vector &state, int num_qubits, int qubit, const Eigen::Matrix2cd &u) {
    const std::size_t m = qubit_bit(num_qubits, qubit);
    const auto dim = static_cast<std::size_t>(state.size());
    for (std::size_t k = 0; k < dim; ++k) {
        if (!(k & m)) {
            const auto i0 = static_cast<Eigen::Index>(k), i1 = static_cast<Eigen::Index>(k | m);
            const Complex a = state(i0), b = state(i1);
            state(i0) = u(0, 0) * a + u(0, 1) * b;
            state(i1) = u(1, 0) * a + u(1, 1) * b;
        }
    }
}

// Applies U (not U^dag) of the descriptor to a vector.
void apply_descriptor(const UnitaryDescriptor &desc, const std::vector<Gate> *circuit, Vector &state) {
    if (const auto *pauli = std::get_if<PauliBasisString>(&desc)) {
        for (int q = 0; q < pauli->num_qubits(); ++q) {
            if ((*pauli)[q] != PauliBasis::Z) {
                rotate_qubit(state, pauli->num_qubits(), q, pauli_rotation((*pauli)[q]));
            }
        }
        return;
    }
    apply_circuit(*circuit, num_qubits_of(desc), state);
}

void finalize_probabilities(std::vector<double> &p) {
    double total = 0.0;
    for (double &v : p) {
        if (v < -kNegativeProbabilityTolerance) {
            throw NumericalError("negative outcome probability " + std::to_string(v));
        }
        v = std::max(v, 0.0);
        total += v;
    }
    if (std::abs(total - 1.0) > kTraceTolerance) {
        throw NumericalError("outcome probabilities sum to " + std::to_string(total));
    }
    for (double &v : p) {
        v /= total;
    }
}

double checked_real(Complex value) {
    if (std::abs(value.imag()) > kImaginaryResidue) {
        throw NumericalError("single-shot estimate has imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::Matrix2cd local_inverse(const std::array<Complex, 2> &s) {
    Eigen::Matrix2cd m;
    m(0, 0) = 3.0 * s[0] * std::conj(s[0]) - 1.0;
    m(0, 1) = 3.0 * s[0] * std::conj(s[1]);
    m(1, 0) = 3.0 * s[1] * std::conj(s[0]);
    m(1, 1) = 3.0 * s[1] * std::conj(s[1]) - 1.0;
    return m;
}

} // namespace

const char *to_string(Ensemble e) { return e == Ensemble::Pauli ? "pauli" : "clifford"; }

Ensemble ensemble_from_string(const std::string &name) {
    if (name == "pauli") {
        return Ensemble::Pauli;
    }
    if (name == "clifford") {
        return Ensemble::Clifford;
    }
    throw DomainError("unknown ensemble '" + name + "'");
}

int MeasurementRecord::outcome_bit(int qubit) const {
    return static_cast<int>((outcome >> (num_qubits() - 1 - qubit)) & 1U);
}

std::string MeasurementRecord::outcome_string() const {
    std::string s;
    for (int q = 0; q < num_qubits(); ++q) {
        s.push_back(outcome_bit(q) ? '1' : '0');
    }
    return s;
}

SnapshotBank::SnapshotBank(Ensemble ensemble, int num_qubits, std::string source_label, std::uint64_t master_seed)
    : ensemble_(ensemble), num_qubits_(num_qubits), label_(std::move(source_label)), seed_(master_seed) {
    check_qubit_count(num_qubits);
    if (label_.find('\n') != std::string::npos) {
        throw DomainError("bank source label must be a single line");
    }
}

void SnapshotBank::append(MeasurementRecord record) {
    if (record.ensemble != ensemble_) {
        throw DomainError("record ensemble does not match bank");
    }
    const bool pauli_desc = std::holds_alternative<PauliBasisString>(record.descriptor);
    if (pauli_desc != (ensemble_ == Ensemble::Pauli)) {
        throw DomainError("record descriptor does not match its ensemble tag");
    }
    if (record.num_qubits() != num_qubits_) {
        throw SizeError("record qubit count does not match bank");
    }
    if (record.outcome >= dimension_of(num_qubits_)) {
        throw DomainError("record outcome out of range");
    }
    records_.push_back(std::move(record));
}

SnapshotBank SnapshotBank::prefix(std::size_t count) const {
    SnapshotBank out(ensemble_, num_qubits_, label_, seed_);
    count = std::min(count, records_.size());
    out.records_.assign(records_.begin(), records_.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
}

std::vector<double> outcome_probabilities(const HermitianOperator &rho, const UnitaryDescriptor &desc) {
    if (num_qubits_of(desc) != rho.num_qubits()) {
        throw SizeError("descriptor and state qubit counts differ");
    }
    const Matrix u = basis_rotation_unitary(desc);
    const Matrix rotated = u * rho.entries() * u.adjoint();
    std::vector<double> p(rho.dimension());
    for (std::size_t b = 0; b < p.size(); ++b) {
        p[b] = rotated(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)).real();
    }
    finalize_probabilities(p);
    return p;
}

std::uint64_t sample_outcome(const std::vector<double> &probabilities, RngStream &rng) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t b = 0; b < probabilities.size(); ++b) {
        if (probabilities[b] > 0.0) {
            last_nonzero = b;
        }
        cumulative += probabilities[b];
        if (u < cumulative) {
            return b;
        }
    }
    // Rounding left the cumulative sum just below u.
    return last_nonzero;
}

MeasurementRecord simulate_shot(const HermitianOperator &rho, const UnitaryDescriptor &desc, RngStream &rng) {
    const auto p = outcome_probabilities(rho, desc);
    const Ensemble e = std::holds_alternative<PauliBasisString>(desc) ? Ensemble::Pauli : Ensemble::Clifford;
    return MeasurementRecord{e, desc, sample_outcome(p, rng)};
}

ShotSimulator::ShotSimulator(const HermitianOperator &rho) : num_qubits_(rho.num_qubits()) {
    if (std::abs(rho.trace() - 1.0) > kTraceTolerance) {
        throw DomainError("density matrix must have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries());
    const auto &values = solver.eigenvalues();
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        if (values(k) < -kNegativeProbabilityTolerance) {
            throw NumericalError("density matrix is not positive semidefinite");
        }
        if (values(k) > 1e-14) {
            weights_.push_back(values(k));
            components_.emplace_back(solver.eigenvectors().col(k));
        }
    }
    double total = 0.0;
    for (double w : weights_) {
        total += w;
    }
    for (double &w : weights_) {
        w /= total;
    }
}

ShotSimulator::ShotSimulator(const PureState &psi) : num_qubits_(psi.num_qubits()), weights_{1.0}, components_{psi.amplitudes()} {}

std::vector<double> ShotSimulator::probabilities(const UnitaryDescriptor &desc) const {
    if (num_qubits_of(desc) != num_qubits_) {
        throw SizeError("descriptor and state qubit counts differ");
    }
    std::vector<Gate> circuit;
    if (const auto *t = std::get_if<CliffordTableau>(&desc)) {
        circuit = synthesize(*t);
    }
    std::vector<double> p(dimension_of(num_qubits_), 0.0);
    for (std::size_t k = 0; k < components_.size(); ++k) {
        Vector v = components_[k];
        apply_descriptor(desc, &circuit, v);
        for (std::size_t b = 0; b < p.size(); ++b) {
            p[b] += weights_[k] * std::norm(v(static_cast<Eigen::Index>(b)));
        }
    }
    finalize_probabilities(p);
    return p;
}

MeasurementRecord ShotSimulator::shot(const UnitaryDescriptor &desc, RngStream &rng) const {
    const Ensemble e = std::holds_alternative<PauliBasisString>(desc) ? Ensemble::Pauli : Ensemble::Clifford;
    if (components_.size() == 1) {
        return MeasurementRecord{e, desc, sample_outcome(probabilities(desc), rng)};
    }
    // Draw an eigencomponent first, then the outcome from that pure state.
    if (num_qubits_of(desc) != num_qubits_) {
        throw SizeError("descriptor and state qubit counts differ");
    }
    const std::size_t k = static_cast<std::size_t>(sample_outcome(weights_, rng));
    std::vector<Gate> circuit;
    if (const auto *t = std::get_if<CliffordTableau>(&desc)) {
        circuit = synthesize(*t);
    }
    Vector v = components_[k];
    apply_descriptor(desc, &circuit, v);
    std::vector<double> p(dimension_of(num_qubits_));
    for (std::size_t b = 0; b < p.size(); ++b) {
        p[b] = std::norm(v(static_cast<Eigen::Index>(b)));
    }
    finalize_probabilities(p);
    return MeasurementRecord{e, desc, sample_outcome(p, rng)};
}

MeasurementRecord ShotSimulator::shot(Ensemble ensemble, RngStream &rng) const {
    if (ensemble == Ensemble::Pauli) {
        return shot(UnitaryDescriptor{sample_pauli_bases(num_qubits_, rng)}, rng);
    }
    return shot(UnitaryDescriptor{sample_clifford(num_qubits_, rng)}, rng);
}

SnapshotBank generate_bank(const ShotSimulator &sim, Ensemble ensemble, std::size_t shots, std::uint64_t master_seed,
                           std::string label, int workers) {
    SnapshotBank bank(ensemble, sim.num_qubits(), std::move(label), master_seed);
    const std::size_t blocks = (shots + kShotsPerStream - 1) / kShotsPerStream;
    std::vector<std::vector<MeasurementRecord>> out(blocks);
    detail::parallel_for(blocks, workers, [&](std::size_t block) {
        RngStream rng = RngStream::derive(master_seed, block);
        const std::size_t begin = block * kShotsPerStream;
        const std::size_t end = std::min(shots, begin + kShotsPerStream);
        auto &slot = out[block];
        slot.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
            slot.push_back(sim.shot(ensemble, rng));
        }
    });
    bank.reserve(shots);
    for (auto &block : out) {
        for (auto &r : block) {
            bank.append(std::move(r));
        }
    }
    return bank;
}

ShotFrame make_frame(const MeasurementRecord &record) {
    const int n = record.num_qubits();
    ShotFrame frame{record.ensemble, n, {}, {}};
    if (const auto *pauli = std::get_if<PauliBasisString>(&record.descriptor)) {
        frame.local.resize(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            // U^dag|b> is the conjugated row b of U.
            const Eigen::Matrix2cd u = pauli_rotation((*pauli)[q]);
            const int b = record.outcome_bit(q);
            frame.local[static_cast<std::size_t>(q)] = {std::conj(u(b, 0)), std::conj(u(b, 1))};
        }
        return frame;
    }
    const auto &tableau = std::get<CliffordTableau>(record.descriptor);
    frame.global = Vector::Zero(static_cast<Eigen::Index>(dimension_of(n)));
    frame.global(static_cast<Eigen::Index>(record.outcome)) = 1.0;
    apply_circuit(inverse_circuit(synthesize(tableau)), n, frame.global);
    return frame;
}

HermitianOperator invert_pauli(const MeasurementRecord &record) {
    if (record.ensemble != Ensemble::Pauli) {
        throw DomainError("invert_pauli called on a Clifford record");
    }
    const ShotFrame frame = make_frame(record);
    Matrix out = Matrix::Identity(1, 1);
    for (const auto &s : frame.local) {
        out = kron(out, Matrix(local_inverse(s)));
    }
    return HermitianOperator(frame.num_qubits, std::move(out));
}

HermitianOperator invert_clifford(const MeasurementRecord &record) {
    if (record.ensemble != Ensemble::Clifford) {
        throw DomainError("invert_clifford called on a Pauli record");
    }
    const ShotFrame frame = make_frame(record);
    const auto dim = static_cast<Eigen::Index>(dimension_of(frame.num_qubits));
    Matrix out = static_cast<double>(dim + 1) * (frame.global * frame.global.adjoint());
    out -= Matrix::Identity(dim, dim);
    return HermitianOperator(frame.num_qubits, std::move(out));
}

HermitianOperator invert_snapshot(const MeasurementRecord &record) {
    return record.ensemble == Ensemble::Pauli ? invert_pauli(record) : invert_clifford(record);
}

double shot_value(const HermitianOperator &obs, const ShotFrame &frame) {
    if (obs.num_qubits() != frame.num_qubits) {
        throw SizeError("observable and shot qubit counts differ");
    }
    if (frame.ensemble == Ensemble::Clifford) {
        const double d = static_cast<double>(obs.dimension());
        const Complex q = frame.global.dot(obs.entries() * frame.global);
        return checked_real((d + 1.0) * q) - obs.trace();
    }
    // Tr(O (A_0 x ... x A_{N-1})): contract one qubit at a time, most
    // significant first, halving the working matrix each step.
    Matrix work = obs.entries();
    for (const auto &s : frame.local) {
        const Eigen::Matrix2cd a = local_inverse(s);
        const Eigen::Index h = work.rows() / 2;
        Matrix next = a(0, 0) * work.topLeftCorner(h, h) + a(1, 0) * work.topRightCorner(h, h) +
                      a(0, 1) * work.bottomLeftCorner(h, h) + a(1, 1) * work.bottomRightCorner(h, h);
        work = std::move(next);
    }
    return checked_real(work(0, 0));
}

std::vector<double> shot_values(const HermitianOperator &obs, const SnapshotBank &bank) {
    if (obs.num_qubits() != bank.num_qubits()) {
        throw SizeError("observable and bank qubit counts differ");
    }
    std::vector<double> values;
    values.reserve(bank.size());
    for (const auto &r : bank.records()) {
        values.push_back(shot_value(obs, make_frame(r)));
    }
    return values;
}

Estimator Estimator::parse(const std::string &text) {
    if (text == "mean") {
        return mean();
    }
    if (text.rfind("mom:", 0) == 0) {
        try {
            const long k = std::stol(text.substr(4));
            if (k >= 1) {
                return median_of_means(static_cast<std::size_t>(k));
            }
        } catch (const std::exception &) {
        }
    }
    throw DomainError("estimator must be 'mean' or 'mom:<k>' with k >= 1, got '" + text + "'");
}

std::string Estimator::to_string() const {
    return kind == Kind::Mean ? std::string("mean") : "mom:" + std::to_string(batches);
}

double combine_shot_values(const std::vector<double> &values, const Estimator &estimator) {
    if (values.empty()) {
        throw DomainError("cannot estimate from an empty bank");
    }
    if (estimator.kind == Estimator::Kind::Mean) {
        return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    }
    const std::size_t k = estimator.batches;
    if (k == 0 || k > values.size()) {
        throw DomainError("median-of-means batch count must be in [1, bank size]");
    }
    const std::size_t size = values.size() / k;
    std::vector<double> means(k);
    for (std::size_t b = 0; b < k; ++b) {
        const auto first = values.begin() + static_cast<std::ptrdiff_t>(b * size);
        means[b] = std::accumulate(first, first + static_cast<std::ptrdiff_t>(size), 0.0) / static_cast<double>(size);
    }
    std::sort(means.begin(), means.end());
    return k % 2 == 1 ? means[k / 2] : 0.5 * (means[k / 2 - 1] + means[k / 2]);
}

double estimate_expectation(const HermitianOperator &obs, const SnapshotBank &bank, const Estimator &estimator) {
    if (bank.empty()) {
        throw DomainError("cannot estimate from an empty bank");
    }
    return combine_shot_values(shot_values(obs, bank), estimator);
}

HermitianOperator reconstruct_density(const SnapshotBank &bank) {
    if (bank.empty()) {
        throw DomainError("cannot reconstruct from an empty bank");
    }
    const auto dim = static_cast<Eigen::Index>(dimension_of(bank.num_qubits()));
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto &r : bank.records()) {
        const ShotFrame frame = make_frame(r);
        if (frame.ensemble == Ensemble::Clifford) {
            sum += static_cast<double>(dim + 1) * (frame.global * frame.global.adjoint());
            sum -= Matrix::Identity(dim, dim);
        } else {
            Matrix snap = Matrix::Identity(1, 1);
            for (const auto &s : frame.local) {
                snap = kron(snap, Matrix(local_inverse(s)));
            }
            sum += snap;
        }
    }
    sum /= static_cast<double>(bank.size());
    // Average of Hermitian matrices; symmetrize away accumulated rounding.
    sum = 0.5 * (sum + sum.adjoint()).eval();
    return HermitianOperator(bank.num_qubits(), std::move(sum));
}

} // namespace cshadow
