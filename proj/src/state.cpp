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

#include "cshadow/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cshadow/error.hpp"

namespace cshadow {

namespace {

// Full-register index contribution of each value of a qubit subset, with the
// subset's first listed qubit as the most significant bit of the local index.
std::vector<std::size_t> subset_offsets(int num_qubits, const std::vector<int> &qubits) {
    const std::size_t local_dim = dimension_of(static_cast<int>(qubits.size()));
    std::vector<std::size_t> offsets(local_dim, 0);
    const int k = static_cast<int>(qubits.size());
    for (std::size_t local = 0; local < local_dim; ++local) {
        std::size_t full = 0;
        for (int j = 0; j < k; ++j) {
            if (local & qubit_bit(k, j)) {
                full |= qubit_bit(num_qubits, qubits[j]);
            }
        }
        offsets[local] = full;
    }
    return offsets;
}

} // namespace

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
    }
}

PureState::PureState(int num_qubits, Vector amplitudes) : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(num_qubits);
    if (static_cast<std::size_t>(amplitudes_.size()) != dimension_of(num_qubits)) {
        throw SizeError("amplitude vector length does not match 2^" + std::to_string(num_qubits));
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw NumericalError("state is not normalized: |psi|^2 = " + std::to_string(norm2));
    }
}

PureState PureState::basis(int num_qubits, std::size_t index) {
    check_qubit_count(num_qubits);
    if (index >= dimension_of(num_qubits)) {
        throw DomainError("basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension_of(num_qubits)));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return PureState(num_qubits, std::move(v));
}

Complex PureState::inner(const PureState &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw SizeError("inner product between states of different size");
    }
    return amplitudes_.dot(other.amplitudes_);
}

double PureState::overlap(const PureState &other) const { return std::norm(inner(other)); }

HermitianOperator::HermitianOperator(int num_qubits, Matrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    check_qubit_count(num_qubits);
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw SizeError("operator shape does not match 2^" + std::to_string(num_qubits));
    }
    const double residue = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (residue > kHermitianTolerance) {
        throw NumericalError("operator is not Hermitian: max |A - A^dag| = " + std::to_string(residue));
    }
}

HermitianOperator HermitianOperator::identity(int num_qubits) {
    check_qubit_count(num_qubits);
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    return HermitianOperator(num_qubits, Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int num_qubits) {
    check_qubit_count(num_qubits);
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    return HermitianOperator(num_qubits, Matrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::projector(const PureState &psi) {
    return HermitianOperator(psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

HermitianOperator HermitianOperator::maximally_mixed(int num_qubits) {
    return identity(num_qubits) * (1.0 / static_cast<double>(dimension_of(num_qubits)));
}

double HermitianOperator::trace() const { return entries_.trace().real(); }

double HermitianOperator::trace_product(const HermitianOperator &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw SizeError("trace of product between operators of different size");
    }
    // Tr(AB) = sum_ij A_ij B_ji
    return (entries_.cwiseProduct(other.entries_.transpose())).sum().real();
}

double HermitianOperator::expectation(const PureState &psi) const {
    if (psi.num_qubits() != num_qubits_) {
        throw SizeError("expectation value with mismatched state size");
    }
    return psi.amplitudes().dot(entries_ * psi.amplitudes()).real();
}

std::vector<double> HermitianOperator::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator &rhs) const {
    if (rhs.num_qubits_ != num_qubits_) {
        throw SizeError("sum of operators of different size");
    }
    return HermitianOperator(num_qubits_, entries_ + rhs.entries_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator &rhs) const {
    if (rhs.num_qubits_ != num_qubits_) {
        throw SizeError("difference of operators of different size");
    }
    return HermitianOperator(num_qubits_, entries_ - rhs.entries_);
}

HermitianOperator HermitianOperator::operator*(double scale) const {
    return HermitianOperator(num_qubits_, entries_ * scale);
}

Bipartition::Bipartition(int num_qubits, std::vector<int> subsystem_a) : num_qubits_(num_qubits), a_(std::move(subsystem_a)) {
    check_qubit_count(num_qubits);
    std::sort(a_.begin(), a_.end());
    if (std::adjacent_find(a_.begin(), a_.end()) != a_.end()) {
        throw DomainError("bipartition lists a qubit twice");
    }
    for (int q : a_) {
        if (q < 0 || q >= num_qubits) {
            throw DomainError("bipartition qubit index " + std::to_string(q) + " out of range");
        }
    }
    for (int q = 0; q < num_qubits; ++q) {
        if (!std::binary_search(a_.begin(), a_.end(), q)) {
            b_.push_back(q);
        }
    }
    if (a_.empty() || b_.empty()) {
        throw DomainError("bipartition sides must both be non-empty");
    }
}

std::vector<Bipartition> Bipartition::all(int num_qubits) {
    check_qubit_count(num_qubits);
    std::vector<Bipartition> cuts;
    if (num_qubits < 2) {
        return cuts;
    }
    // Subsets of qubits 1..n-1 joined with qubit 0, excluding the full register.
    const std::size_t rest = dimension_of(num_qubits - 1);
    for (std::size_t mask = 0; mask + 1 < rest; ++mask) {
        std::vector<int> a{0};
        for (int q = 1; q < num_qubits; ++q) {
            if (mask & (std::size_t{1} << (q - 1))) {
                a.push_back(q);
            }
        }
        cuts.emplace_back(num_qubits, std::move(a));
    }
    return cuts;
}

PureState make_ghz(int num_qubits) {
    check_qubit_count(num_qubits);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension_of(num_qubits)));
    v(0) = std::numbers::sqrt2 / 2.0;
    v(v.size() - 1) += std::numbers::sqrt2 / 2.0;
    return PureState(num_qubits, std::move(v));
}

PureState make_theta_family(int num_qubits, double theta) {
    check_qubit_count(num_qubits);
    constexpr double kSlack = 1e-12;
    if (!(theta >= -kSlack && theta <= std::numbers::pi / 4 + kSlack)) {
        throw DomainError("theta must lie in [0, pi/4]");
    }
    if (theta == std::numbers::pi / 4) {
        // Exact GHZ amplitudes; cos(pi/4) and sin(pi/4) differ in the last ulp.
        return make_ghz(num_qubits);
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension_of(num_qubits)));
    v(0) = std::cos(theta);
    v(v.size() - 1) += std::sin(theta);
    return PureState(num_qubits, std::move(v));
}

HermitianOperator tensor(const HermitianOperator &a, const HermitianOperator &b) {
    const int total = a.num_qubits() + b.num_qubits();
    if (total > kMaxQubits) {
        throw SizeError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    const Matrix &ma = a.entries();
    const Matrix &mb = b.entries();
    const Eigen::Index db = mb.rows();
    Matrix out(ma.rows() * db, ma.cols() * db);
    for (Eigen::Index r = 0; r < ma.rows(); ++r) {
        for (Eigen::Index c = 0; c < ma.cols(); ++c) {
            out.block(r * db, c * db, db, db) = ma(r, c) * mb;
        }
    }
    return HermitianOperator(total, std::move(out));
}

PureState tensor(const PureState &a, const PureState &b) {
    const int total = a.num_qubits() + b.num_qubits();
    if (total > kMaxQubits) {
        throw SizeError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    const Vector &va = a.amplitudes();
    const Vector &vb = b.amplitudes();
    Vector out(va.size() * vb.size());
    for (Eigen::Index i = 0; i < va.size(); ++i) {
        out.segment(i * vb.size(), vb.size()) = va(i) * vb;
    }
    // Renormalize away rounding so the product passes the unit-norm check.
    out.normalize();
    return PureState(total, std::move(out));
}

HermitianOperator partial_trace(const HermitianOperator &rho, const Bipartition &keep) {
    if (keep.num_qubits() != rho.num_qubits()) {
        throw DomainError("bipartition qubit count does not match operator");
    }
    if (std::abs(rho.trace() - 1.0) > kTraceTolerance) {
        throw DomainError("partial trace requires a unit-trace operator");
    }
    const int n = rho.num_qubits();
    const auto keep_offsets = subset_offsets(n, keep.subsystem_a());
    const auto trace_offsets = subset_offsets(n, keep.subsystem_b());
    const auto dk = static_cast<Eigen::Index>(keep_offsets.size());
    Matrix out = Matrix::Zero(dk, dk);
    const Matrix &m = rho.entries();
    for (Eigen::Index r = 0; r < dk; ++r) {
        for (Eigen::Index c = 0; c < dk; ++c) {
            Complex acc = 0.0;
            for (std::size_t t : trace_offsets) {
                acc += m(static_cast<Eigen::Index>(keep_offsets[r] | t), static_cast<Eigen::Index>(keep_offsets[c] | t));
            }
            out(r, c) = acc;
        }
    }
    return HermitianOperator(static_cast<int>(keep.subsystem_a().size()), std::move(out));
}

Matrix reshape_along_cut(const PureState &psi, const Bipartition &cut) {
    if (cut.num_qubits() != psi.num_qubits()) {
        throw DomainError("bipartition qubit count does not match state");
    }
    const auto ra = subset_offsets(psi.num_qubits(), cut.subsystem_a());
    const auto rb = subset_offsets(psi.num_qubits(), cut.subsystem_b());
    Matrix m(static_cast<Eigen::Index>(ra.size()), static_cast<Eigen::Index>(rb.size()));
    for (std::size_t i = 0; i < ra.size(); ++i) {
        for (std::size_t j = 0; j < rb.size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = psi[ra[i] | rb[j]];
        }
    }
    return m;
}

std::vector<double> schmidt_spectrum(const PureState &psi, const Bipartition &cut) {
    Eigen::JacobiSVD<Matrix> svd(reshape_along_cut(psi, cut));
    const auto &sv = svd.singularValues();
    std::vector<double> out(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        out[static_cast<std::size_t>(i)] = sv(i) * sv(i);
    }
    return out;
}

double schmidt_max(const PureState &psi, const Bipartition &cut) {
    const auto spectrum = schmidt_spectrum(psi, cut);
    return std::min(1.0, spectrum.front());
}

double shannon_entropy_bits(const std::vector<double> &probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

double entanglement_entropy(const PureState &psi, const Bipartition &cut) {
    return std::max(0.0, shannon_entropy_bits(schmidt_spectrum(psi, cut)));
}

} // namespace cshadow
