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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cshadow {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Largest register handled by the dense routines (2^10 x 2^10 operators).
inline constexpr int kMaxQubits = 10;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;

/// Basis index convention used everywhere: qubit 0 is the most significant
/// bit of the computational-basis index. For an N-qubit register, qubit q
/// corresponds to bit (N - 1 - q).
inline constexpr std::size_t qubit_bit(int num_qubits, int qubit) {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

inline constexpr std::size_t dimension_of(int num_qubits) { return std::size_t{1} << num_qubits; }

void check_qubit_count(int num_qubits);

/// Unit-norm state vector on `num_qubits` qubits.
class PureState {
  public:
    PureState(int num_qubits, Vector amplitudes);

    /// Computational basis state |index>.
    static PureState basis(int num_qubits, std::size_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const Vector &amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

    Complex inner(const PureState &other) const;
    /// |<this|other>|^2
    double overlap(const PureState &other) const;

  private:
    int num_qubits_;
    Vector amplitudes_;
};

/// Dense Hermitian operator on `num_qubits` qubits.
class HermitianOperator {
  public:
    HermitianOperator(int num_qubits, Matrix entries);

    static HermitianOperator identity(int num_qubits);
    static HermitianOperator zero(int num_qubits);
    /// |psi><psi|
    static HermitianOperator projector(const PureState &psi);
    /// Maximally mixed state I / 2^N.
    static HermitianOperator maximally_mixed(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
    const Matrix &entries() const { return entries_; }
    Complex operator()(std::size_t r, std::size_t c) const {
        return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    double trace() const;
    /// Tr(this * other), real part; the imaginary part vanishes for Hermitian pairs.
    double trace_product(const HermitianOperator &other) const;
    /// <psi| this |psi>
    double expectation(const PureState &psi) const;
    std::vector<double> eigenvalues() const;

    HermitianOperator operator+(const HermitianOperator &rhs) const;
    HermitianOperator operator-(const HermitianOperator &rhs) const;
    HermitianOperator operator*(double scale) const;

  private:
    int num_qubits_;
    Matrix entries_;
};

/// A cut A|B of an N-qubit register. Both sides are sorted and non-empty.
class Bipartition {
  public:
    /// Builds the cut with `subsystem_a` on one side and its complement on the other.
    Bipartition(int num_qubits, std::vector<int> subsystem_a);

    int num_qubits() const { return num_qubits_; }
    const std::vector<int> &subsystem_a() const { return a_; }
    const std::vector<int> &subsystem_b() const { return b_; }

    /// Every cut of an n-qubit register, each listed once (qubit 0 always on side A).
    static std::vector<Bipartition> all(int num_qubits);

  private:
    int num_qubits_;
    std::vector<int> a_;
    std::vector<int> b_;
};

PureState make_ghz(int num_qubits);

/// cos(theta)|0...0> + sin(theta)|1...1>, theta in [0, pi/4].
PureState make_theta_family(int num_qubits, double theta);

/// Kronecker product; `a` occupies the lower-index (more significant) qubits.
HermitianOperator tensor(const HermitianOperator &a, const HermitianOperator &b);
PureState tensor(const PureState &a, const PureState &b);

/// Reduced operator on `keep.subsystem_a()`, traced over `keep.subsystem_b()`.
/// The kept qubits retain their relative order.
HermitianOperator partial_trace(const HermitianOperator &rho, const Bipartition &keep);

/// Amplitudes reshaped into a 2^|A| x 2^|B| matrix along the cut.
Matrix reshape_along_cut(const PureState &psi, const Bipartition &cut);

/// Squared Schmidt coefficients across the cut, descending.
std::vector<double> schmidt_spectrum(const PureState &psi, const Bipartition &cut);

/// Largest squared Schmidt coefficient across the cut.
double schmidt_max(const PureState &psi, const Bipartition &cut);

/// Von Neumann entropy of the reduced state on either side of the cut, in bits.
double entanglement_entropy(const PureState &psi, const Bipartition &cut);

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy_bits(const std::vector<double> &probabilities);

} // namespace cshadow
