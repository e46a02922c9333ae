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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cshadow/rng.hpp"
#include "cshadow/state.hpp"

namespace cshadow {

enum class PauliBasis : std::uint8_t { X, Y, Z };

char to_char(PauliBasis b);
PauliBasis pauli_basis_from_char(char c);

/// Per-qubit measurement bases of one local-Pauli shot; entry q is qubit q.
class PauliBasisString {
  public:
    explicit PauliBasisString(std::vector<PauliBasis> bases);
    static PauliBasisString parse(std::string_view text);

    int num_qubits() const { return static_cast<int>(bases_.size()); }
    PauliBasis operator[](int qubit) const { return bases_[static_cast<std::size_t>(qubit)]; }
    const std::vector<PauliBasis> &bases() const { return bases_; }
    std::string to_string() const;

    bool operator==(const PauliBasisString &) const = default;

  private:
    std::vector<PauliBasis> bases_;
};

/// Signed Pauli string. Bit q of `x`/`z` refers to qubit q; (x, z) = (1, 1) is Y.
struct PauliRow {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    bool sign = false;

    bool operator==(const PauliRow &) const = default;
};

/// Stabilizer tableau of an N-qubit Clifford U: row q holds U X_q U^dag and
/// row N + q holds U Z_q U^dag. The global phase of U is not represented;
/// measurement statistics do not depend on it.
class CliffordTableau {
  public:
    /// Identity Clifford.
    explicit CliffordTableau(int num_qubits);

    /// Validates the symplectic condition.
    static CliffordTableau from_rows(int num_qubits, std::vector<PauliRow> rows);

    int num_qubits() const { return n_; }
    const PauliRow &x_image(int qubit) const { return rows_[static_cast<std::size_t>(qubit)]; }
    const PauliRow &z_image(int qubit) const { return rows_[static_cast<std::size_t>(n_ + qubit)]; }
    const std::vector<PauliRow> &rows() const { return rows_; }

    /// Entry (row, col) of the 2N x 2N binary symplectic matrix; columns
    /// [0, N) are x bits, [N, 2N) are z bits.
    bool bit(int row, int col) const;
    bool phase(int row) const { return rows_[static_cast<std::size_t>(row)].sign; }

    /// M Omega M^T = Omega over GF(2).
    bool is_symplectic() const;

    // Replace U by G U, i.e. conjugate every row by the gate G.
    void conjugate_h(int q);
    void conjugate_s(int q);
    void conjugate_sdg(int q);
    void conjugate_x(int q);
    void conjugate_z(int q);
    void conjugate_cx(int control, int target);

    /// Row-major packed symplectic matrix followed by the 2N phase bits,
    /// MSB-first, zero padded to a byte boundary, lowercase hex.
    std::string to_hex() const;
    static CliffordTableau from_hex(int num_qubits, std::string_view hex);

    bool operator==(const CliffordTableau &) const = default;

  private:
    int n_;
    std::vector<PauliRow> rows_;
};

enum class GateKind : std::uint8_t { H, S, Sdg, X, Z, CX };

struct Gate {
    GateKind kind;
    int q0;
    int q1 = -1;
};

/// Gate sequence (in application order) realizing the tableau's Clifford up to
/// global phase. Canonical reduction: per qubit, the X image is reduced to X_q
/// with H/SWAP/CX/S, the Z image to Z_q with HSH/H/S/CX, and signs fixed by
/// Paulis; the result is the inverse of that reduction.
std::vector<Gate> synthesize(const CliffordTableau &tableau);

std::vector<Gate> inverse_circuit(const std::vector<Gate> &gates);

/// Applies the circuit to a dense state vector in place.
void apply_circuit(const std::vector<Gate> &gates, int num_qubits, Vector &state);

using UnitaryDescriptor = std::variant<PauliBasisString, CliffordTableau>;

int num_qubits_of(const UnitaryDescriptor &desc);

PauliBasisString sample_pauli_bases(int num_qubits, RngStream &rng);

/// Exactly uniform over the N-qubit Clifford group modulo phase: the symplectic
/// part is drawn pair by pair (uniform nonzero v, uniform w with <v,w> = 1),
/// restricting to the symplectic complement after each pair; phase bits are
/// uniform.
CliffordTableau sample_clifford(int num_qubits, RngStream &rng);

/// Every element of the Clifford group modulo phase for N <= 2 (24 and 11520 elements).
std::vector<CliffordTableau> enumerate_clifford_group(int num_qubits);

/// Single-qubit rotation taking the eigenbasis of `basis` to the computational
/// basis: X -> H, Y -> H S^dag, Z -> I.
Eigen::Matrix2cd pauli_rotation(PauliBasis basis);

/// Dense unitary of the descriptor on 2^N amplitudes.
Matrix basis_rotation_unitary(const UnitaryDescriptor &desc);

/// Dense matrix of a signed Pauli string (sign included).
Matrix pauli_matrix(const PauliRow &row, int num_qubits);

} // namespace cshadow
