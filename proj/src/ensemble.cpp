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

#include "cshadow/ensemble.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "cshadow/error.hpp"

namespace cshadow {

namespace {

// Vectors of GF(2)^{2n}: x bits in [0, n), z bits in [n, 2n).
using SymVec = std::uint64_t;

SymVec pack(const PauliRow &row, int n) {
    return static_cast<SymVec>(row.x) | (static_cast<SymVec>(row.z) << n);
}

PauliRow unpack(SymVec v, int n, bool sign) {
    const SymVec mask = (SymVec{1} << n) - 1;
    return PauliRow{static_cast<std::uint32_t>(v & mask), static_cast<std::uint32_t>((v >> n) & mask), sign};
}

int symplectic_product(SymVec u, SymVec v, int n) {
    const SymVec mask = (SymVec{1} << n) - 1;
    const SymVec ux = u & mask, uz = u >> n;
    const SymVec vx = v & mask, vz = v >> n;
    return std::popcount((ux & vz) ^ (uz & vx)) & 1;
}

SymVec combine(const std::vector<SymVec> &basis, std::uint64_t coefficients) {
    SymVec v = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if ((coefficients >> k) & 1U) {
            v ^= basis[k];
        }
    }
    return v;
}

// Row-reduces `vectors` to a linearly independent spanning set.
std::vector<SymVec> independent_span(const std::vector<SymVec> &vectors) {
    std::vector<SymVec> reduced;
    for (SymVec v : vectors) {
        for (SymVec r : reduced) {
            const int pivot = std::bit_width(r) - 1;
            if ((v >> pivot) & 1U) {
                v ^= r;
            }
        }
        if (v != 0) {
            // Keep pivots distinct: eliminate the new pivot from earlier rows.
            const int pivot = std::bit_width(v) - 1;
            for (SymVec &r : reduced) {
                if ((r >> pivot) & 1U) {
                    r ^= v;
                }
            }
            reduced.push_back(v);
        }
    }
    return reduced;
}

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw DomainError("qubit index " + std::to_string(q) + " out of range");
    }
}

constexpr std::uint32_t bit_of(int q) { return std::uint32_t{1} << q; }

} // namespace

char to_char(PauliBasis b) {
    switch (b) {
    case PauliBasis::X:
        return 'X';
    case PauliBasis::Y:
        return 'Y';
    case PauliBasis::Z:
        return 'Z';
    }
    return '?';
}

PauliBasis pauli_basis_from_char(char c) {
    switch (c) {
    case 'X':
        return PauliBasis::X;
    case 'Y':
        return PauliBasis::Y;
    case 'Z':
        return PauliBasis::Z;
    default:
        throw DomainError(std::string("invalid Pauli basis symbol '") + c + "'");
    }
}

PauliBasisString::PauliBasisString(std::vector<PauliBasis> bases) : bases_(std::move(bases)) {
    check_qubit_count(static_cast<int>(bases_.size()));
}

PauliBasisString PauliBasisString::parse(std::string_view text) {
    std::vector<PauliBasis> bases;
    bases.reserve(text.size());
    for (char c : text) {
        bases.push_back(pauli_basis_from_char(c));
    }
    return PauliBasisString(std::move(bases));
}

std::string PauliBasisString::to_string() const {
    std::string s;
    s.reserve(bases_.size());
    for (PauliBasis b : bases_) {
        s.push_back(to_char(b));
    }
    return s;
}

CliffordTableau::CliffordTableau(int num_qubits) : n_(num_qubits), rows_(2 * static_cast<std::size_t>(num_qubits)) {
    check_qubit_count(num_qubits);
    for (int q = 0; q < n_; ++q) {
        rows_[static_cast<std::size_t>(q)].x = bit_of(q);
        rows_[static_cast<std::size_t>(n_ + q)].z = bit_of(q);
    }
}

CliffordTableau CliffordTableau::from_rows(int num_qubits, std::vector<PauliRow> rows) {
    CliffordTableau t(num_qubits);
    if (rows.size() != 2 * static_cast<std::size_t>(num_qubits)) {
        throw SizeError("tableau needs 2N rows");
    }
    const std::uint32_t mask = (std::uint32_t{1} << num_qubits) - 1;
    for (const auto &r : rows) {
        if ((r.x & ~mask) != 0 || (r.z & ~mask) != 0) {
            throw DomainError("tableau row has support outside the register");
        }
    }
    t.rows_ = std::move(rows);
    if (!t.is_symplectic()) {
        throw DomainError("tableau violates the symplectic condition");
    }
    return t;
}

bool CliffordTableau::bit(int row, int col) const {
    const PauliRow &r = rows_[static_cast<std::size_t>(row)];
    return col < n_ ? ((r.x >> col) & 1U) != 0 : ((r.z >> (col - n_)) & 1U) != 0;
}

bool CliffordTableau::is_symplectic() const {
    // Rows i and j must have symplectic product 1 exactly when they are the
    // (X_q, Z_q) images of the same qubit.
    const int m = 2 * n_;
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const int expected = (j == i + n_ && i < n_) ? 1 : 0;
            if (symplectic_product(pack(rows_[static_cast<std::size_t>(i)], n_), pack(rows_[static_cast<std::size_t>(j)], n_), n_) != expected) {
                return false;
            }
        }
    }
    return true;
}

void CliffordTableau::conjugate_h(int q) {
    check_qubit(q, n_);
    const std::uint32_t b = bit_of(q);
    for (auto &r : rows_) {
        const bool x = r.x & b, z = r.z & b;
        r.sign ^= x && z;
        r.x = (r.x & ~b) | (z ? b : 0);
        r.z = (r.z & ~b) | (x ? b : 0);
    }
}

void CliffordTableau::conjugate_s(int q) {
    check_qubit(q, n_);
    const std::uint32_t b = bit_of(q);
    for (auto &r : rows_) {
        const bool x = r.x & b, z = r.z & b;
        r.sign ^= x && z;
        if (x) {
            r.z ^= b;
        }
    }
}

void CliffordTableau::conjugate_sdg(int q) {
    conjugate_s(q);
    conjugate_s(q);
    conjugate_s(q);
}

void CliffordTableau::conjugate_x(int q) {
    check_qubit(q, n_);
    for (auto &r : rows_) {
        r.sign ^= (r.z & bit_of(q)) != 0;
    }
}

void CliffordTableau::conjugate_z(int q) {
    check_qubit(q, n_);
    for (auto &r : rows_) {
        r.sign ^= (r.x & bit_of(q)) != 0;
    }
}

void CliffordTableau::conjugate_cx(int control, int target) {
    check_qubit(control, n_);
    check_qubit(target, n_);
    if (control == target) {
        throw DomainError("CX control and target coincide");
    }
    const std::uint32_t bc = bit_of(control), bt = bit_of(target);
    for (auto &r : rows_) {
        const bool xc = r.x & bc, zc = r.z & bc, xt = r.x & bt, zt = r.z & bt;
        r.sign ^= xc && zt && !(xt ^ zc);
        if (xc) {
            r.x ^= bt;
        }
        if (zt) {
            r.z ^= bc;
        }
    }
}

std::string CliffordTableau::to_hex() const {
    const int m = 2 * n_;
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(m * m + m));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            bits.push_back(bit(r, c));
        }
    }
    for (int r = 0; r < m; ++r) {
        bits.push_back(phase(r));
    }
    while (bits.size() % 8 != 0) {
        bits.push_back(false);
    }
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(bits.size() / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        const int nibble = (bits[i] << 3) | (bits[i + 1] << 2) | (bits[i + 2] << 1) | static_cast<int>(bits[i + 3]);
        hex.push_back(kDigits[nibble]);
    }
    return hex;
}

CliffordTableau CliffordTableau::from_hex(int num_qubits, std::string_view hex) {
    check_qubit_count(num_qubits);
    const int m = 2 * num_qubits;
    const std::size_t payload = static_cast<std::size_t>(m * m + m);
    const std::size_t padded = (payload + 7) / 8 * 8;
    if (hex.size() * 4 != padded) {
        throw DomainError("tableau hex has wrong length for " + std::to_string(num_qubits) + " qubits");
    }
    std::vector<bool> bits;
    bits.reserve(padded);
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else {
            throw DomainError(std::string("invalid hex digit '") + c + "'");
        }
        for (int k = 3; k >= 0; --k) {
            bits.push_back(((v >> k) & 1) != 0);
        }
    }
    for (std::size_t i = payload; i < padded; ++i) {
        if (bits[i]) {
            throw DomainError("tableau hex has non-zero padding");
        }
    }
    std::vector<PauliRow> rows(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        auto &row = rows[static_cast<std::size_t>(r)];
        for (int c = 0; c < m; ++c) {
            if (bits[static_cast<std::size_t>(r * m + c)]) {
                if (c < num_qubits) {
                    row.x |= bit_of(c);
                } else {
                    row.z |= bit_of(c - num_qubits);
                }
            }
        }
        row.sign = bits[static_cast<std::size_t>(m * m + r)];
    }
    return from_rows(num_qubits, std::move(rows));
}

std::vector<Gate> synthesize(const CliffordTableau &tableau) {
    const int n = tableau.num_qubits();
    CliffordTableau t = tableau;
    std::vector<Gate> reduction;
    auto h = [&](int q) { t.conjugate_h(q); reduction.push_back({GateKind::H, q}); };
    auto s = [&](int q) { t.conjugate_s(q); reduction.push_back({GateKind::S, q}); };
    auto cx = [&](int c, int tq) { t.conjugate_cx(c, tq); reduction.push_back({GateKind::CX, c, tq}); };

    for (int i = 0; i < n; ++i) {
        const std::uint32_t above = ~((bit_of(i)) - 1); // qubits >= i
        // X image -> +-X_i.
        {
            const PauliRow *p = &t.x_image(i);
            if ((p->x & above) == 0) {
                h(std::countr_zero(p->z & above));
            }
            if ((t.x_image(i).x & bit_of(i)) == 0) {
                const int k = std::countr_zero(t.x_image(i).x & above);
                cx(i, k);
                cx(k, i);
                cx(i, k);
            }
            for (int j = i + 1; j < n; ++j) {
                if (t.x_image(i).x & bit_of(j)) {
                    cx(i, j);
                }
            }
            for (int j = i + 1; j < n; ++j) {
                if (t.x_image(i).z & bit_of(j)) {
                    h(j);
                    cx(i, j);
                }
            }
            if (t.x_image(i).z & bit_of(i)) {
                s(i);
            }
        }
        // Z image -> +-Z_i, keeping X_i fixed.
        {
            if (t.z_image(i).x & bit_of(i)) {
                h(i);
                s(i);
                h(i);
            }
            for (int j = i + 1; j < n; ++j) {
                const PauliRow &q = t.z_image(i);
                const bool x = q.x & bit_of(j), z = q.z & bit_of(j);
                if (x && z) {
                    s(j);
                    h(j);
                } else if (x) {
                    h(j);
                }
            }
            for (int j = i + 1; j < n; ++j) {
                if (t.z_image(i).z & bit_of(j)) {
                    cx(j, i);
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (t.x_image(i).sign) {
            t.conjugate_z(i);
            reduction.push_back({GateKind::Z, i});
        }
        if (t.z_image(i).sign) {
            t.conjugate_x(i);
            reduction.push_back({GateKind::X, i});
        }
    }
    if (!(t == CliffordTableau(n))) {
        throw NumericalError("Clifford synthesis failed to reach the identity tableau");
    }
    return inverse_circuit(reduction);
}

std::vector<Gate> inverse_circuit(const std::vector<Gate> &gates) {
    std::vector<Gate> inv;
    inv.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::S) {
            g.kind = GateKind::Sdg;
        } else if (g.kind == GateKind::Sdg) {
            g.kind = GateKind::S;
        }
        inv.push_back(g);
    }
    return inv;
}

void apply_circuit(const std::vector<Gate> &gates, int num_qubits, Vector &state) {
    const auto dim = static_cast<std::size_t>(state.size());
    if (dim != dimension_of(num_qubits)) {
        throw SizeError("state length does not match circuit width");
    }
    constexpr double r = std::numbers::sqrt2 / 2.0;
    const Complex i_unit(0.0, 1.0);
    for (const Gate &g : gates) {
        const std::size_t m = qubit_bit(num_qubits, g.q0);
        switch (g.kind) {
        case GateKind::H:
            for (std::size_t k = 0; k < dim; ++k) {
                if (!(k & m)) {
                    const Complex a = state(static_cast<Eigen::Index>(k));
                    const Complex b = state(static_cast<Eigen::Index>(k | m));
                    state(static_cast<Eigen::Index>(k)) = r * (a + b);
                    state(static_cast<Eigen::Index>(k | m)) = r * (a - b);
                }
            }
            break;
        case GateKind::S:
        case GateKind::Sdg: {
            const Complex phase = g.kind == GateKind::S ? i_unit : -i_unit;
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & m) {
                    state(static_cast<Eigen::Index>(k)) *= phase;
                }
            }
            break;
        }
        case GateKind::X:
            for (std::size_t k = 0; k < dim; ++k) {
                if (!(k & m)) {
                    std::swap(state(static_cast<Eigen::Index>(k)), state(static_cast<Eigen::Index>(k | m)));
                }
            }
            break;
        case GateKind::Z:
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & m) {
                    state(static_cast<Eigen::Index>(k)) = -state(static_cast<Eigen::Index>(k));
                }
            }
            break;
        case GateKind::CX: {
            const std::size_t t = qubit_bit(num_qubits, g.q1);
            for (std::size_t k = 0; k < dim; ++k) {
                if ((k & m) && !(k & t)) {
                    std::swap(state(static_cast<Eigen::Index>(k)), state(static_cast<Eigen::Index>(k | t)));
                }
            }
            break;
        }
        }
    }
}

int num_qubits_of(const UnitaryDescriptor &desc) {
    return std::visit([](const auto &d) { return d.num_qubits(); }, desc);
}

PauliBasisString sample_pauli_bases(int num_qubits, RngStream &rng) {
    check_qubit_count(num_qubits);
    std::vector<PauliBasis> bases(static_cast<std::size_t>(num_qubits));
    for (auto &b : bases) {
        b = static_cast<PauliBasis>(rng.below(3));
    }
    return PauliBasisString(std::move(bases));
}

CliffordTableau sample_clifford(int num_qubits, RngStream &rng) {
    check_qubit_count(num_qubits);
    const int n = num_qubits;
    std::vector<SymVec> basis(2 * static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        basis[k] = SymVec{1} << k;
    }
    std::vector<PauliRow> rows(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int width = static_cast<int>(basis.size());
        SymVec v = 0;
        while (v == 0) {
            v = combine(basis, rng.bits(width));
        }
        SymVec w = 0;
        do {
            w = combine(basis, rng.bits(width));
        } while (symplectic_product(v, w, n) == 0);
        rows[static_cast<std::size_t>(i)] = unpack(v, n, false);
        rows[static_cast<std::size_t>(n + i)] = unpack(w, n, false);

        // Project the remaining space onto the symplectic complement of span{v, w}.
        std::vector<SymVec> projected;
        projected.reserve(basis.size());
        for (SymVec u : basis) {
            SymVec p = u;
            if (symplectic_product(u, w, n)) {
                p ^= v;
            }
            if (symplectic_product(u, v, n)) {
                p ^= w;
            }
            projected.push_back(p);
        }
        basis = independent_span(projected);
        if (basis.size() != 2 * static_cast<std::size_t>(n - i - 1)) {
            throw NumericalError("symplectic complement has unexpected dimension");
        }
    }
    const std::uint64_t signs = rng.bits(2 * n);
    for (int r = 0; r < 2 * n; ++r) {
        rows[static_cast<std::size_t>(r)].sign = ((signs >> r) & 1U) != 0;
    }
    return CliffordTableau::from_rows(n, std::move(rows));
}

std::vector<CliffordTableau> enumerate_clifford_group(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 2) {
        throw SizeError("Clifford group enumeration supports 1 or 2 qubits");
    }
    const int n = num_qubits;
    const int m = 2 * n;
    const std::uint64_t vectors = std::uint64_t{1} << m;
    std::vector<CliffordTableau> out;
    std::vector<SymVec> rows(static_cast<std::size_t>(m));
    // Depth-first over row choices with pruning on the pairwise products.
    auto recurse = [&](auto &&self, int r) -> void {
        if (r == m) {
            for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << m); ++signs) {
                std::vector<PauliRow> pr(static_cast<std::size_t>(m));
                for (int k = 0; k < m; ++k) {
                    pr[static_cast<std::size_t>(k)] = unpack(rows[static_cast<std::size_t>(k)], n, ((signs >> k) & 1U) != 0);
                }
                out.push_back(CliffordTableau::from_rows(n, std::move(pr)));
            }
            return;
        }
        for (SymVec v = 1; v < vectors; ++v) {
            bool ok = true;
            for (int k = 0; k < r && ok; ++k) {
                const int expected = (r == k + n && k < n) ? 1 : 0;
                ok = symplectic_product(rows[static_cast<std::size_t>(k)], v, n) == expected;
            }
            if (ok) {
                rows[static_cast<std::size_t>(r)] = v;
                self(self, r + 1);
            }
        }
    };
    recurse(recurse, 0);
    return out;
}

Eigen::Matrix2cd pauli_rotation(PauliBasis basis) {
    constexpr double r = std::numbers::sqrt2 / 2.0;
    Eigen::Matrix2cd u;
    switch (basis) {
    case PauliBasis::X:
        u << r, r, r, -r;
        break;
    case PauliBasis::Y:
        // H * S^dag
        u << Complex(r, 0), Complex(0, -r), Complex(r, 0), Complex(0, r);
        break;
    case PauliBasis::Z:
        u.setIdentity();
        break;
    }
    return u;
}

Matrix basis_rotation_unitary(const UnitaryDescriptor &desc) {
    if (const auto *pauli = std::get_if<PauliBasisString>(&desc)) {
        Matrix u = Matrix::Identity(1, 1);
        for (PauliBasis b : pauli->bases()) {
            const Eigen::Matrix2cd r = pauli_rotation(b);
            Matrix next(u.rows() * 2, u.cols() * 2);
            for (Eigen::Index i = 0; i < u.rows(); ++i) {
                for (Eigen::Index j = 0; j < u.cols(); ++j) {
                    next.block<2, 2>(2 * i, 2 * j) = u(i, j) * r;
                }
            }
            u = std::move(next);
        }
        return u;
    }
    const auto &tableau = std::get<CliffordTableau>(desc);
    const int n = tableau.num_qubits();
    const auto dim = static_cast<Eigen::Index>(dimension_of(n));
    const auto circuit = synthesize(tableau);
    Matrix u(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        Vector col = Vector::Zero(dim);
        col(c) = 1.0;
        apply_circuit(circuit, n, col);
        u.col(c) = col;
    }
    return u;
}

Matrix pauli_matrix(const PauliRow &row, int num_qubits) {
    check_qubit_count(num_qubits);
    Matrix m = Matrix::Identity(1, 1);
    for (int q = 0; q < num_qubits; ++q) {
        const bool x = (row.x >> q) & 1U, z = (row.z >> q) & 1U;
        Eigen::Matrix2cd p;
        if (x && z) {
            p << 0, Complex(0, -1), Complex(0, 1), 0;
        } else if (x) {
            p << 0, 1, 1, 0;
        } else if (z) {
            p << 1, 0, 0, -1;
        } else {
            p.setIdentity();
        }
        Matrix next(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                next.block<2, 2>(2 * i, 2 * j) = m(i, j) * p;
            }
        }
        m = std::move(next);
    }
    return row.sign ? Matrix(-m) : m;
}

} // namespace cshadow
