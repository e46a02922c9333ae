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

#include "cshadow/witness.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "cshadow/error.hpp"

namespace cshadow {

std::string WitnessSpec::to_record() const {
    auto shortest = [](double v) {
        char buf[32];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, ptr);
    };
    return "N=" + std::to_string(total_qubits) + " n=" + std::to_string(block_size) + " theta=" + shortest(theta) +
           " alpha=" + shortest(alpha) + " anchor=product:|0>^" + std::to_string(block_size);
}

HermitianOperator ghz_witness(int num_qubits) {
    if (num_qubits < 2) {
        throw DomainError("GHZ witness needs at least 2 qubits");
    }
    return HermitianOperator::identity(num_qubits) * 0.5 - HermitianOperator::projector(make_ghz(num_qubits));
}

PureState find_separable_anchor(int num_qubits) {
    if (num_qubits < 2) {
        throw DomainError("separable anchor needs at least 2 qubits");
    }
    PureState anchor = PureState::basis(num_qubits, 0);
    // |<0...0|GHZ>|^2 = 1/2 puts the anchor on the witness boundary.
    const double value = ghz_witness(num_qubits).expectation(anchor);
    if (std::abs(value) > 1e-9) {
        throw NumericalError("anchor is not on the GHZ witness boundary");
    }
    return anchor;
}

PureState perturbed_target(int num_qubits, double theta) {
    if (!(theta >= 0.0 && theta < std::numbers::pi / 2)) {
        throw DomainError("perturbation angle must lie in [0, pi/2)");
    }
    const PureState ghz = make_ghz(num_qubits);
    const PureState anchor = find_separable_anchor(num_qubits);
    Vector v = std::cos(theta) * ghz.amplitudes() + std::sin(theta) * anchor.amplitudes();
    v /= v.norm();
    return PureState(num_qubits, std::move(v));
}

double alpha_of_theta(const PureState &psi_pert) {
    if (psi_pert.num_qubits() < 2) {
        throw DomainError("biseparable overlap needs at least 2 qubits");
    }
    double best = 0.0;
    for (const auto &cut : Bipartition::all(psi_pert.num_qubits())) {
        best = std::max(best, schmidt_max(psi_pert, cut));
    }
    return best;
}

WitnessSpec embed_witness(int block_size, int total_qubits, double theta) {
    if (block_size < 2) {
        throw DomainError("witness block needs at least 2 qubits");
    }
    if (block_size > total_qubits) {
        throw DomainError("witness block larger than the register");
    }
    check_qubit_count(total_qubits);
    PureState anchor = find_separable_anchor(block_size);
    PureState target = perturbed_target(block_size, theta);
    const double alpha = alpha_of_theta(target);
    HermitianOperator projector = HermitianOperator::projector(target);
    if (total_qubits > block_size) {
        projector = tensor(projector, HermitianOperator::identity(total_qubits - block_size));
    }
    HermitianOperator w = HermitianOperator::identity(total_qubits) * alpha - projector;
    return WitnessSpec{total_qubits, block_size, theta, alpha, std::move(anchor), std::move(target), std::move(w)};
}

double true_witness_value(const WitnessSpec &spec, const HermitianOperator &rho) {
    if (rho.num_qubits() != spec.total_qubits) {
        throw SizeError("state and witness qubit counts differ");
    }
    return spec.embedded_operator.trace_product(rho);
}

double true_witness_value(const WitnessSpec &spec, const PureState &psi) {
    if (psi.num_qubits() != spec.total_qubits) {
        throw SizeError("state and witness qubit counts differ");
    }
    return spec.embedded_operator.expectation(psi);
}

double witness_shot_value(const WitnessSpec &spec, const ShotFrame &frame) {
    if (frame.num_qubits != spec.total_qubits) {
        throw SizeError("shot and witness qubit counts differ");
    }
    const int n = spec.block_size;
    const Vector &psi = spec.target.amplitudes();
    double projector_value = 0.0;
    if (frame.ensemble == Ensemble::Pauli) {
        // <psi| A_0 x ... x A_{n-1} |psi>; each idle factor has trace 1.
        Vector v = psi;
        for (int q = 0; q < n; ++q) {
            const auto &s = frame.local[static_cast<std::size_t>(q)];
            const std::size_t m = qubit_bit(n, q);
            const Complex a00 = 3.0 * std::norm(s[0]) - 1.0, a11 = 3.0 * std::norm(s[1]) - 1.0;
            const Complex a01 = 3.0 * s[0] * std::conj(s[1]), a10 = std::conj(a01);
            for (std::size_t k = 0; k < static_cast<std::size_t>(v.size()); ++k) {
                if (!(k & m)) {
                    const auto i0 = static_cast<Eigen::Index>(k), i1 = static_cast<Eigen::Index>(k | m);
                    const Complex x0 = v(i0), x1 = v(i1);
                    v(i0) = a00 * x0 + a01 * x1;
                    v(i1) = a10 * x0 + a11 * x1;
                }
            }
        }
        projector_value = psi.dot(v).real();
    } else {
        // (2^N + 1) <phi| (|psi><psi| x I) |phi> - 2^{N-n}; the block index is
        // the high part of the basis index.
        const auto idle = static_cast<Eigen::Index>(std::size_t{1} << (spec.total_qubits - n));
        double weight = 0.0;
        for (Eigen::Index r = 0; r < idle; ++r) {
            Complex c = 0.0;
            for (Eigen::Index a = 0; a < psi.size(); ++a) {
                c += std::conj(psi(a)) * frame.global(a * idle + r);
            }
            weight += std::norm(c);
        }
        const double d = static_cast<double>(dimension_of(spec.total_qubits));
        projector_value = (d + 1.0) * weight - static_cast<double>(idle);
    }
    return spec.alpha - projector_value;
}

std::vector<double> witness_shot_values(const WitnessSpec &spec, const SnapshotBank &bank) {
    if (bank.num_qubits() != spec.total_qubits) {
        throw SizeError("bank and witness qubit counts differ");
    }
    std::vector<double> values;
    values.reserve(bank.size());
    for (const auto &r : bank.records()) {
        values.push_back(witness_shot_value(spec, make_frame(r)));
    }
    return values;
}

PureState padded_target_state(const WitnessSpec &spec) {
    if (spec.total_qubits == spec.block_size) {
        return spec.target;
    }
    return tensor(spec.target, PureState::basis(spec.total_qubits - spec.block_size, 0));
}

} // namespace cshadow
