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

#include <string>

#include "cshadow/shadow.hpp"
#include "cshadow/state.hpp"

namespace cshadow {

/// Perturbed GHZ witness on an n-qubit block embedded in an N-qubit register:
///
///     W = alpha(theta) I_{2^N} - |psi_pert(theta)><psi_pert(theta)| (x) I_{2^{N-n}}
///
/// The block occupies qubits 0..n-1.
struct WitnessSpec {
    int total_qubits;
    int block_size;
    double theta;
    double alpha;
    PureState anchor;
    PureState target;
    HermitianOperator embedded_operator;

    /// Single-line manifest record, e.g.
    /// "N=6 n=2 theta=0.3 alpha=0.8 anchor=product:|0>^2".
    std::string to_record() const;
};

/// 1/2 I - |GHZ_n><GHZ_n|
HermitianOperator ghz_witness(int num_qubits);

/// |0...0>, which sits exactly on the boundary of the unperturbed witness.
PureState find_separable_anchor(int num_qubits);

/// Normalized cos(theta)|GHZ_n> + sin(theta)|anchor>, theta in [0, pi/2).
PureState perturbed_target(int num_qubits, double theta);

/// Maximal squared overlap of a pure state with the biseparable set, computed
/// as the largest squared Schmidt coefficient over every cut.
double alpha_of_theta(const PureState &psi_pert);

WitnessSpec embed_witness(int block_size, int total_qubits, double theta);

/// Exact Tr(W rho).
double true_witness_value(const WitnessSpec &spec, const HermitianOperator &rho);

/// Exact <psi| W |psi>.
double true_witness_value(const WitnessSpec &spec, const PureState &psi);

/// Tr(W rho_hat) for one shot, using the block structure of W: the Pauli
/// path only touches the n-qubit block, the Clifford path projects the
/// post-measurement vector onto the target. Agrees with
/// shot_value(spec.embedded_operator, frame).
double witness_shot_value(const WitnessSpec &spec, const ShotFrame &frame);

std::vector<double> witness_shot_values(const WitnessSpec &spec, const SnapshotBank &bank);

/// rho_pert(theta) on the block, |0><0| on the idle qubits.
PureState padded_target_state(const WitnessSpec &spec);

} // namespace cshadow
