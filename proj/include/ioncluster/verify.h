// Copyright 2026 The ioncluster Authors
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

#ifndef IONCLUSTER_VERIFY_H
#define IONCLUSTER_VERIFY_H

#include <cstddef>
#include <optional>
#include <vector>

#include "ioncluster/register.h"

namespace ioncluster {

// Qubit readout convention: |g> is |0>, |e> is |1>, so sigma_z = |g><g| - |e><e|
// and sigma_x = |g><e| + |e><g|. e' lies outside the qubit subspace.

/// Linear cluster state on `n_qubits` ions,
///
///   2^{-N/2} prod_a (|g>_a Z_{a+1} + |e>_a),  Z_{N+1} = 1,
///
/// embedded in the three-level ion space with the mode in |0>.
RegisterState reference_cluster(std::size_t n_qubits, std::size_t n_max = kDefaultNMax);

/// |<reference|state>|^2.
double fidelity(const RegisterState &state, const RegisterState &reference);

/// Total probability with at least one ion in e'.
double eprime_leakage(const RegisterState &state);
/// Total probability on Fock levels n >= 2.
double mode_leakage(const RegisterState &state);

/// K_a = Z_{a-1} X_a Z_{a+1} applied to `state`; the boundary stabilizers drop
/// the missing neighbour. `a` is 1-based.
RegisterState apply_stabilizer(const RegisterState &state, std::size_t a);

/// <K_a> for a = 1..N. Throws LeakageError naming the first ion with more than
/// 1e-9 population in e'.
std::vector<double> stabilizer_expectations(const RegisterState &state);

struct VerificationReport {
    double fidelity = 0;
    /// Empty when the state leaks into e' and the stabilizers are undefined.
    std::optional<std::vector<double>> stabilizer_expectations;
    double leakage_eprime = 0;
    double leakage_mode = 0;
    Amplitude global_phase = 1.0;
};

VerificationReport verify_run(const RegisterState &state, std::size_t n_qubits);

}  // namespace ioncluster

#endif
