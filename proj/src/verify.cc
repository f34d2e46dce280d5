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

#include "ioncluster/verify.h"

#include <cmath>

#include "ioncluster/errors.h"

namespace ioncluster {

namespace {

constexpr double kStabilizerLeakageLimit = 1e-9;

void check_no_eprime(const RegisterState &state) {
    for (std::size_t ion = 1; ion <= state.n_ions(); ion++) {
        const double p = population(state, ion, IonLevel::EPrime);
        if (p > kStabilizerLeakageLimit) {
            throw LeakageError(
                "ion " + std::to_string(ion) + " has e' population " + std::to_string(p) +
                "; stabilizers are defined on the {g, e} subspace only",
                ion);
        }
    }
}

}  // namespace

RegisterState reference_cluster(std::size_t n_qubits, std::size_t n_max) {
    if (n_qubits < 1) {
        throw ValidationError("reference cluster needs at least one qubit");
    }
    // Expand the product from the last factor backwards. Factor a contributes
    // |e>_a, or |g>_a times sigma_z on qubit a+1, which is already present to
    // its right. `tail` holds amplitudes over qubits a..N in base 2.
    std::vector<double> tail{1.0};
    for (std::size_t a = n_qubits; a >= 1; a--) {
        const std::size_t rest = tail.size();
        std::vector<double> next(2 * rest);
        const bool has_right = a < n_qubits;
        for (std::size_t r = 0; r < rest; r++) {
            // Qubit a+1 is the most significant bit of `r`.
            const bool right_is_e = has_right && ((r * 2) / rest) == 1;
            next[r] = right_is_e ? -tail[r] : tail[r];  // |g>_a sigma_z^{(a+1)}
            next[rest + r] = tail[r];                  // |e>_a
        }
        tail = std::move(next);
    }

    const double scale = std::pow(2.0, -static_cast<double>(n_qubits) / 2);
    std::vector<Amplitude> amps(register_dimension(n_qubits, n_max));
    BasisLabel label{std::vector<IonLevel>(n_qubits), 0};
    for (std::size_t bits = 0; bits < tail.size(); bits++) {
        for (std::size_t q = 0; q < n_qubits; q++) {
            label.ions[q] = ((bits >> (n_qubits - 1 - q)) & 1) ? IonLevel::E : IonLevel::G;
        }
        amps[encode_index(label, n_max)] = scale * tail[bits];
    }
    return RegisterState::from_amplitudes(n_qubits, n_max, std::move(amps));
}

double fidelity(const RegisterState &state, const RegisterState &reference) {
    return std::norm(inner_product(reference, state));
}

double eprime_leakage(const RegisterState &state) {
    double total = 0;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        for (std::size_t ion = 1; ion <= state.n_ions(); ion++) {
            if (state.level_at(i, ion) == IonLevel::EPrime) {
                total += std::norm(amps[i]);
                break;
            }
        }
    }
    return total;
}

double mode_leakage(const RegisterState &state) {
    double total = 0;
    for (std::size_t n = 2; n <= state.n_max(); n++) {
        total += mode_population(state, n);
    }
    return total;
}

namespace {

// Image of `state` under K_a, without renormalization.
std::vector<Amplitude> stabilizer_image(const RegisterState &state, std::size_t a) {
    const std::size_t n = state.n_ions();
    if (a < 1 || a > n) {
        throw ValidationError("stabilizer index " + std::to_string(a) + " out of range 1.." + std::to_string(n));
    }
    const std::size_t stride = state.ion_stride(a);
    auto in = state.amplitudes();
    std::vector<Amplitude> out(in.size());
    for (std::size_t i = 0; i < in.size(); i++) {
        const IonLevel level = state.level_at(i, a);
        if (level == IonLevel::EPrime) {
            continue;
        }
        // X_a swaps g and e.
        const std::size_t j = level == IonLevel::G ? i + stride : i - stride;
        double sign = 1;
        if (a > 1 && state.level_at(i, a - 1) == IonLevel::E) {
            sign = -sign;
        }
        if (a < n && state.level_at(i, a + 1) == IonLevel::E) {
            sign = -sign;
        }
        out[j] = sign * in[i];
    }
    return out;
}

}  // namespace

RegisterState apply_stabilizer(const RegisterState &state, std::size_t a) {
    check_no_eprime(state);
    return RegisterState::from_amplitudes(state.n_ions(), state.n_max(), stabilizer_image(state, a));
}

std::vector<double> stabilizer_expectations(const RegisterState &state) {
    check_no_eprime(state);
    auto amps = state.amplitudes();
    std::vector<double> out;
    out.reserve(state.n_ions());
    for (std::size_t a = 1; a <= state.n_ions(); a++) {
        const auto image = stabilizer_image(state, a);
        Amplitude total = 0;
        for (std::size_t i = 0; i < amps.size(); i++) {
            total += std::conj(amps[i]) * image[i];
        }
        out.push_back(total.real());
    }
    return out;
}

VerificationReport verify_run(const RegisterState &state, std::size_t n_qubits) {
    if (state.n_ions() != n_qubits) {
        throw ValidationError(
            "state has " + std::to_string(state.n_ions()) + " ions but " + std::to_string(n_qubits) +
            " qubits were requested");
    }
    const RegisterState ref = reference_cluster(n_qubits, state.n_max());
    VerificationReport report;
    report.fidelity = fidelity(state, ref);
    report.leakage_eprime = eprime_leakage(state);
    report.leakage_mode = mode_leakage(state);
    report.global_phase = alignment_phase(state, ref);
    try {
        report.stabilizer_expectations = stabilizer_expectations(state);
    } catch (const LeakageError &) {
        report.stabilizer_expectations.reset();
    }
    return report;
}

}  // namespace ioncluster
