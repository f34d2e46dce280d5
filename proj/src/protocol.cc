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

#include "ioncluster/protocol.h"

#include <numbers>

#include "ioncluster/errors.h"

namespace ioncluster {

namespace {

SequenceStep step(const Pulse &pulse) { return {pulse, describe(pulse)}; }

}  // namespace

void PulseSequence::validate() const {
    if (preps.empty()) {
        throw ValidationError("sequence has no ions");
    }
    for (std::size_t i = 0; i < steps.size(); i++) {
        const Pulse &p = steps[i].pulse;
        if (p.ion < 1 || p.ion > preps.size()) {
            throw ValidationError(
                "step " + std::to_string(i + 1) + " addresses ion " + std::to_string(p.ion) + " but the sequence has " +
                std::to_string(preps.size()) + " ions");
        }
    }
}

std::size_t sideband_count(const PulseSequence &seq) {
    std::size_t k = 0;
    for (const auto &s : seq.steps) {
        k += is_sideband(s.pulse.kind);
    }
    return k;
}

PulseSequence cluster6_sequence() {
    PulseSequence seq;
    seq.preps = {
        IonPrep::basis(IonLevel::E),
        IonPrep::basis(IonLevel::G),
        IonPrep::equal_superposition(-1),
        IonPrep::equal_superposition(-1),
        IonPrep::equal_superposition(-1),
        IonPrep::equal_superposition(+1),
    };
    seq.steps = {
        step(half_sideband(1)),
        step(phase_gate(3)),
        step(map_mode_to_ion(2)),
        step(carrier(1, std::numbers::pi / 2, 0.0)),
        step(map_ion_to_mode(4)),
        step(phase_gate(3)),
        step(phase_gate(5)),
        step(map_mode_to_ion(4)),
        step(map_ion_to_mode(6)),
        step(phase_gate(5)),
        step(map_mode_to_ion(6)),
    };
    return seq;
}

PulseSequence chain_sequence(std::size_t n_ions) {
    if (n_ions < 2) {
        throw ValidationError("a cluster chain needs at least 2 ions, got " + std::to_string(n_ions));
    }
    PulseSequence seq;
    seq.preps.reserve(n_ions);
    seq.preps.push_back(IonPrep::basis(IonLevel::E));
    seq.preps.push_back(IonPrep::basis(IonLevel::G));
    for (std::size_t ion = 3; ion <= n_ions; ion++) {
        // The last ion of an even chain sees a single phase gate through the
        // mode, whose extra sigma_z is absorbed by preparing (g + e).
        const bool even_tail = ion == n_ions && ion % 2 == 0;
        seq.preps.push_back(IonPrep::equal_superposition(even_tail ? +1 : -1));
    }

    seq.steps.push_back(step(half_sideband(1)));
    if (n_ions >= 3) {
        seq.steps.push_back(step(phase_gate(3)));
        seq.steps.push_back(step(map_mode_to_ion(2)));
    } else {
        // Without ion 3 nothing supplies the sigma_z on ion 2; the opposite
        // map phase provides it.
        seq.steps.push_back(step({PulseKind::SidebandGE, 2, std::numbers::pi, std::numbers::pi}));
    }
    seq.steps.push_back(step(carrier(1, std::numbers::pi / 2, 0.0)));

    for (std::size_t k = 4; k <= n_ions; k += 2) {
        seq.steps.push_back(step(map_ion_to_mode(k)));
        seq.steps.push_back(step(phase_gate(k - 1)));
        if (k + 1 <= n_ions) {
            seq.steps.push_back(step(phase_gate(k + 1)));
        }
        seq.steps.push_back(step(map_mode_to_ion(k)));
    }
    return seq;
}

RunResult run(const PulseSequence &seq, std::size_t n_max, bool record_snapshots) {
    seq.validate();
    RegisterState state = new_register(seq.preps, n_max);
    std::vector<Snapshot> snapshots;
    if (record_snapshots) {
        snapshots.reserve(seq.steps.size());
    }
    for (std::size_t i = 0; i < seq.steps.size(); i++) {
        try {
            state = apply_pulse(state, seq.steps[i].pulse);
        } catch (const TruncationError &e) {
            throw e.at_step(i + 1);
        }
        if (record_snapshots) {
            snapshots.push_back({i + 1, seq.steps[i].pulse, state});
        }
    }
    return {std::move(state), std::move(snapshots)};
}

RegisterState run_with_area_errors(const PulseSequence &seq, std::size_t n_max, std::span<const double> area_errors) {
    seq.validate();
    if (area_errors.size() != sideband_count(seq)) {
        throw ValidationError("need one area error per sideband step");
    }
    RegisterState state = new_register(seq.preps, n_max);
    std::size_t k = 0;
    for (std::size_t i = 0; i < seq.steps.size(); i++) {
        Pulse p = seq.steps[i].pulse;
        if (is_sideband(p.kind)) {
            p.theta *= 1 + area_errors[k++];
        }
        try {
            state = apply_pulse(state, p);
        } catch (const TruncationError &e) {
            throw e.at_step(i + 1);
        }
    }
    return state;
}

}  // namespace ioncluster
