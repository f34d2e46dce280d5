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

#ifndef IONCLUSTER_PROTOCOL_H
#define IONCLUSTER_PROTOCOL_H

#include <cstddef>
#include <string>
#include <vector>

#include "ioncluster/pulse.h"
#include "ioncluster/register.h"

namespace ioncluster {

struct SequenceStep {
    Pulse pulse;
    std::string label;

    bool operator==(const SequenceStep &) const = default;
};

/// Initial ion preparations (mode starts in |0>) plus an ordered pulse list.
struct PulseSequence {
    std::vector<IonPrep> preps;
    std::vector<SequenceStep> steps;

    std::size_t n_ions() const noexcept { return preps.size(); }
    /// Throws ValidationError if there are no ions or a step addresses a
    /// missing ion.
    void validate() const;

    bool operator==(const PulseSequence &) const = default;
};

std::size_t sideband_count(const PulseSequence &seq);

struct Snapshot {
    std::size_t step_index;  // 1-based
    Pulse pulse;
    RegisterState state;
};

struct RunResult {
    RegisterState final_state;
    std::vector<Snapshot> snapshots;
};

/// The six-ion linear cluster-state choreography: eleven pulses, ten of them
/// sidebands, one carrier on ion 1.
PulseSequence cluster6_sequence();

/// Same pattern extended to `n_ions` >= 2 ions.
///
/// Ion 1 is entangled with the mode, a phase gate on ion 3 and a mode->ion map
/// on ion 2 follow, then a carrier on ion 1. Each even ion k >= 4 is then
/// swapped into the mode, phase gates run on ions k-1 and k+1 (when present),
/// and the mode is swapped back into ion k. `chain_sequence(6)` reproduces
/// `cluster6_sequence()` exactly.
PulseSequence chain_sequence(std::size_t n_ions);

/// Applies `seq` to its initial register. TruncationError is rethrown with the
/// 1-based step index attached.
RunResult run(const PulseSequence &seq, std::size_t n_max = kDefaultNMax, bool record_snapshots = false);

/// Same as `run`, with sideband areas replaced by theta * (1 + area_errors[i])
/// for the i-th sideband step. Carrier pulses are untouched.
RegisterState run_with_area_errors(const PulseSequence &seq, std::size_t n_max, std::span<const double> area_errors);

}  // namespace ioncluster

#endif
