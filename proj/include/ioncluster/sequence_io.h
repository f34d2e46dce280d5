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

#ifndef IONCLUSTER_SEQUENCE_IO_H
#define IONCLUSTER_SEQUENCE_IO_H

#include <string>
#include <string_view>

#include "json.hpp"

#include "ioncluster/protocol.h"
#include "ioncluster/register.h"
#include "ioncluster/verify.h"

namespace ioncluster {

inline constexpr std::string_view kSequenceVersion = "ioncluster.sequence.v1";
inline constexpr std::string_view kReportVersion = "ioncluster.report.v1";
/// Amplitudes at or below this magnitude are omitted from reports unless a
/// full listing is requested.
inline constexpr double kReportAmplitudeCutoff = 1e-14;

/// Sequence file layout:
///
///   {
///     "version": "ioncluster.sequence.v1",
///     "ions":  [[{"level": "g"|"e"|"eprime", "re": 0.0, "im": 0.0}, ...], ...],
///     "steps": [{"kind": "sideband_ge"|"sideband_geprime"|"carrier",
///                "ion": 1, "phi": 0.0, "theta": 0.0, "label": "..."}, ...]
///   }
///
/// "label" is optional. Unknown keys anywhere are rejected.
nlohmann::json sequence_to_json(const PulseSequence &seq);
PulseSequence sequence_from_json(const nlohmann::json &doc);

std::string emit_sequence(const PulseSequence &seq);
/// Throws ValidationError on malformed text or content.
PulseSequence parse_sequence(std::string_view text);

nlohmann::json pulse_to_json(const Pulse &pulse);
/// Amplitude list sorted by index: [{"index", "label", "re", "im"}, ...].
nlohmann::json amplitudes_to_json(const RegisterState &state, bool full);
nlohmann::json verification_to_json(const VerificationReport &report);

/// Dumps with two-space indentation and a trailing newline. Doubles are
/// written in shortest round-trip form.
std::string dump_document(const nlohmann::json &doc);

}  // namespace ioncluster

#endif
