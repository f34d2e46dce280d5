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

#ifndef IONCLUSTER_PULSE_H
#define IONCLUSTER_PULSE_H

#include <cstddef>
#include <string>

#include "ioncluster/register.h"

namespace ioncluster {

/// Which excited level a red-sideband pulse couples to g.
enum class Transition { GE, GEPrime };

enum class PulseKind { SidebandGE, SidebandGEPrime, Carrier };

const char *pulse_kind_name(PulseKind kind);
bool is_sideband(PulseKind kind);

/// One laser event on a single addressed ion.
///
/// For sideband pulses `theta` is the pulse area eta * Omega * t; the Lamb-Dicke
/// parameter, Rabi frequency and duration only ever enter through that product.
/// For carrier pulses `theta` is the rotation angle. `ion` is 1-based.
struct Pulse {
    PulseKind kind = PulseKind::Carrier;
    std::size_t ion = 1;
    double phi = 0;
    double theta = 0;

    bool operator==(const Pulse &) const = default;
};

/// Exact red-sideband evolution on (ion, mode), with x the excited level of
/// `transition`:
///
///   |x, n>   -> cos(theta sqrt(n+1) / 2) |x, n>   - e^{i phi}  sin(theta sqrt(n+1) / 2) |g, n+1>
///   |g, n+1> -> cos(theta sqrt(n+1) / 2) |g, n+1> + e^{-i phi} sin(theta sqrt(n+1) / 2) |x, n>
///
/// |g, 0> and the third level of the ion are left alone. Throws TruncationError
/// if more than 1e-12 probability sits on |x, n_max>, which would need
/// |g, n_max + 1>.
RegisterState apply_sideband(const RegisterState &state, std::size_t ion, Transition transition, double phi,
                             double theta);

/// Carrier rotation on the ion's {g, e} pair, independent of the Fock level:
///
///   |g> -> cos(theta/2) |g> - e^{i phi} sin(theta/2) |e>
///   |e> -> cos(theta/2) |e> + e^{-i phi} sin(theta/2) |g>
RegisterState apply_carrier(const RegisterState &state, std::size_t ion, double theta_c, double phi_c);

RegisterState apply_pulse(const RegisterState &state, const Pulse &pulse);

// Named pulses.

/// phi = pi, area pi/2: |e, 0> -> (|e, 0> + |g, 1>) / sqrt(2).
Pulse half_sideband(std::size_t ion);
/// phi = pi, area pi: |e, 0> -> |g, 1>.
Pulse map_ion_to_mode(std::size_t ion);
/// phi = 0, area pi: |g, 1> -> |e, 0>.
Pulse map_mode_to_ion(std::size_t ion);
/// 2 pi pulse through e': |g, 1> -> -|g, 1>, |g, 0> untouched.
Pulse phase_gate(std::size_t ion);
Pulse carrier(std::size_t ion, double theta_c, double phi_c);

/// Short human-readable description, used as the default step label.
std::string describe(const Pulse &pulse);

}  // namespace ioncluster

#endif
