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

#include "ioncluster/pulse.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "ioncluster/errors.h"

namespace ioncluster {

namespace {

constexpr double kTruncationThreshold = 1e-12;

void check_pulse_parameters(double phi, double theta) {
    if (!std::isfinite(phi) || !std::isfinite(theta)) {
        throw ValidationError("pulse phase and area must be finite");
    }
}

// Calls f(base) for every flat index whose addressed-ion digit is g (0) and
// whose Fock digit is 0.
template <typename F>
void for_each_base(const RegisterState &state, std::size_t stride, F &&f) {
    const std::size_t block = stride * kLevelsPerIon;
    const std::size_t fock = state.n_max() + 1;
    for (std::size_t outer = 0; outer < state.dimension(); outer += block) {
        for (std::size_t inner = 0; inner < stride; inner += fock) {
            f(outer + inner);
        }
    }
}

}  // namespace

const char *pulse_kind_name(PulseKind kind) {
    switch (kind) {
        case PulseKind::SidebandGE:
            return "sideband_ge";
        case PulseKind::SidebandGEPrime:
            return "sideband_geprime";
        case PulseKind::Carrier:
            return "carrier";
    }
    return "?";
}

bool is_sideband(PulseKind kind) { return kind == PulseKind::SidebandGE || kind == PulseKind::SidebandGEPrime; }

RegisterState apply_sideband(const RegisterState &state, std::size_t ion, Transition transition, double phi,
                             double theta) {
    check_pulse_parameters(phi, theta);
    const std::size_t stride = state.ion_stride(ion);
    const std::size_t n_max = state.n_max();
    const std::size_t x_offset = stride * static_cast<std::size_t>(transition == Transition::GE ? IonLevel::E
                                                                                                : IonLevel::EPrime);
    auto in = state.amplitudes();

    double edge = 0;
    for_each_base(state, stride, [&](std::size_t base) { edge += std::norm(in[base + x_offset + n_max]); });
    if (edge > kTruncationThreshold) {
        throw TruncationError(
            "sideband on ion " + std::to_string(ion) + " would excite Fock level " + std::to_string(n_max + 1) +
            " (population " + std::to_string(edge) + " at n_max = " + std::to_string(n_max) + ")");
    }

    const Amplitude down = std::polar(1.0, -phi);  // |g, n+1> -> |x, n>
    const Amplitude up = -std::polar(1.0, phi);    // |x, n> -> |g, n+1>
    std::vector<double> c(n_max), s(n_max);
    for (std::size_t n = 0; n < n_max; n++) {
        const double angle = theta * std::sqrt(static_cast<double>(n + 1)) / 2;
        c[n] = std::cos(angle);
        s[n] = std::sin(angle);
    }

    std::vector<Amplitude> out(in.begin(), in.end());
    for_each_base(state, stride, [&](std::size_t base) {
        for (std::size_t n = 0; n < n_max; n++) {
            const std::size_t ix = base + x_offset + n;
            const std::size_t ig = base + n + 1;
            const Amplitude ax = in[ix];
            const Amplitude ag = in[ig];
            out[ix] = c[n] * ax + down * s[n] * ag;
            out[ig] = up * s[n] * ax + c[n] * ag;
        }
    });
    return RegisterState::from_amplitudes(state.n_ions(), n_max, std::move(out));
}

RegisterState apply_carrier(const RegisterState &state, std::size_t ion, double theta_c, double phi_c) {
    check_pulse_parameters(phi_c, theta_c);
    const std::size_t stride = state.ion_stride(ion);
    const double c = std::cos(theta_c / 2);
    const double s = std::sin(theta_c / 2);
    const Amplitude g_to_e = -std::polar(s, phi_c);
    const Amplitude e_to_g = std::polar(s, -phi_c);
    auto in = state.amplitudes();

    std::vector<Amplitude> out(in.begin(), in.end());
    for_each_base(state, stride, [&](std::size_t base) {
        for (std::size_t n = 0; n <= state.n_max(); n++) {
            const std::size_t ig = base + n;
            const std::size_t ie = base + stride + n;
            const Amplitude ag = in[ig];
            const Amplitude ae = in[ie];
            out[ig] = c * ag + e_to_g * ae;
            out[ie] = g_to_e * ag + c * ae;
        }
    });
    return RegisterState::from_amplitudes(state.n_ions(), state.n_max(), std::move(out));
}

RegisterState apply_pulse(const RegisterState &state, const Pulse &pulse) {
    switch (pulse.kind) {
        case PulseKind::SidebandGE:
            return apply_sideband(state, pulse.ion, Transition::GE, pulse.phi, pulse.theta);
        case PulseKind::SidebandGEPrime:
            return apply_sideband(state, pulse.ion, Transition::GEPrime, pulse.phi, pulse.theta);
        case PulseKind::Carrier:
            return apply_carrier(state, pulse.ion, pulse.theta, pulse.phi);
    }
    throw ValidationError("unknown pulse kind");
}

Pulse half_sideband(std::size_t ion) { return {PulseKind::SidebandGE, ion, std::numbers::pi, std::numbers::pi / 2}; }

Pulse map_ion_to_mode(std::size_t ion) { return {PulseKind::SidebandGE, ion, std::numbers::pi, std::numbers::pi}; }

Pulse map_mode_to_ion(std::size_t ion) { return {PulseKind::SidebandGE, ion, 0.0, std::numbers::pi}; }

Pulse phase_gate(std::size_t ion) { return {PulseKind::SidebandGEPrime, ion, 0.0, 2 * std::numbers::pi}; }

Pulse carrier(std::size_t ion, double theta_c, double phi_c) { return {PulseKind::Carrier, ion, phi_c, theta_c}; }

std::string describe(const Pulse &pulse) {
    const std::string on = " on ion " + std::to_string(pulse.ion);
    if (pulse == half_sideband(pulse.ion)) {
        return "half sideband" + on;
    }
    if (pulse == map_ion_to_mode(pulse.ion)) {
        return "map ion to mode" + on;
    }
    if (pulse == map_mode_to_ion(pulse.ion)) {
        return "map mode to ion" + on;
    }
    if (pulse == phase_gate(pulse.ion)) {
        return "phase gate" + on;
    }
    return std::string(pulse_kind_name(pulse.kind)) + on;
}

}  // namespace ioncluster
