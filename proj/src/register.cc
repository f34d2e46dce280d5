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

#include "ioncluster/register.h"

#include <cmath>
#include <limits>

#include "ioncluster/errors.h"

namespace ioncluster {

namespace {

void check_shape(const RegisterState &a, const RegisterState &b) {
    if (a.n_ions() != b.n_ions() || a.n_max() != b.n_max()) {
        throw ValidationError(
            "register shape mismatch: (" + std::to_string(a.n_ions()) + " ions, n_max " + std::to_string(a.n_max()) +
            ") vs (" + std::to_string(b.n_ions()) + " ions, n_max " + std::to_string(b.n_max()) + ")");
    }
}

}  // namespace

const char *level_name(IonLevel level) {
    switch (level) {
        case IonLevel::G:
            return "g";
        case IonLevel::E:
            return "e";
        case IonLevel::EPrime:
            return "e'";
    }
    return "?";
}

IonPrep IonPrep::basis(IonLevel level) { return IonPrep{{{level, 1.0}}}; }

IonPrep IonPrep::equal_superposition(int sign) {
    const double h = std::sqrt(0.5);
    return IonPrep{{{IonLevel::G, h}, {IonLevel::E, sign < 0 ? -h : h}}};
}

std::size_t register_dimension(std::size_t n_ions, std::size_t n_max) {
    std::size_t d = n_max + 1;
    for (std::size_t k = 0; k < n_ions; k++) {
        if (d > std::numeric_limits<std::size_t>::max() / kLevelsPerIon) {
            throw ValidationError("register dimension overflows");
        }
        d *= kLevelsPerIon;
    }
    return d;
}

std::size_t encode_index(const BasisLabel &label, std::size_t n_max) {
    if (label.phonons > n_max) {
        throw ValidationError("phonon number " + std::to_string(label.phonons) + " exceeds n_max " + std::to_string(n_max));
    }
    std::size_t index = 0;
    for (IonLevel level : label.ions) {
        index = index * kLevelsPerIon + static_cast<std::size_t>(level);
    }
    return index * (n_max + 1) + label.phonons;
}

BasisLabel decode_index(std::size_t index, std::size_t n_ions, std::size_t n_max) {
    if (index >= register_dimension(n_ions, n_max)) {
        throw ValidationError("basis index " + std::to_string(index) + " out of range");
    }
    BasisLabel label;
    label.phonons = index % (n_max + 1);
    index /= n_max + 1;
    label.ions.resize(n_ions);
    for (std::size_t k = n_ions; k-- > 0;) {
        label.ions[k] = static_cast<IonLevel>(index % kLevelsPerIon);
        index /= kLevelsPerIon;
    }
    return label;
}

std::string format_label(const BasisLabel &label) {
    std::string out;
    for (std::size_t k = 0; k < label.ions.size(); k++) {
        if (k) {
            out += ' ';
        }
        out += level_name(label.ions[k]);
    }
    out += ';';
    out += std::to_string(label.phonons);
    return out;
}

RegisterState RegisterState::from_amplitudes(std::size_t n_ions, std::size_t n_max, std::vector<Amplitude> amplitudes) {
    if (n_ions == 0) {
        throw ValidationError("register needs at least one ion");
    }
    if (n_max < 1) {
        throw ValidationError("n_max must be at least 1");
    }
    if (amplitudes.size() != register_dimension(n_ions, n_max)) {
        throw ValidationError(
            "amplitude count " + std::to_string(amplitudes.size()) + " does not match dimension " +
            std::to_string(register_dimension(n_ions, n_max)));
    }
    double norm2 = 0;
    for (const auto &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kPrepTolerance) {
        throw ValidationError("state is not normalized (norm^2 = " + std::to_string(norm2) + ")");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return RegisterState(n_ions, n_max, std::move(amplitudes));
}

Amplitude RegisterState::amplitude(const BasisLabel &label) const {
    if (label.ions.size() != n_ions_) {
        throw ValidationError("basis label has wrong ion count");
    }
    return amplitudes_[encode_index(label, n_max_)];
}

std::size_t RegisterState::ion_stride(std::size_t ion) const {
    if (ion < 1 || ion > n_ions_) {
        throw ValidationError("ion index " + std::to_string(ion) + " out of range 1.." + std::to_string(n_ions_));
    }
    std::size_t stride = n_max_ + 1;
    for (std::size_t k = ion; k < n_ions_; k++) {
        stride *= kLevelsPerIon;
    }
    return stride;
}

IonLevel RegisterState::level_at(std::size_t index, std::size_t ion) const {
    return static_cast<IonLevel>((index / ion_stride(ion)) % kLevelsPerIon);
}

double RegisterState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

RegisterState new_register(std::span<const IonPrep> preps, std::size_t n_max) {
    if (preps.empty()) {
        throw ValidationError("at least one ion preparation is required");
    }
    if (n_max < 1) {
        throw ValidationError("n_max must be at least 1");
    }

    // Tensor product over ions, built up one digit at a time.
    std::vector<Amplitude> ions{1.0};
    for (std::size_t k = 0; k < preps.size(); k++) {
        Amplitude coeff[kLevelsPerIon] = {};
        bool seen[kLevelsPerIon] = {};
        double norm2 = 0;
        if (preps[k].terms.empty() || preps[k].terms.size() > kLevelsPerIon) {
            throw ValidationError("ion " + std::to_string(k + 1) + " preparation needs 1 to 3 terms");
        }
        for (const auto &term : preps[k].terms) {
            auto d = static_cast<std::size_t>(term.level);
            if (d >= kLevelsPerIon) {
                throw ValidationError("ion " + std::to_string(k + 1) + " preparation has an invalid level");
            }
            if (seen[d]) {
                throw ValidationError(
                    "ion " + std::to_string(k + 1) + " preparation repeats level " + level_name(term.level));
            }
            if (!std::isfinite(term.coefficient.real()) || !std::isfinite(term.coefficient.imag())) {
                throw ValidationError("ion " + std::to_string(k + 1) + " preparation has a non-finite coefficient");
            }
            seen[d] = true;
            coeff[d] = term.coefficient;
            norm2 += std::norm(term.coefficient);
        }
        if (std::abs(norm2 - 1.0) > kPrepTolerance) {
            throw ValidationError(
                "ion " + std::to_string(k + 1) + " preparation is not normalized (norm^2 = " + std::to_string(norm2) +
                ")");
        }
        const double scale = 1.0 / std::sqrt(norm2);

        std::vector<Amplitude> next(ions.size() * kLevelsPerIon);
        for (std::size_t i = 0; i < ions.size(); i++) {
            for (std::size_t d = 0; d < kLevelsPerIon; d++) {
                next[i * kLevelsPerIon + d] = ions[i] * coeff[d] * scale;
            }
        }
        ions = std::move(next);
    }

    std::vector<Amplitude> amps(ions.size() * (n_max + 1));
    for (std::size_t i = 0; i < ions.size(); i++) {
        amps[i * (n_max + 1)] = ions[i];
    }
    return RegisterState::from_amplitudes(preps.size(), n_max, std::move(amps));
}

Amplitude inner_product(const RegisterState &a, const RegisterState &b) {
    check_shape(a, b);
    Amplitude total = 0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); i++) {
        total += std::conj(x[i]) * y[i];
    }
    return total;
}

double population(const RegisterState &state, std::size_t ion, IonLevel level) {
    const std::size_t stride = state.ion_stride(ion);
    const auto want = static_cast<std::size_t>(level);
    double total = 0;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        if ((i / stride) % kLevelsPerIon == want) {
            total += std::norm(amps[i]);
        }
    }
    return total;
}

double mode_population(const RegisterState &state, std::size_t n) {
    if (n > state.n_max()) {
        throw ValidationError("Fock index " + std::to_string(n) + " out of range 0.." + std::to_string(state.n_max()));
    }
    double total = 0;
    auto amps = state.amplitudes();
    for (std::size_t i = n; i < amps.size(); i += state.n_max() + 1) {
        total += std::norm(amps[i]);
    }
    return total;
}

Amplitude alignment_phase(const RegisterState &state, const RegisterState &reference) {
    check_shape(state, reference);
    auto ref = reference.amplitudes();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ref.size(); i++) {
        if (std::abs(ref[i]) > std::abs(ref[best])) {
            best = i;
        }
    }
    Amplitude ratio = state.amplitude(best) / ref[best];
    double mag = std::abs(ratio);
    if (mag == 0 || !std::isfinite(mag)) {
        return 1.0;
    }
    return ratio / mag;
}

double max_deviation_up_to_phase(const RegisterState &state, const RegisterState &reference) {
    const Amplitude phase = alignment_phase(state, reference);
    auto a = state.amplitudes();
    auto b = reference.amplitudes();
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

double max_deviation(const RegisterState &a, const RegisterState &b) {
    check_shape(a, b);
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    double worst = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
    }
    return worst;
}

}  // namespace ioncluster
