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

#ifndef IONCLUSTER_REGISTER_H
#define IONCLUSTER_REGISTER_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ioncluster {

using Amplitude = std::complex<double>;

/// Internal level of a single ion: ground g and the two metastable excited
/// levels e and e'. The underlying value is the base-3 digit used in indexing.
enum class IonLevel : std::uint8_t { G = 0, E = 1, EPrime = 2 };

inline constexpr std::size_t kLevelsPerIon = 3;
inline constexpr std::size_t kDefaultNMax = 2;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPrepTolerance = 1e-9;

const char *level_name(IonLevel level);

struct LevelAmplitude {
    IonLevel level;
    Amplitude coefficient;

    bool operator==(const LevelAmplitude &) const = default;
};

/// Initial pure state of one ion, as up to three (level, coefficient) terms.
struct IonPrep {
    std::vector<LevelAmplitude> terms;

    static IonPrep basis(IonLevel level);
    /// (g + sign * e) / sqrt(2).
    static IonPrep equal_superposition(int sign);

    bool operator==(const IonPrep &) const = default;
};

/// A computational basis label. `ions[0]` is ion 1.
struct BasisLabel {
    std::vector<IonLevel> ions;
    std::size_t phonons = 0;

    bool operator==(const BasisLabel &) const = default;
};

/// Index layout: ion 1 is the most significant base-3 digit, ions follow in
/// increasing order, and the Fock number is the least significant digit
/// (radix n_max + 1).
std::size_t encode_index(const BasisLabel &label, std::size_t n_max);
BasisLabel decode_index(std::size_t index, std::size_t n_ions, std::size_t n_max);
/// "g e e' g;1" style label: ion levels in order, then the phonon number.
std::string format_label(const BasisLabel &label);
std::size_t register_dimension(std::size_t n_ions, std::size_t n_max);

/// Normalized pure state of N three-level ions and one truncated motional mode.
/// Immutable once constructed; every operation returns a new state.
class RegisterState {
   public:
    /// Validates the dimension and that the norm is 1 within 1e-9, then
    /// renormalizes.
    static RegisterState from_amplitudes(std::size_t n_ions, std::size_t n_max, std::vector<Amplitude> amplitudes);

    std::size_t n_ions() const noexcept { return n_ions_; }
    std::size_t n_max() const noexcept { return n_max_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    Amplitude amplitude(std::size_t index) const { return amplitudes_.at(index); }
    Amplitude amplitude(const BasisLabel &label) const;

    /// Stride of ion `ion` (1-based) in the flat amplitude array.
    std::size_t ion_stride(std::size_t ion) const;
    IonLevel level_at(std::size_t index, std::size_t ion) const;
    std::size_t phonons_at(std::size_t index) const noexcept { return index % (n_max_ + 1); }

    double norm_squared() const;

   private:
    RegisterState(std::size_t n_ions, std::size_t n_max, std::vector<Amplitude> amplitudes)
        : n_ions_(n_ions), n_max_(n_max), amplitudes_(std::move(amplitudes)) {}

    std::size_t n_ions_;
    std::size_t n_max_;
    std::vector<Amplitude> amplitudes_;
};

/// Product state of `preps` with the mode in Fock |0>. Requires n_max >= 1.
RegisterState new_register(std::span<const IonPrep> preps, std::size_t n_max = kDefaultNMax);

/// <a|b>, conjugate-linear in `a`.
Amplitude inner_product(const RegisterState &a, const RegisterState &b);

double population(const RegisterState &state, std::size_t ion, IonLevel level);
double mode_population(const RegisterState &state, std::size_t n);

/// Unit phase p that aligns `state` to `reference` (state ~ p * reference),
/// taken from the largest-magnitude amplitude of the reference. Returns 1 if
/// the state has no weight there.
Amplitude alignment_phase(const RegisterState &state, const RegisterState &reference);

/// max_i |state_i - p * reference_i| with p = alignment_phase(state, reference).
double max_deviation_up_to_phase(const RegisterState &state, const RegisterState &reference);
/// max_i |a_i - b_i|.
double max_deviation(const RegisterState &a, const RegisterState &b);

}  // namespace ioncluster

#endif
