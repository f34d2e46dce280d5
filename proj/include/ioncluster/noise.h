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

#ifndef IONCLUSTER_NOISE_H
#define IONCLUSTER_NOISE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ioncluster/protocol.h"

namespace ioncluster {

/// Number of sideband excitations quoted for the six-ion scheme. The step
/// table itself contains ten; both counts are reported side by side.
inline constexpr std::size_t kQuotedSidebandCount = 8;
inline constexpr double kDefaultPerPulseFidelity = 0.93;

struct NoiseConfig {
    double per_pulse_fidelity = kDefaultPerPulseFidelity;
    /// Standard deviation of the fractional sideband pulse-area error.
    double jitter_sigma = 0;
    std::size_t trials = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

/// F^k, with k the override if given and otherwise the number of sideband
/// steps in `seq`. Carrier pulses do not count.
double fidelity_estimate(const PulseSequence &seq, double per_pulse_fidelity,
                         std::optional<std::size_t> pulse_count_override = std::nullopt);

struct MonteCarloResult {
    double mean_fidelity = 0;
    double std_error = 0;
    std::vector<double> samples;
};

/// Standard-normal draws for one trial, one per sideband step in order.
///
/// Trial t uses its own std::mt19937_64 seeded with
/// std::seed_seq{seed_lo, seed_hi, t_lo, t_hi} (32-bit halves), and draws with
/// std::normal_distribution<double>. The draws do not depend on sigma, so
/// runs at different sigma with the same seed share random numbers.
std::vector<double> trial_normals(std::uint64_t seed, std::size_t trial, std::size_t count);

/// Pulse-area jitter: each sideband area theta becomes theta * (1 + sigma * z)
/// with z from `trial_normals`. The fidelity of each trial is taken against the
/// unperturbed output of `seq`. TruncationError carries trial and step.
MonteCarloResult monte_carlo(const PulseSequence &seq, const NoiseConfig &cfg, std::size_t n_max);

}  // namespace ioncluster

#endif
