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

#include "ioncluster/noise.h"

#include <cmath>
#include <random>

#include "ioncluster/errors.h"
#include "ioncluster/verify.h"

namespace ioncluster {

namespace {

void check_per_pulse_fidelity(double f) {
    if (!(f > 0 && f <= 1)) {
        throw ValidationError("per-pulse fidelity must lie in (0, 1], got " + std::to_string(f));
    }
}

}  // namespace

void NoiseConfig::validate() const {
    check_per_pulse_fidelity(per_pulse_fidelity);
    if (!(jitter_sigma >= 0) || !std::isfinite(jitter_sigma)) {
        throw ValidationError("jitter sigma must be a finite non-negative number");
    }
    if (trials < 1) {
        throw ValidationError("at least one trial is required");
    }
}

double fidelity_estimate(const PulseSequence &seq, double per_pulse_fidelity,
                         std::optional<std::size_t> pulse_count_override) {
    check_per_pulse_fidelity(per_pulse_fidelity);
    const std::size_t k = pulse_count_override.value_or(sideband_count(seq));
    return std::pow(per_pulse_fidelity, static_cast<double>(k));
}

std::vector<double> trial_normals(std::uint64_t seed, std::size_t trial, std::size_t count) {
    const auto t = static_cast<std::uint64_t>(trial);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> z(count);
    for (auto &v : z) {
        v = normal(rng);
    }
    return z;
}

MonteCarloResult monte_carlo(const PulseSequence &seq, const NoiseConfig &cfg, std::size_t n_max) {
    cfg.validate();
    const RegisterState ideal = run(seq, n_max).final_state;
    const std::size_t k = sideband_count(seq);

    MonteCarloResult result;
    result.samples.reserve(cfg.trials);
    for (std::size_t trial = 0; trial < cfg.trials; trial++) {
        std::vector<double> errors = trial_normals(cfg.seed, trial, k);
        for (auto &e : errors) {
            e *= cfg.jitter_sigma;
        }
        try {
            result.samples.push_back(fidelity(run_with_area_errors(seq, n_max, errors), ideal));
        } catch (const TruncationError &e) {
            throw e.in_trial(trial + 1);
        }
    }

    double sum = 0;
    for (double f : result.samples) {
        sum += f;
    }
    const double n = static_cast<double>(result.samples.size());
    result.mean_fidelity = sum / n;
    if (result.samples.size() > 1) {
        double ss = 0;
        for (double f : result.samples) {
            ss += (f - result.mean_fidelity) * (f - result.mean_fidelity);
        }
        result.std_error = std::sqrt(ss / (n - 1) / n);
    }
    return result;
}

}  // namespace ioncluster
