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

#ifndef IONCLUSTER_ERRORS_H
#define IONCLUSTER_ERRORS_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ioncluster {

/// Bad input: out-of-range indices, non-normalized preparations, shape
/// mismatches, malformed sequence files. Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A state violates a precondition of an observable, e.g. e' population
/// where only the {g, e} qubit subspace is meaningful.
class LeakageError : public ValidationError {
   public:
    LeakageError(const std::string &what, std::size_t ion) : ValidationError(what), ion_(ion) {}
    std::size_t ion() const noexcept { return ion_; }

   private:
    std::size_t ion_;
};

/// A sideband pulse would push amplitude above the Fock cutoff.
/// Maps to CLI exit code 3.
///
/// `step()` and `trial()` are 1-based and attached by the sequence runner and
/// the Monte Carlo driver respectively.
class TruncationError : public std::runtime_error {
   public:
    explicit TruncationError(const std::string &what) : std::runtime_error(what), detail_(what) {}

    std::optional<std::size_t> step() const noexcept { return step_; }
    std::optional<std::size_t> trial() const noexcept { return trial_; }
    const std::string &detail() const noexcept { return detail_; }

    TruncationError at_step(std::size_t step) const {
        TruncationError e = *this;
        e.step_ = step;
        return e.relabel();
    }
    TruncationError in_trial(std::size_t trial) const {
        TruncationError e = *this;
        e.trial_ = trial;
        return e.relabel();
    }

   private:
    TruncationError relabel() const {
        std::string msg;
        if (trial_) {
            msg += "trial " + std::to_string(*trial_) + ": ";
        }
        if (step_) {
            msg += "step " + std::to_string(*step_) + ": ";
        }
        msg += detail_;
        TruncationError e(msg);
        e.detail_ = detail_;
        e.step_ = step_;
        e.trial_ = trial_;
        return e;
    }

    std::string detail_;
    std::optional<std::size_t> step_;
    std::optional<std::size_t> trial_;
};

}  // namespace ioncluster

#endif
