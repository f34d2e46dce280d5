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

#include "ioncluster/cli.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ioncluster/errors.h"
#include "ioncluster/noise.h"
#include "ioncluster/protocol.h"
#include "ioncluster/sequence_io.h"
#include "ioncluster/verify.h"

namespace ioncluster::cli {

using nlohmann::json;

namespace {

struct Source {
    std::string protocol;
    std::string sequence_path;
};

struct LoadedSequence {
    PulseSequence seq;
    std::string description;
};

PulseSequence builtin_protocol(const std::string &name) {
    if (name == "cluster6") {
        return cluster6_sequence();
    }
    constexpr std::string_view prefix = "chain:";
    if (name.starts_with(prefix)) {
        const std::string digits = name.substr(prefix.size());
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw ValidationError("invalid chain length in protocol \"" + name + "\"");
        }
        return chain_sequence(n);
    }
    throw ValidationError("unknown protocol \"" + name + "\" (expected cluster6 or chain:N)");
}

LoadedSequence load(const Source &src) {
    if (!src.protocol.empty()) {
        return {builtin_protocol(src.protocol), src.protocol};
    }
    std::ifstream in(src.sequence_path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read sequence file " + src.sequence_path);
    }
    std::stringstream text;
    text << in.rdbuf();
    return {parse_sequence(text.str()), "sequence:" + src.sequence_path};
}

void add_source_options(CLI::App *cmd, Source &src, bool allow_file) {
    auto *proto = cmd->add_option("--protocol", src.protocol, "Built-in protocol: cluster6 or chain:N");
    if (allow_file) {
        auto *file = cmd->add_option("--sequence", src.sequence_path, "Sequence file to run");
        proto->excludes(file);
        cmd->require_option(1, 0);
    } else {
        proto->required();
    }
}

json estimate_block(const PulseSequence &seq, double per_pulse_fidelity) {
    return json{{"per_pulse_fidelity", per_pulse_fidelity},
                {"quoted_sideband_pulses", kQuotedSidebandCount},
                {"counted_sideband_pulses", sideband_count(seq)},
                {"k8", fidelity_estimate(seq, per_pulse_fidelity, kQuotedSidebandCount)},
                {"k_counted", fidelity_estimate(seq, per_pulse_fidelity)}};
}

void write_output(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ValidationError("cannot write " + path);
    }
    file << text;
}

struct RunFlags {
    Source src;
    std::size_t n_max = kDefaultNMax;
    bool snapshots = false;
    bool full = false;
    std::string out_path;
};

std::string cmd_run(const RunFlags &flags) {
    const LoadedSequence loaded = load(flags.src);
    const RunResult result = run(loaded.seq, flags.n_max, flags.snapshots);
    const VerificationReport verification = verify_run(result.final_state, loaded.seq.n_ions());

    json report{{"version", std::string(kReportVersion)},
                {"report", "run"},
                {"config",
                 {{"source", loaded.description},
                  {"n_max", flags.n_max},
                  {"snapshots", flags.snapshots},
                  {"full", flags.full}}},
                {"n_ions", loaded.seq.n_ions()},
                {"final_state", amplitudes_to_json(result.final_state, flags.full)},
                {"verification", verification_to_json(verification)},
                {"fidelity_estimate", estimate_block(loaded.seq, kDefaultPerPulseFidelity)}};
    if (flags.snapshots) {
        json snaps = json::array();
        for (const auto &s : result.snapshots) {
            snaps.push_back({{"step_index", s.step_index},
                             {"label", loaded.seq.steps[s.step_index - 1].label},
                             {"pulse", pulse_to_json(s.pulse)},
                             {"amplitudes", amplitudes_to_json(s.state, flags.full)}});
        }
        report["snapshots"] = std::move(snaps);
    }
    return dump_document(report);
}

struct NoiseFlags {
    Source src;
    std::optional<std::size_t> n_max;
    double per_pulse_fidelity = kDefaultPerPulseFidelity;
    double jitter_sigma = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::string out_path;
};

std::string cmd_noise(const NoiseFlags &flags) {
    const LoadedSequence loaded = load(flags.src);
    NoiseConfig cfg;
    cfg.per_pulse_fidelity = flags.per_pulse_fidelity;
    cfg.jitter_sigma = flags.jitter_sigma;
    cfg.trials = flags.trials;
    cfg.seed = flags.seed;
    cfg.validate();
    // Jittered pulses leave residual excitations in the mode; with one Fock level
    // per ion the built-in chains never reach the cutoff.
    const std::size_t n_max = flags.n_max.value_or(std::max<std::size_t>(loaded.seq.n_ions(), 1));
    const MonteCarloResult mc = monte_carlo(loaded.seq, cfg, n_max);

    json report{{"version", std::string(kReportVersion)},
                {"report", "noise"},
                {"config",
                 {{"source", loaded.description},
                  {"n_max", n_max},
                  {"per_pulse_fidelity", cfg.per_pulse_fidelity},
                  {"jitter_sigma", cfg.jitter_sigma},
                  {"trials", cfg.trials},
                  {"seed", cfg.seed}}},
                {"n_ions", loaded.seq.n_ions()},
                {"monte_carlo",
                 {{"mean_fidelity", mc.mean_fidelity}, {"std_error", mc.std_error}, {"samples", mc.samples}}},
                {"fidelity_estimate", estimate_block(loaded.seq, cfg.per_pulse_fidelity)}};
    return dump_document(report);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Trapped-ion cluster-state pulse sequence simulator", "ioncluster"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto *run_cmd = app.add_subcommand("run", "Simulate a sequence and verify the final state");
    add_source_options(run_cmd, run_flags.src, true);
    run_cmd->add_option("--n-max", run_flags.n_max, "Highest retained Fock level")->check(CLI::PositiveNumber);
    run_cmd->add_flag("--snapshots", run_flags.snapshots, "Record the state after every step");
    run_cmd->add_flag("--full", run_flags.full, "List every amplitude, including zeros");
    run_cmd->add_option("--out", run_flags.out_path, "Output path (default stdout)");

    NoiseFlags noise_flags;
    auto *noise_cmd = app.add_subcommand("noise", "Monte Carlo pulse-area jitter and multiplicative estimate");
    add_source_options(noise_cmd, noise_flags.src, true);
    noise_cmd->add_option("--n-max", noise_flags.n_max, "Highest retained Fock level (default: number of ions)")
        ->check(CLI::PositiveNumber);
    noise_cmd->add_option("--per-pulse-fidelity", noise_flags.per_pulse_fidelity, "Fidelity of one sideband pulse");
    noise_cmd->add_option("--jitter-sigma", noise_flags.jitter_sigma, "Fractional pulse-area standard deviation");
    noise_cmd->add_option("--trials", noise_flags.trials, "Number of Monte Carlo trials");
    noise_cmd->add_option("--seed", noise_flags.seed, "Random seed");
    noise_cmd->add_option("--out", noise_flags.out_path, "Output path (default stdout)");

    Source emit_src;
    std::string emit_out;
    auto *emit_cmd = app.add_subcommand("emit", "Write a built-in protocol as a sequence file");
    add_source_options(emit_cmd, emit_src, false);
    emit_cmd->add_option("--out", emit_out, "Output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (*run_cmd) {
            write_output(cmd_run(run_flags), run_flags.out_path, out);
        } else if (*noise_cmd) {
            write_output(cmd_noise(noise_flags), noise_flags.out_path, out);
        } else {
            write_output(emit_sequence(load(emit_src).seq), emit_out, out);
        }
    } catch (const TruncationError &e) {
        err << "truncation error: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace ioncluster::cli
