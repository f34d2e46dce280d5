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

#include "ioncluster/protocol.h"

#include <numbers>

#include "gtest/gtest.h"

#include "ioncluster/errors.h"
#include "ioncluster/verify.h"
#include "protocol_fixtures.h"

using namespace ioncluster;
using namespace ioncluster::testing;

TEST(protocol, cluster6_step_table) {
    auto seq = cluster6_sequence();
    ASSERT_EQ(seq.steps.size(), 11u);
    ASSERT_EQ(seq.n_ions(), 6u);
    EXPECT_EQ(sideband_count(seq), 10u);
    for (std::size_t i = 0; i < seq.steps.size(); i++) {
        EXPECT_EQ(seq.steps[i].pulse.kind == PulseKind::Carrier, i == 3) << "step " << i + 1;
    }
    EXPECT_EQ(seq.steps[3].pulse, carrier(1, std::numbers::pi / 2, 0));
    EXPECT_EQ(seq.steps[0].label, "half sideband on ion 1");
}

TEST(protocol, initial_state_matches_preps) {
    auto r = run(cluster6_sequence(), 2, false);
    auto empty = cluster6_sequence();
    empty.steps.clear();
    auto initial = run(empty, 2, true);
    EXPECT_TRUE(initial.snapshots.empty());
    EXPECT_LT(max_deviation(initial.final_state, expected_cluster6_step(0)), 1e-15);
    EXPECT_EQ(max_deviation(initial.final_state, new_register(empty.preps, 2)), 0);
    EXPECT_EQ(r.final_state.n_ions(), 6u);
}

TEST(protocol, snapshots_follow_the_derivation) {
    auto r = run(cluster6_sequence(), 2, true);
    ASSERT_EQ(r.snapshots.size(), 11u);
    for (const auto &snap : r.snapshots) {
        EXPECT_LT(max_deviation_up_to_phase(snap.state, expected_cluster6_step(snap.step_index)), 1e-10)
            << "step " << snap.step_index;
        EXPECT_NEAR(snap.state.norm_squared(), 1, kNormTolerance);
        EXPECT_EQ(snap.pulse, cluster6_sequence().steps[snap.step_index - 1].pulse);
    }
}

TEST(protocol, snapshot_invariants) {
    auto seq = cluster6_sequence();
    auto r = run(seq, 2, true);
    for (const auto &snap : r.snapshots) {
        EXPECT_LE(mode_population(snap.state, 2), 1e-12) << "step " << snap.step_index;
        if (snap.pulse.kind == PulseKind::SidebandGEPrime) {
            EXPECT_LE(population(snap.state, snap.pulse.ion, IonLevel::EPrime), 1e-12) << "step " << snap.step_index;
        }
    }
    EXPECT_NEAR(mode_population(r.final_state, 0), 1, 1e-10);
    // After step 3 the mode is back in the vacuum.
    EXPECT_NEAR(mode_population(r.snapshots[2].state, 0), 1, 1e-12);
}

TEST(protocol, final_state_is_reference_cluster) {
    auto r = run(cluster6_sequence(), 2, false);
    EXPECT_GE(fidelity(r.final_state, reference_cluster(6)), 1 - 1e-10);
    EXPECT_LT(max_deviation_up_to_phase(r.final_state, reference_cluster(6)), 1e-10);
}

TEST(protocol, truncation_robustness) {
    auto low = run(cluster6_sequence(), 1, false).final_state;
    auto high = run(cluster6_sequence(), 5, false).final_state;
    double worst = 0;
    for (std::size_t i = 0; i < high.dimension(); i++) {
        BasisLabel lbl = decode_index(i, 6, 5);
        const Amplitude h = high.amplitude(i);
        const Amplitude l = lbl.phonons <= 1 ? low.amplitude(lbl) : Amplitude{};
        worst = std::max(worst, std::abs(h - l));
    }
    EXPECT_LT(worst, 1e-10);
}

TEST(protocol, chain6_equals_cluster6) { EXPECT_EQ(chain_sequence(6), cluster6_sequence()); }

TEST(protocol, chain_sequences_build_clusters) {
    for (std::size_t n = 2; n <= 8; n++) {
        auto seq = chain_sequence(n);
        auto r = run(seq, 2, true);
        EXPECT_GE(fidelity(r.final_state, reference_cluster(n)), 1 - 1e-10) << "n = " << n;
        EXPECT_NEAR(mode_population(r.final_state, 0), 1, 1e-10);
        for (const auto &snap : r.snapshots) {
            EXPECT_LE(mode_population(snap.state, 2), 1e-12);
        }
    }
    EXPECT_THROW(chain_sequence(1), ValidationError);
    EXPECT_THROW(chain_sequence(0), ValidationError);
}

TEST(protocol, chain_sideband_counts) {
    // 3 opening sidebands, then 4 per interior even ion and 3 for an even tail.
    EXPECT_EQ(sideband_count(chain_sequence(2)), 2u);
    EXPECT_EQ(sideband_count(chain_sequence(3)), 3u);
    EXPECT_EQ(sideband_count(chain_sequence(4)), 6u);
    EXPECT_EQ(sideband_count(chain_sequence(5)), 7u);
    EXPECT_EQ(sideband_count(chain_sequence(6)), 10u);
}

TEST(protocol, run_reports_failing_step) {
    PulseSequence seq;
    seq.preps = {IonPrep::basis(IonLevel::E), IonPrep::basis(IonLevel::E)};
    seq.steps = {{map_ion_to_mode(1), ""}, {map_ion_to_mode(2), ""}};
    try {
        run(seq, 1, false);
        FAIL() << "expected TruncationError";
    } catch (const TruncationError &e) {
        ASSERT_TRUE(e.step().has_value());
        EXPECT_EQ(*e.step(), 2u);
        EXPECT_NE(std::string(e.what()).find("step 2"), std::string::npos);
    }
    EXPECT_NO_THROW(run(seq, 2, false));
}

TEST(protocol, validation) {
    PulseSequence seq;
    EXPECT_THROW(run(seq, 2, false), ValidationError);
    seq.preps = {IonPrep::basis(IonLevel::G)};
    seq.steps = {{phase_gate(2), ""}};
    EXPECT_THROW(run(seq, 2, false), ValidationError);
    seq.steps.clear();
    EXPECT_THROW(run(seq, 0, false), ValidationError);
}

TEST(protocol, run_is_deterministic) {
    auto a = run(cluster6_sequence(), 3, false).final_state;
    auto b = run(cluster6_sequence(), 3, false).final_state;
    EXPECT_EQ(max_deviation(a, b), 0);
}
