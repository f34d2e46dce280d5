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

#include "ioncluster/verify.h"

#include <random>

#include "gtest/gtest.h"

#include "ioncluster/errors.h"
#include "ioncluster/noise.h"
#include "ioncluster/protocol.h"
#include "test_support.h"

using namespace ioncluster;
using namespace ioncluster::testing;

TEST(verify, reference_small_cases) {
    auto one = reference_cluster(1);
    EXPECT_LT(max_deviation(one, to_state(kInvSqrt2 * (g(1) + e(1)) * fock(0), 1)), 1e-15);

    // (gg - ge + eg + ee) / 2.
    auto two = reference_cluster(2);
    EXPECT_LT(max_deviation(two, to_state(0.5 * (g(1) * g(2) - g(1) * e(2) + e(1) * g(2) + e(1) * e(2)), 2)), 1e-15);

    EXPECT_THROW(reference_cluster(0), ValidationError);
}

TEST(verify, reference_matches_closed_form) {
    for (std::size_t n = 1; n <= 6; n++) {
        auto ref = reference_cluster(n);
        auto oracle = cluster_qubit_vector(n);
        auto got = qubit_vector(ref);
        EXPECT_LT((got - oracle).cwiseAbs().maxCoeff(), 1e-15) << "n = " << n;

        EXPECT_NEAR(ref.norm_squared(), 1, kNormTolerance);
        std::size_t nonzero = 0;
        for (auto a : ref.amplitudes()) {
            if (a != Amplitude{}) {
                nonzero++;
                EXPECT_NEAR(std::abs(a), std::pow(2.0, -static_cast<double>(n) / 2), 1e-15);
            }
        }
        EXPECT_EQ(nonzero, std::size_t{1} << n);
        EXPECT_EQ(eprime_leakage(ref), 0);
        EXPECT_NEAR(mode_population(ref, 0), 1, kNormTolerance);
    }
}

TEST(verify, reference_six_is_factored_product) {
    // Expand (g1 Z2 + e1)(g2 Z3 + e2)...(g6 + e6) / 8 from the right: each Z
    // flips the sign of the terms with its ion excited.
    Ket acc = 0.125 * (g(6) + e(6));
    for (std::size_t a = 5; a >= 1; a--) {
        Ket flipped = acc;
        for (auto &t : flipped.terms) {
            if (t.ions.at(a + 1) == IonLevel::E) {
                t.coeff = -t.coeff;
            }
        }
        acc = g(a) * flipped + e(a) * acc;
    }
    EXPECT_LT(max_deviation_up_to_phase(to_state(acc * fock(0), 6), reference_cluster(6)), 1e-15);
}

TEST(verify, fidelity_basics) {
    std::mt19937_64 rng(1);
    auto psi = random_state(rng, 2, 2);
    EXPECT_NEAR(fidelity(psi, psi), 1, 1e-14);
    EXPECT_EQ(fidelity(to_state(g(1) * fock(0), 1), to_state(e(1) * fock(0), 1)), 0);
    EXPECT_THROW(fidelity(psi, reference_cluster(3)), ValidationError);
}

TEST(verify, fidelity_symmetric_and_phase_invariant) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; i++) {
        auto a = random_state(rng, 2, 1);
        auto b = random_state(rng, 2, 1);
        EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-14);
        std::vector<Amplitude> rotated(a.amplitudes().begin(), a.amplitudes().end());
        for (auto &x : rotated) {
            x *= std::polar(1.0, 0.37 * i);
        }
        auto ar = RegisterState::from_amplitudes(2, 1, rotated);
        EXPECT_NEAR(fidelity(ar, b), fidelity(a, b), 1e-14);
        EXPECT_LE(fidelity(a, b), 1 + 1e-12);
        EXPECT_GE(fidelity(a, b), 0);
    }
}

TEST(verify, stabilizers_match_dense_oracle) {
    for (std::size_t n = 1; n <= 6; n++) {
        auto ref = reference_cluster(n);
        auto got = stabilizer_expectations(ref);
        auto want = stabilizer_oracle(cluster_qubit_vector(n), n);
        ASSERT_EQ(got.size(), n);
        for (std::size_t a = 0; a < n; a++) {
            EXPECT_NEAR(got[a], want[a], 1e-12) << "n = " << n << ", a = " << a + 1;
            if (n >= 2) {
                EXPECT_NEAR(std::abs(got[a]), 1, 1e-10);
            }
        }
    }
    // Random qubit-subspace states: the mode is a spectator, so the oracle is
    // the sum of the qubit-space expectations over Fock slices.
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; i++) {
        const std::size_t n = 2 + i % 3;
        const std::size_t n_max = 1;
        auto s = random_qubit_state(rng, n, n_max);
        std::vector<double> want(n);
        for (std::size_t level = 0; level <= n_max; level++) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(std::size_t{1} << n);
            for (std::size_t idx = 0; idx < s.dimension(); idx++) {
                auto lbl = decode_index(idx, n, n_max);
                if (lbl.phonons != level) {
                    continue;
                }
                std::size_t bits = 0;
                bool qubit = true;
                for (auto l : lbl.ions) {
                    qubit = qubit && l != IonLevel::EPrime;
                    bits = bits * 2 + (l == IonLevel::E);
                }
                if (qubit) {
                    v(bits) = s.amplitude(idx);
                }
            }
            auto part = stabilizer_oracle(v, n);
            for (std::size_t a = 0; a < n; a++) {
                want[a] += part[a];
            }
        }
        auto got = stabilizer_expectations(s);
        for (std::size_t a = 0; a < n; a++) {
            EXPECT_NEAR(got[a], want[a], 1e-12);
        }
    }
}

TEST(verify, product_ground_state_has_zero_x_expectations) {
    std::vector<IonPrep> preps(6, IonPrep::basis(IonLevel::G));
    auto s = new_register(preps, 2);
    for (double v : stabilizer_expectations(s)) {
        EXPECT_EQ(v, 0);
    }
}

TEST(verify, stabilizers_square_to_identity) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; i++) {
        const std::size_t n = 1 + i % 4;
        auto s = random_qubit_state(rng, n, 1 + i % 2);
        for (std::size_t a = 1; a <= n; a++) {
            EXPECT_LT(max_deviation(apply_stabilizer(apply_stabilizer(s, a), a), s), 1e-12);
        }
    }
}

TEST(verify, stabilizers_reject_eprime) {
    auto s = to_state(g(1) * ep(2) * fock(0), 2);
    try {
        stabilizer_expectations(s);
        FAIL() << "expected LeakageError";
    } catch (const LeakageError &err) {
        EXPECT_EQ(err.ion(), 2u);
        EXPECT_NE(std::string(err.what()).find("ion 2"), std::string::npos);
    }
    EXPECT_THROW(apply_stabilizer(s, 1), LeakageError);
    EXPECT_THROW(apply_stabilizer(reference_cluster(2), 3), ValidationError);
}

TEST(verify, protocol_signature_matches_reference) {
    auto out = run(cluster6_sequence(), 2, false).final_state;
    auto got = stabilizer_expectations(out);
    auto want = stabilizer_expectations(reference_cluster(6));
    for (std::size_t a = 0; a < 6; a++) {
        EXPECT_NEAR(got[a], want[a], 1e-10);
        EXPECT_NEAR(std::abs(got[a]), 1, 1e-10);
    }
}

TEST(verify, verify_run_report) {
    auto out = run(cluster6_sequence(), 2, false).final_state;
    auto rep = verify_run(out, 6);
    EXPECT_GE(rep.fidelity, 1 - 1e-10);
    EXPECT_LE(rep.leakage_eprime, 1e-12);
    EXPECT_LE(rep.leakage_mode, 1e-12);
    ASSERT_TRUE(rep.stabilizer_expectations.has_value());
    EXPECT_EQ(rep.stabilizer_expectations->size(), 6u);
    EXPECT_NEAR(std::abs(rep.global_phase), 1, 1e-15);
    EXPECT_LT(std::abs(out.amplitude(0) - rep.global_phase * reference_cluster(6).amplitude(0)), 1e-10);

    auto self = verify_run(reference_cluster(4), 4);
    EXPECT_NEAR(self.fidelity, 1, 1e-14);
    EXPECT_THROW(verify_run(out, 5), ValidationError);
}

TEST(verify, verify_run_on_jittered_sample) {
    auto seq = cluster6_sequence();
    std::vector<double> errors(sideband_count(seq));
    auto z = trial_normals(42, 0, errors.size());
    for (std::size_t i = 0; i < errors.size(); i++) {
        errors[i] = 0.05 * z[i];
    }
    auto noisy = run_with_area_errors(seq, 6, errors);
    auto rep = verify_run(noisy, 6);
    EXPECT_LT(rep.fidelity, 1);
    EXPECT_GT(rep.leakage_eprime, 0);
    EXPECT_GT(rep.leakage_mode, 0);
    // Stabilizers are only reported when the state stays in the qubit subspace.
    EXPECT_EQ(rep.stabilizer_expectations.has_value(), rep.leakage_eprime <= 1e-9);
}
