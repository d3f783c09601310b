// Copyright 2026 The mbqc Authors
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

#include "mbqc/oneway.h"

#include <gtest/gtest.h>

#include <numbers>

#include "bridge.h"
#include "mbqc/compiler.h"
#include "mbqc/error.h"

using namespace mbqc;

namespace {

constexpr double kPi = std::numbers::pi;

oracle::Mat reference_net(const std::vector<double> &angles) {
    oracle::Mat u = oracle::eye(2);
    for (double a : angles) {
        u = oracle::mul(oracle::mul(oracle::H(), oracle::Rz(-a)), u);
    }
    return u;
}

bool proportional(const oracle::Mat &a, const oracle::Mat &b, double tol = 1e-9) {
    // Tr(a^dagger b) has modulus 2 exactly when b = e^{it} a for unitary a, b.
    oracle::C t = 0;
    for (size_t k = 0; k < 4; k++) {
        t += std::conj(a.a[k]) * b.a[k];
    }
    return std::abs(std::abs(t) - 2) <= tol;
}

struct ReferenceRun {
    oracle::Vec corrected;
    std::vector<double> measured;
};

// Adaptive execution with the byproduct kept as a 2x2 matrix F: the output qubit
// holds F U_k ... U_1 |phi>. Each measured angle is chosen by trying both signs.
ReferenceRun reference_adaptive(const std::vector<double> &angles, const oracle::Vec &phi,
                                const std::vector<int> &outcomes) {
    size_t n = angles.size() + 1;
    oracle::Vec plus{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
    oracle::Vec state = phi;
    for (size_t q = 1; q < n; q++) {
        state = oracle::kron(state, plus);
    }
    oracle::Mat cascade = oracle::eye(size_t{1} << n);
    for (size_t k = 0; k + 1 < n; k++) {
        cascade = oracle::mul(oracle::full2(n, oracle::CZ(), k, k + 1), cascade);
    }
    state = oracle::act(cascade, state);
    oracle::Mat frame = oracle::eye(2);
    ReferenceRun run;
    size_t width = n;
    for (size_t k = 0; k < angles.size(); k++) {
        double chosen = angles[k];
        for (double candidate : {angles[k], -angles[k]}) {
            // Need R_z(-candidate) F = F' R_z(-angle) with F' a Pauli up to phase.
            oracle::Mat f2 = oracle::mul(oracle::mul(oracle::Rz(-candidate), frame), oracle::Rz(angles[k]));
            bool pauli = false;
            for (char c : {'I', 'X', 'Y', 'Z'}) {
                pauli = pauli || proportional(f2, oracle::letter(c));
            }
            if (pauli) {
                chosen = candidate;
                break;
            }
        }
        run.measured.push_back(chosen);
        // Qubit k is always the leading qubit of the remaining register.
        state = oracle::normalized(oracle::contract(state, width, 0, oracle::o_eigenvector(chosen, outcomes[k])));
        width--;
        oracle::Mat f2 = oracle::mul(oracle::mul(oracle::Rz(-chosen), frame), oracle::Rz(angles[k]));
        oracle::Mat xs = outcomes[k] == -1 ? oracle::X() : oracle::eye(2);
        frame = oracle::mul(oracle::mul(oracle::mul(xs, oracle::H()), f2), oracle::H());
    }
    run.corrected = oracle::act(oracle::dagger(frame), state);
    return run;
}

}  // namespace

TEST(oneway_pattern, validation) {
    EXPECT_NO_THROW(OneWayPattern{{}}.validate());
    EXPECT_THROW(OneWayPattern{std::vector<double>(kMaxPatternLength + 1, 0.0)}.validate(), Error);
    OneWayPattern bad{{0.0, std::nan("")}};
    EXPECT_THROW(bad.validate(), Error);
    OneWayPattern p{{0.1, 0.2}};
    EXPECT_EQ(p.chain_length(), 3u);
    EXPECT_EQ(p.output_qubit(), 2u);
}

TEST(oneway_pattern, net_unitary_matches_reference) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    for (int trial = 0; trial < 30; trial++) {
        std::vector<double> angles(1 + trial % 6);
        for (auto &a : angles) {
            a = angle(rng);
        }
        EXPECT_LT(oracle::max_diff(to_oracle(pattern_net_unitary(OneWayPattern{angles})), reference_net(angles)), 1e-12);
    }
}

TEST(oneway_pattern, worked_examples) {
    struct Case {
        std::vector<double> angles;
        Matrix expected;
    };
    std::vector<Case> cases = {
        {{0, kPi / 2, kPi / 2, kPi / 2}, gates::H().matrix()},
        {{0, 0, kPi / 2, 0}, gates::S_dag().matrix()},
        {{0, kPi / 2, kPi / 2}, gates::S().matrix()},
        {{0}, gates::H().matrix()},
    };
    for (const auto &c : cases) {
        OneWayPattern p{c.angles};
        EXPECT_TRUE(equal_up_to_phase(pattern_net_unitary(p), c.expected));
        for (uint64_t seed = 0; seed < 10; seed++) {
            StateVector phi = random_state(1, seed);
            auto report = check_protocol(pattern_trace(p, PatternOrder::UnitaryCluster), phi);
            EXPECT_TRUE(report.pass);
            for (const auto &b : report.branches) {
                EXPECT_GE(b.fidelity, 1 - 1e-9);
            }
        }
    }
}

TEST(oneway_pattern, figure_12_orientation) {
    // The first measurement is the rightmost factor: [0, pi/2] is H R_z(-pi/2) H, not its reverse.
    OneWayPattern p{{0, kPi / 2}};
    Matrix h = gates::H().matrix();
    Matrix forward = h * gates::rz(-kPi / 2).matrix() * h;
    Matrix reversed = h * h * gates::rz(-kPi / 2).matrix();
    EXPECT_TRUE(equal_up_to_phase(pattern_net_unitary(p), forward));
    EXPECT_FALSE(equal_up_to_phase(pattern_net_unitary(p), reversed));
}

TEST(pauli_frame, adapt_rule) {
    EXPECT_NEAR(PauliFrame{PauliString("I")}.adapt(0.7), 0.7, 1e-15);
    EXPECT_NEAR(PauliFrame{PauliString("Z")}.adapt(0.7), 0.7, 1e-15);
    EXPECT_NEAR(PauliFrame{PauliString("X")}.adapt(0.7), 2 * kPi - 0.7, 1e-12);
    EXPECT_NEAR(PauliFrame{PauliString("Y")}.adapt(0.7), 2 * kPi - 0.7, 1e-12);
}

TEST(pauli_frame, advance_matches_reference) {
    // Frame X, outcome -1, angle a: X^1 H sigma' H with sigma' = X gives X Z = -iY, i.e. letter Y.
    PauliFrame f{PauliString("X")};
    EXPECT_EQ(f.advance(0.4, -1).current.letters(), "Y");
    EXPECT_EQ(f.advance(0.4, 1).current.letters(), "Z");
    EXPECT_EQ(PauliFrame{PauliString("Z")}.advance(0.4, 1).current.letters(), "X");
    EXPECT_EQ(PauliFrame{}.advance(0.4, -1).current.letters(), "X");
}

TEST(execute, enumerated_clifford_pattern) {
    OneWayPattern p{{0, kPi / 2, kPi / 2, kPi / 2}};
    StateVector phi = random_state(1, 4);
    auto branches = execute_enumerated(p, phi);
    EXPECT_EQ(branches.size(), 16u);
    const size_t q0[1] = {0};
    StateVector want = apply(phi, gates::H(), q0);
    for (const auto &b : branches) {
        StateVector out = pattern_output(p, b);
        bool found = false;
        for (const char *s : {"I", "X", "Y", "Z"}) {
            found = found || equal_up_to_global_phase(out, PauliString(s).apply(want));
        }
        EXPECT_TRUE(found);
    }
    auto empty = execute_enumerated(OneWayPattern{{}}, phi);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(equal_up_to_global_phase(empty[0].state, phi));
}

TEST(execute, fixed_angles_fail_for_generic_rotations) {
    // Without feedforward a non-Clifford angle after an X byproduct is measured with the wrong sign.
    OneWayPattern p{{0, 0.3, 1.1}};
    auto report = check_protocol(pattern_trace(p, PatternOrder::UnitaryCluster), random_state(1, 2));
    EXPECT_FALSE(report.pass);
}

TEST(execute, adaptive_matches_reference_on_every_branch) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    for (int trial = 0; trial < 6; trial++) {
        std::vector<double> angles(2 + trial % 3);
        for (auto &a : angles) {
            a = angle(rng);
        }
        OneWayPattern p{angles};
        StateVector phi = random_state(1, 40 + trial);
        auto runs = execute_adaptive_all(p, phi);
        ASSERT_EQ(runs.size(), size_t{1} << angles.size());
        oracle::Vec want = oracle::act(reference_net(angles), to_oracle(phi));
        double total = 0;
        for (const auto &run : runs) {
            std::vector<int> outcomes;
            for (const auto &r : run.records) {
                outcomes.push_back(r.outcome);
            }
            ReferenceRun ref = reference_adaptive(angles, to_oracle(phi), outcomes);
            ASSERT_EQ(ref.measured.size(), run.measured_angles.size());
            for (size_t k = 0; k < ref.measured.size(); k++) {
                EXPECT_NEAR(std::remainder(ref.measured[k] - run.measured_angles[k], 2 * kPi), 0, 1e-12);
            }
            EXPECT_NEAR(std::abs(oracle::inner(ref.corrected, want)), 1, 1e-9);
            EXPECT_NEAR(std::abs(oracle::inner(to_oracle(run.corrected()), want)), 1, 1e-9);
            total += run.weight;
        }
        EXPECT_NEAR(total, 1, 1e-12);
    }
}

TEST(execute, adaptive_sampling_is_seeded) {
    OneWayPattern p{{0.4, 2.0, 5.1}};
    StateVector phi = random_state(1, 1);
    Rng a(77);
    Rng b(77);
    AdaptiveRun ra = execute_adaptive(p, phi, a);
    AdaptiveRun rb = execute_adaptive(p, phi, b);
    EXPECT_EQ(ra.measured_angles, rb.measured_angles);
    EXPECT_EQ(to_oracle(ra.output), to_oracle(rb.output));
    const size_t q0[1] = {0};
    StateVector want = apply_matrix(phi, pattern_net_unitary(p), q0);
    for (uint64_t seed = 0; seed < 50; seed++) {
        Rng rng(seed);
        EXPECT_TRUE(equal_up_to_global_phase(execute_adaptive(p, phi, rng).corrected(), want));
    }
}

TEST(execute, rejects_wide_input) {
    Rng rng(1);
    EXPECT_THROW(execute_adaptive(OneWayPattern{{0}}, random_state(2, 1), rng), Error);
    EXPECT_THROW(execute_enumerated(OneWayPattern{{0}}, random_state(2, 1)), Error);
}
