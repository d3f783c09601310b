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

#include "mbqc/operators.h"

#include <gtest/gtest.h>

#include <numbers>

#include "bridge.h"
#include "mbqc/error.h"

using namespace mbqc;

namespace {

constexpr double kPi = std::numbers::pi;

double diff(const Matrix &a, const oracle::Mat &b) {
    return oracle::max_diff(to_oracle(a), b);
}

}  // namespace

TEST(gates, matrices_match_reference) {
    EXPECT_LT(diff(gates::X().matrix(), oracle::X()), 1e-15);
    EXPECT_LT(diff(gates::Y().matrix(), oracle::Y()), 1e-15);
    EXPECT_LT(diff(gates::Z().matrix(), oracle::Z()), 1e-15);
    EXPECT_LT(diff(gates::H().matrix(), oracle::H()), 1e-15);
    EXPECT_LT(diff(gates::S().matrix(), oracle::Rz(kPi / 2)), 1e-15);
    EXPECT_LT(diff(gates::T().matrix(), oracle::Rz(kPi / 4)), 1e-15);
    EXPECT_LT(diff(gates::T_dag().matrix(), oracle::Rz(-kPi / 4)), 1e-15);
    EXPECT_LT(diff(gates::cz().matrix(), oracle::CZ()), 1e-15);
    EXPECT_LT(diff(gates::cnot().matrix(), oracle::CNOT()), 1e-15);
    for (double phi : {0.0, 0.3, 1.7, -2.2}) {
        EXPECT_LT(diff(gates::rz(phi).matrix(), oracle::Rz(phi)), 1e-15);
    }
}

TEST(gates, by_name_and_identify) {
    for (const char *name : {"I", "X", "Y", "Z", "H", "S", "T"}) {
        auto u = gates::by_name(name);
        ASSERT_TRUE(u.has_value()) << name;
        EXPECT_EQ(gates::identify(u->matrix()), name);
    }
    EXPECT_EQ(gates::identify(gates::by_name("Sdg")->matrix()), "S†");
    EXPECT_EQ(gates::identify(gates::by_name("Tdg")->matrix()), "T†");
    EXPECT_EQ(gates::identify(gates::H().matrix() * Complex(0, 1)), "H");
    EXPECT_EQ(gates::identify(gates::cnot().matrix()), "CNot");
    EXPECT_EQ(gates::identify(gates::cz().matrix()), "C_Z");
    EXPECT_EQ(gates::identify(gates::rz(0.3).matrix()), "U");
    EXPECT_FALSE(gates::by_name("Q").has_value());
}

TEST(gates, conjugation_identities) {
    // R_z(phi)^dagger X R_z(phi) = O(-phi).
    for (double phi : {0.1, 0.9, 2.5, 4.0}) {
        Matrix rz = gates::rz(phi).matrix();
        Matrix x = gates::X().matrix();
        EXPECT_LT(diff(rz.adjoint() * x * rz, oracle::O(-phi)), 1e-12);
    }
    // T^dagger X T = (X - Y) / sqrt 2.
    Matrix t = gates::T().matrix();
    auto x_minus_y = oracle::scaled(oracle::add(oracle::X(), oracle::Y(), -1.0), 1 / std::sqrt(2.0));
    EXPECT_LT(diff(t.adjoint() * gates::X().matrix() * t, x_minus_y), 1e-12);
}

TEST(pauli_string, parse_and_print) {
    PauliString p = PauliString::from_str("-iXZ");
    EXPECT_EQ(p.letters(), "XZ");
    EXPECT_EQ(p.phase(), Complex(0, -1));
    EXPECT_EQ(p.str(), "-iXZ");
    EXPECT_EQ(PauliString::from_str("+Y").str(), "+Y");
    EXPECT_THROW(PauliString::from_str("XQ"), Error);
}

TEST(pauli_string, product_matches_matrix_product) {
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    for (int a = 0; a < 16; a++) {
        for (int b = 0; b < 16; b++) {
            std::string pa = {letters[a / 4], letters[a % 4]};
            std::string pb = {letters[b / 4], letters[b % 4]};
            PauliString p(pa, a % 4);
            PauliString q(pb, b % 3);
            auto want = oracle::mul(to_oracle(p.matrix()), to_oracle(q.matrix()));
            EXPECT_LT(diff((p * q).matrix(), want), 1e-15) << pa << " " << pb;
        }
    }
}

TEST(pauli_string, inverse_and_from_matrix) {
    PauliString p("XYZ", 1);
    EXPECT_TRUE((p * p.inverse()).is_identity_up_to_phase());
    EXPECT_EQ((p * p.inverse()).phase(), Complex(1));
    auto back = PauliString::from_matrix(p.matrix());
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
    EXPECT_FALSE(PauliString::from_matrix(gates::H().matrix()).has_value());
}

TEST(pauli_string, apply_on_targets) {
    StateVector s = random_state(3, 4);
    const size_t targets[2] = {2, 0};
    StateVector got = PauliString("XZ").apply(s, targets);
    auto want = oracle::act(oracle::full(3, {{2, oracle::X()}, {0, oracle::Z()}}), to_oracle(s));
    EXPECT_LT(oracle::max_diff(to_oracle(got), want), 1e-15);
}

TEST(observable, validation) {
    EXPECT_NO_THROW(Observable(gates::X().matrix()));
    EXPECT_THROW(Observable(gates::S().matrix()), Error);
    EXPECT_THROW(Observable(Matrix(2, {1, 0, 0, 1}) * 2.0), Error);
    EXPECT_THROW(Observable(Matrix::identity(8)), Error);
    try {
        Observable(gates::S().matrix());
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

TEST(observable, labels) {
    EXPECT_EQ(Observable::pauli("ZX").label(), "Z⊗X");
    EXPECT_EQ(Observable(gates::Y().matrix()).label(), "Y");
    EXPECT_EQ(Observable(gates::Z().matrix() * -1.0).label(), "-Z");
    EXPECT_EQ(observable_o(0.5).label(), "O(0.5)");
    EXPECT_EQ(observable_o(0).label(), "X");
    EXPECT_EQ(observable_o(kPi / 2).label(), "Y");
    Matrix o_z = observable_o(0.5).matrix().kron(gates::Z().matrix());
    EXPECT_EQ(Observable(o_z).label(), "O(0.5)⊗Z");
}

TEST(observable, o_angle_roundtrip) {
    for (double t : {0.0, 0.4, 3.0, 6.0}) {
        auto back = o_angle(observable_o(t).matrix());
        ASSERT_TRUE(back.has_value());
        EXPECT_NEAR(*back, t, 1e-12);
        EXPECT_LT(diff(observable_o(t).matrix(), oracle::O(t)), 1e-15);
    }
    EXPECT_FALSE(o_angle(gates::Z().matrix()).has_value());
}

TEST(observable, conjugation) {
    Observable o = conjugate_observable(gates::H(), Observable::pauli("X"));
    EXPECT_EQ(o.label(), "Z");
    EXPECT_THROW(conjugate_observable(gates::cz(), Observable::pauli("X")), Error);
}

TEST(push_through, exact_commutation_for_every_pauli) {
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    std::vector<GateDescriptor> one = {GateDescriptor::h()};
    for (double a : {0.0, 0.3, 1.2, 2.9, 5.0}) {
        one.push_back(GateDescriptor::rz(a));
    }
    for (const auto &g : one) {
        for (char c : letters) {
            PauliString sigma(std::string(1, c));
            auto r = push_through(sigma, g);
            // g sigma == sigma' g'
            EXPECT_LT((g.matrix() * sigma.matrix()).max_abs_diff(r.pauli.matrix() * r.gate.matrix()), 1e-12)
                << c << " angle " << g.angle;
        }
    }
    for (const auto &g : {GateDescriptor::cnot(), GateDescriptor::cz()}) {
        for (int k = 0; k < 16; k++) {
            PauliString sigma(std::string{letters[k / 4], letters[k % 4]});
            auto r = push_through(sigma, g);
            EXPECT_LT((g.matrix() * sigma.matrix()).max_abs_diff(r.pauli.matrix() * r.gate.matrix()), 1e-12);
        }
    }
}

TEST(push_through, rz_past_x_flips_angle) {
    auto r = push_through(PauliString("X"), GateDescriptor::rz(0.7));
    EXPECT_EQ(r.pauli.letters(), "X");
    EXPECT_NEAR(r.gate.angle, -0.7, 1e-15);
    auto z = push_through(PauliString("Z"), GateDescriptor::rz(0.7));
    EXPECT_NEAR(z.gate.angle, 0.7, 1e-15);
}

TEST(push_through, custom_gate_is_unsupported) {
    GateDescriptor g;
    g.kind = GateKind::Custom;
    g.custom = gates::T().matrix();
    try {
        push_through(PauliString("X"), g);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedGate);
    }
}

TEST(wrap_angle, range) {
    EXPECT_EQ(wrap_angle(0), 0.0);
    EXPECT_FALSE(std::signbit(wrap_angle(-0.0)));
    EXPECT_NEAR(wrap_angle(-kPi / 2), 3 * kPi / 2, 1e-15);
    EXPECT_NEAR(wrap_angle(7 * kPi), kPi, 1e-12);
    EXPECT_LT(wrap_angle(2 * kPi), 2 * kPi);
}
