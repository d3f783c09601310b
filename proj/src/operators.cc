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

#include <cmath>
#include <cstdio>
#include <numbers>

#include "mbqc/error.h"

namespace mbqc {

namespace {

constexpr Complex kI{0, 1};

Matrix letter_matrix(char letter) {
    switch (letter) {
        case 'I':
            return Matrix::identity(2);
        case 'X':
            return Matrix(2, {0, 1, 1, 0});
        case 'Y':
            return Matrix(2, {0, -kI, kI, 0});
        case 'Z':
            return Matrix(2, {1, 0, 0, -1});
        default:
            fail(ErrorCode::InvalidArgument, std::string("not a Pauli letter: ") + letter);
    }
}

// a * b = i^phase * letter
struct LetterProduct {
    char letter;
    int phase;
};

LetterProduct multiply_letters(char a, char b) {
    if (a == 'I') {
        return {b, 0};
    }
    if (b == 'I') {
        return {a, 0};
    }
    if (a == b) {
        return {'I', 0};
    }
    // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
    static constexpr char cycle[3] = {'X', 'Y', 'Z'};
    int ia = a == 'X' ? 0 : a == 'Y' ? 1 : 2;
    int ib = b == 'X' ? 0 : b == 'Y' ? 1 : 2;
    char third = cycle[3 - ia - ib];
    bool forward = (ia + 1) % 3 == ib;
    return {third, forward ? 1 : 3};
}

std::string format_angle(double angle) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", angle);
    return buf;
}

}  // namespace

double wrap_angle(double angle) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(angle, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    if (r >= two_pi) {
        r -= two_pi;
    }
    // Adding +0.0 turns -0.0 into 0.0.
    return r + 0.0;
}

namespace gates {

LocalUnitary I() {
    return LocalUnitary(Matrix::identity(2));
}
LocalUnitary X() {
    return LocalUnitary(letter_matrix('X'));
}
LocalUnitary Y() {
    return LocalUnitary(letter_matrix('Y'));
}
LocalUnitary Z() {
    return LocalUnitary(letter_matrix('Z'));
}
LocalUnitary H() {
    const double r = 1 / std::sqrt(2.0);
    return LocalUnitary(Matrix(2, {r, r, r, -r}));
}
LocalUnitary S() {
    return LocalUnitary(Matrix(2, {1, 0, 0, kI}));
}
LocalUnitary S_dag() {
    return LocalUnitary(Matrix(2, {1, 0, 0, -kI}));
}
LocalUnitary T() {
    return rz(std::numbers::pi / 4);
}
LocalUnitary T_dag() {
    return rz(-std::numbers::pi / 4);
}
LocalUnitary rz(double phi) {
    return LocalUnitary(Matrix(2, {1, 0, 0, std::polar(1.0, phi)}));
}
LocalUnitary cnot() {
    return LocalUnitary(Matrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
}
LocalUnitary cz() {
    return LocalUnitary(Matrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}));
}

std::optional<LocalUnitary> by_name(std::string_view name) {
    if (name == "I") return I();
    if (name == "X") return X();
    if (name == "Y") return Y();
    if (name == "Z") return Z();
    if (name == "H") return H();
    if (name == "S") return S();
    if (name == "Sdg" || name == "S†") return S_dag();
    if (name == "T") return T();
    if (name == "Tdg" || name == "T†") return T_dag();
    return std::nullopt;
}

std::string identify(const Matrix &m, double tol) {
    if (m.dim() == 2) {
        const std::pair<const char *, LocalUnitary> known[] = {
            {"I", I()}, {"X", X()}, {"Y", Y()}, {"Z", Z()}, {"H", H()},
            {"S", S()}, {"S†", S_dag()}, {"T", T()}, {"T†", T_dag()},
        };
        for (const auto &[name, u] : known) {
            if (equal_up_to_phase(m, u.matrix(), tol)) {
                return name;
            }
        }
    } else if (m.dim() == 4) {
        if (equal_up_to_phase(m, Matrix::identity(4), tol)) {
            return "I⊗I";
        }
        if (equal_up_to_phase(m, cnot().matrix(), tol)) {
            return "CNot";
        }
        if (equal_up_to_phase(m, cz().matrix(), tol)) {
            return "C_Z";
        }
    }
    return "U";
}

}  // namespace gates

PauliString::PauliString(std::string letters, int phase_power)
    : letters_(std::move(letters)), phase_power_(((phase_power % 4) + 4) % 4) {
    for (char c : letters_) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            fail(ErrorCode::InvalidArgument, std::string("not a Pauli letter: ") + c);
        }
    }
}

PauliString PauliString::identity(size_t num_qubits) {
    return PauliString(std::string(num_qubits, 'I'));
}

PauliString PauliString::from_str(std::string_view text) {
    int power = 0;
    if (text.starts_with("+i")) {
        power = 1;
        text.remove_prefix(2);
    } else if (text.starts_with("-i")) {
        power = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("i")) {
        power = 1;
        text.remove_prefix(1);
    } else if (text.starts_with("+")) {
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        power = 2;
        text.remove_prefix(1);
    }
    return PauliString(std::string(text), power);
}

std::optional<PauliString> PauliString::from_matrix(const Matrix &m, double tol) {
    size_t n = qubit_count_for_dim(m.dim());
    std::string letters(n, 'I');
    size_t total = size_t{1} << (2 * n);
    static constexpr char order[4] = {'I', 'X', 'Y', 'Z'};
    for (size_t code = 0; code < total; code++) {
        for (size_t q = 0; q < n; q++) {
            letters[q] = order[(code >> (2 * (n - 1 - q))) & 3];
        }
        PauliString candidate(letters);
        Matrix p = candidate.matrix();
        // P is Hermitian and unitary, so tr(P m)/dim is the coefficient of P in m.
        Complex coeff = 0;
        for (size_t r = 0; r < m.dim(); r++) {
            for (size_t c = 0; c < m.dim(); c++) {
                coeff += std::conj(p(r, c)) * m(r, c);
            }
        }
        coeff /= static_cast<double>(m.dim());
        if (std::abs(std::abs(coeff) - 1) > tol) {
            continue;
        }
        for (int power = 0; power < 4; power++) {
            Complex phase = std::pow(kI, power);
            if (std::abs(coeff - phase) <= tol && m.max_abs_diff(p * phase) <= tol) {
                return PauliString(letters, power);
            }
        }
    }
    return std::nullopt;
}

Complex PauliString::phase() const {
    static constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_power_];
}

std::string PauliString::phase_str() const {
    static constexpr const char *table[4] = {"+1", "+i", "-1", "-i"};
    return table[phase_power_];
}

std::string PauliString::str() const {
    static constexpr const char *table[4] = {"+", "+i", "-", "-i"};
    return table[phase_power_] + letters_;
}

bool PauliString::has_x(size_t q) const {
    return letters_.at(q) == 'X' || letters_.at(q) == 'Y';
}

bool PauliString::has_z(size_t q) const {
    return letters_.at(q) == 'Z' || letters_.at(q) == 'Y';
}

bool PauliString::is_identity_up_to_phase() const {
    return letters_.find_first_not_of('I') == std::string::npos;
}

PauliString PauliString::operator*(const PauliString &other) const {
    if (letters_.size() != other.letters_.size()) {
        fail(ErrorCode::DimensionMismatch, "multiplying Pauli strings of different lengths");
    }
    std::string letters(letters_.size(), 'I');
    int power = phase_power_ + other.phase_power_;
    for (size_t q = 0; q < letters_.size(); q++) {
        auto prod = multiply_letters(letters_[q], other.letters_[q]);
        letters[q] = prod.letter;
        power += prod.phase;
    }
    return PauliString(std::move(letters), power);
}

PauliString PauliString::inverse() const {
    return PauliString(letters_, 4 - phase_power_);
}

Matrix PauliString::matrix() const {
    if (letters_.empty()) {
        fail(ErrorCode::InvalidArgument, "empty Pauli string has no matrix");
    }
    Matrix out = letter_matrix(letters_[0]);
    for (size_t q = 1; q < letters_.size(); q++) {
        out = out.kron(letter_matrix(letters_[q]));
    }
    return out * phase();
}

StateVector PauliString::apply(const StateVector &state) const {
    std::vector<size_t> targets(letters_.size());
    for (size_t q = 0; q < targets.size(); q++) {
        targets[q] = q;
    }
    return apply(state, targets);
}

StateVector PauliString::apply(const StateVector &state, std::span<const size_t> targets) const {
    if (targets.size() != letters_.size()) {
        fail(ErrorCode::DimensionMismatch, "Pauli string length does not match target count");
    }
    StateVector out = state;
    for (size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] != 'I') {
            size_t t = targets[q];
            out = apply_matrix(out, letter_matrix(letters_[q]), std::span<const size_t>(&t, 1));
        }
    }
    return out.scaled(phase());
}

PauliString pauli_multiply(const PauliString &p, const PauliString &q) {
    return p * q;
}

namespace {

Matrix o_matrix(double theta) {
    return Matrix(2, {0, std::polar(1.0, -theta), std::polar(1.0, theta), 0});
}

}  // namespace

std::optional<double> o_angle(const Matrix &m, double tol) {
    if (m.dim() != 2 || std::abs(m(0, 0)) > tol || std::abs(m(1, 1)) > tol) {
        return std::nullopt;
    }
    if (std::abs(std::abs(m(1, 0)) - 1) > tol) {
        return std::nullopt;
    }
    double theta = wrap_angle(std::arg(m(1, 0)));
    if (m.max_abs_diff(o_matrix(theta)) > tol) {
        return std::nullopt;
    }
    return theta;
}

std::string describe_observable(const Matrix &m, double tol) {
    if (m.dim() == 2 || m.dim() == 4) {
        size_t n = m.dim() == 2 ? 1 : 2;
        for (int sign = 0; sign < 2; sign++) {
            Matrix probe = sign == 0 ? m : m * Complex{-1};
            if (auto p = PauliString::from_matrix(probe, tol); p && p->phase_power() == 0) {
                std::string label = sign == 0 ? "" : "-";
                for (size_t q = 0; q < n; q++) {
                    if (q > 0) {
                        label += "⊗";
                    }
                    label += p->letters()[q];
                }
                return label;
            }
        }
    }
    if (auto theta = o_angle(m, tol)) {
        return "O(" + format_angle(*theta) + ")";
    }
    if (m.dim() == 2) {
        // Bloch direction of a general one-qubit observable n.sigma.
        return "n(" + format_angle(m(1, 0).real()) + "," + format_angle(m(1, 0).imag()) + "," +
               format_angle(m(0, 0).real()) + ")";
    }
    if (m.dim() == 4) {
        // Tensor products of one-qubit observables: try splitting off O(theta) factors.
        static constexpr char letters[3] = {'X', 'Y', 'Z'};
        for (char right : letters) {
            Matrix r = letter_matrix(right);
            // Left factor L with m = L (x) r: L(a,b) = m(2a+i, 2b+j) / r(i,j) for any nonzero r(i,j).
            size_t ri = 0, rj = 0;
            for (size_t i = 0; i < 2; i++) {
                for (size_t j = 0; j < 2; j++) {
                    if (std::abs(r(i, j)) > 0.5) {
                        ri = i;
                        rj = j;
                    }
                }
            }
            Matrix left(2);
            for (size_t a = 0; a < 2; a++) {
                for (size_t b = 0; b < 2; b++) {
                    left(a, b) = m(2 * a + ri, 2 * b + rj) / r(ri, rj);
                }
            }
            if (left.kron(r).max_abs_diff(m) <= tol && left.is_hermitian(tol) && left.is_involution(tol)) {
                return describe_observable(left, tol) + "⊗" + right;
            }
        }
    }
    return "M";
}

Observable::Observable(Matrix matrix, std::string label)
    : matrix_(std::move(matrix)), label_(std::move(label)), arity_(0) {
    if (matrix_.dim() != 2 && matrix_.dim() != 4) {
        fail(ErrorCode::DimensionMismatch, "observables act on 1 or 2 qubits");
    }
    if (!matrix_.is_hermitian()) {
        fail(ErrorCode::NotHermitian, "observable is not Hermitian");
    }
    if (!matrix_.is_involution()) {
        fail(ErrorCode::InvalidArgument, "observable must square to the identity");
    }
    arity_ = matrix_.dim() == 2 ? 1 : 2;
}

Observable::Observable(Matrix matrix) : Observable(matrix, describe_observable(matrix)) {
}

Observable Observable::pauli(std::string_view letters) {
    if (letters.size() != 1 && letters.size() != 2) {
        fail(ErrorCode::InvalidArgument, "observables act on 1 or 2 qubits");
    }
    std::string label;
    for (size_t k = 0; k < letters.size(); k++) {
        if (k > 0) {
            label += "⊗";
        }
        label += letters[k];
    }
    return Observable(PauliString(std::string(letters)).matrix(), label);
}

Observable observable_o(double theta) {
    return Observable(o_matrix(wrap_angle(theta)));
}

Observable conjugate_observable(const LocalUnitary &v, const Observable &o) {
    if (v.arity() != o.arity()) {
        fail(ErrorCode::DimensionMismatch, "unitary and observable act on different qubit counts");
    }
    return Observable(v.matrix().adjoint() * o.matrix() * v.matrix());
}

GateDescriptor GateDescriptor::h() {
    return {GateKind::H, 0, 0, std::nullopt};
}
GateDescriptor GateDescriptor::rz(double angle) {
    return {GateKind::Rz, angle, 0, std::nullopt};
}
GateDescriptor GateDescriptor::cnot() {
    return {GateKind::CNot, 0, 0, std::nullopt};
}
GateDescriptor GateDescriptor::cz() {
    return {GateKind::CZ, 0, 0, std::nullopt};
}

size_t GateDescriptor::arity() const {
    switch (kind) {
        case GateKind::H:
        case GateKind::Rz:
            return 1;
        case GateKind::CNot:
        case GateKind::CZ:
            return 2;
        case GateKind::Custom:
            return custom ? qubit_count_for_dim(custom->dim()) : 0;
    }
    return 0;
}

Matrix GateDescriptor::matrix() const {
    Matrix base;
    switch (kind) {
        case GateKind::H:
            base = gates::H().matrix();
            break;
        case GateKind::Rz:
            base = gates::rz(angle).matrix();
            break;
        case GateKind::CNot:
            base = gates::cnot().matrix();
            break;
        case GateKind::CZ:
            base = gates::cz().matrix();
            break;
        case GateKind::Custom:
            if (!custom) {
                fail(ErrorCode::InvalidArgument, "custom gate without a matrix");
            }
            base = *custom;
            break;
    }
    return base * std::polar(1.0, global_phase);
}

PushThroughResult push_through(const PauliString &sigma, const GateDescriptor &gate) {
    if (gate.kind == GateKind::Custom) {
        fail(ErrorCode::UnsupportedGate, "push_through supports H, R_z, CNot and C_Z only");
    }
    if (sigma.num_qubits() != gate.arity()) {
        fail(ErrorCode::DimensionMismatch, "Pauli string and gate act on different qubit counts");
    }
    if (gate.kind == GateKind::Rz) {
        if (!sigma.has_x(0)) {
            return {sigma, gate};
        }
        // R_z(phi) X = e^{i phi} X R_z(-phi); Y behaves the same way.
        GateDescriptor adjusted = gate;
        adjusted.angle = -gate.angle;
        adjusted.global_phase = gate.global_phase + gate.angle;
        return {sigma, adjusted};
    }
    // Clifford gates: sigma' = g sigma g^dagger, gate unchanged.
    Matrix g = gate.matrix();
    auto conjugated = PauliString::from_matrix(g * sigma.matrix() * g.adjoint());
    if (!conjugated) {
        fail(ErrorCode::UnsupportedGate, "gate does not normalize the Pauli group");
    }
    return {*conjugated, gate};
}

}  // namespace mbqc
