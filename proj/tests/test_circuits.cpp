// Copyright 2026 The qsawtooth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cstring>

#include "dense_oracle.hpp"
#include "qsaw/apply.hpp"
#include "qsaw/circuit_builder.hpp"
#include "qsaw/exact_engine.hpp"

using namespace qsaw;
using testing::random_register;

namespace {

double max_matrix_diff(const std::vector<std::vector<cplx>>& cols_a,
                       const std::vector<std::vector<cplx>>& cols_b) {
    double worst = 0.0;
    for (std::size_t c = 0; c < cols_a.size(); ++c)
        for (std::size_t r = 0; r < cols_a.size(); ++r)
            worst = std::max(worst, std::abs(cols_a[c][r] - cols_b[c][r]));
    return worst;
}

/// columns of the oracle DFT
std::vector<std::vector<cplx>> dft_columns(int n_q) {
    const auto q = testing::dense_dft(n_q);
    const std::size_t n = q.size();
    std::vector<std::vector<cplx>> cols(n, std::vector<cplx>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) cols[c][r] = q[r][c];
    return cols;
}

} // namespace

TEST_CASE("single-qubit QFT is the 2x2 transform", "[circuit]") {
    const auto qft = build_qft(1, QftDirection::forward);
    REQUIRE(qft.counts().total() == 1);
    REQUIRE(max_matrix_diff(dense_unitary(qft), dft_columns(1)) < 1e-15);
}

TEST_CASE("three-qubit QFT equals the dense transform matrix", "[circuit]") {
    const auto qft = build_qft(3, QftDirection::forward);
    const auto counts = qft.counts();
    REQUIRE(counts.hadamard == 3);
    REQUIRE(counts.controlled_phase == 3);
    REQUIRE(max_matrix_diff(dense_unitary(qft), dft_columns(3)) < 1e-12);
}

TEST_CASE("QFT gate count follows n_q + n_q(n_q-1)/2", "[circuit]") {
    for (int n_q : {1, 2, 4, 8, 12, 16}) {
        const auto counts = build_qft(n_q, QftDirection::forward).counts();
        const std::size_t n = static_cast<std::size_t>(n_q);
        REQUIRE(counts.total() == n + n * (n - 1) / 2);
    }
    REQUIRE(build_qft(4, QftDirection::forward).counts().total() == 10);
}

TEST_CASE("backward QFT is the exact adjoint", "[circuit]") {
    for (int n_q : {1, 2, 3, 4}) {
        const auto fwd = dense_unitary(build_qft(n_q, QftDirection::forward));
        const auto bwd = dense_unitary(build_qft(n_q, QftDirection::backward));
        const std::size_t n = fwd.size();
        double worst = 0.0;
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r)
                worst = std::max(worst, std::abs(bwd[c][r] - std::conj(fwd[r][c])));
        REQUIRE(worst < 1e-12);
    }
}

TEST_CASE("zero-strength quadratic phase is the identity", "[circuit]") {
    const auto c = build_quadratic_phase(3, 0.0, 4);
    for (const auto& g : c.gates) REQUIRE(g.angle == 0.0);
    const auto u = dense_unitary(c);
    for (std::size_t col = 0; col < u.size(); ++col)
        for (std::size_t row = 0; row < u.size(); ++row) {
            const cplx want = row == col ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            REQUIRE(std::abs(u[col][row] - want) < 1e-15);
        }
}

TEST_CASE("quadratic phase reproduces exp(i a x^2) exactly", "[circuit]") {
    const double a = std::numbers::pi / 8.0;
    const auto u = dense_unitary(build_quadratic_phase(2, a, 0));
    for (std::size_t x = 0; x < 4; ++x) {
        const auto want = std::polar(1.0, a * static_cast<double>(x * x));
        REQUIRE(std::abs(u[x][x] - want) < 1e-14);
        for (std::size_t r = 0; r < 4; ++r)
            if (r != x) REQUIRE(std::abs(u[x][r]) < 1e-15);
    }
}

TEST_CASE("quadratic phase honors the basis shift", "[circuit]") {
    const double a = 0.3;
    const std::int64_t shift = 4;
    const auto u = dense_unitary(build_quadratic_phase(3, a, shift));
    for (std::size_t x = 0; x < 8; ++x) {
        const double d = static_cast<double>(x) - static_cast<double>(shift);
        const auto want = std::polar(1.0, a * d * d);
        REQUIRE(std::abs(u[x][x] - want) < 1e-13);
    }
}

TEST_CASE("quadratic phase stage emits the documented gate tally", "[circuit]") {
    for (int n_q : {1, 3, 7}) {
        const auto counts = build_quadratic_phase(n_q, 0.1, 0).counts();
        const std::size_t n = static_cast<std::size_t>(n_q);
        REQUIRE(counts.phase == n);
        REQUIRE(counts.controlled_phase == n * (n - 1) / 2);
        REQUIRE(counts.global_phase == 1);
        REQUIRE(counts.total() <= n * n); // inside the nominal n_q^2 budget
    }
}

TEST_CASE("map circuit counts stay within the per-iteration budget", "[circuit]") {
    for (int n_q = 1; n_q <= 16; ++n_q) {
        const auto params = SawtoothParams::make(n_q, -0.1, 0);
        const auto counts = build_map_circuit(params).counts();
        const std::size_t n = static_cast<std::size_t>(n_q);
        REQUIRE(counts.total() == 2 * n * n + 2 * n);
        REQUIRE(counts.total() <= paper_convention_gate_count(n_q));
        REQUIRE(counts.global_phase == 2);
    }
    // nominal stage tally: two diagonal stages at n_q^2 plus the two QFTs
    for (int n_q = 1; n_q <= 16; ++n_q) {
        const std::size_t n = static_cast<std::size_t>(n_q);
        const std::size_t qft = n + n * (n - 1) / 2;
        const std::size_t qft_back = n + n * (n + 1) / 2 - n; // n(n+1)/2 two-qubit+H
        REQUIRE(2 * n * n + qft + qft_back == paper_convention_gate_count(n_q));
    }
}

TEST_CASE("map circuit matches the exact engine as a dense matrix", "[circuit]") {
    const auto params = SawtoothParams::make(2, -0.1, 0);
    const auto circuit_u = dense_unitary(build_map_circuit(params));
    ExactEngine engine(params);
    for (std::size_t colmn = 0; colmn < 4; ++colmn) {
        QuantumRegister reg(2, Basis::momentum);
        reg.amp[colmn] = cplx{1.0, 0.0};
        engine.step(reg);
        for (std::size_t r = 0; r < 4; ++r)
            REQUIRE(std::abs(circuit_u[colmn][r] - reg.amp[r]) < 1e-12);
    }
}

TEST_CASE("K = 0 map circuit collapses to the rotation diagonal", "[circuit]") {
    const auto params = SawtoothParams::make(3, 0.0, 0);
    const auto u = dense_unitary(build_map_circuit(params));
    for (std::size_t m = 0; m < 8; ++m) {
        const double n = static_cast<double>(m) - 4.0;
        const auto want = std::polar(1.0, -0.5 * params.T * n * n);
        REQUIRE(std::abs(u[m][m] - want) < 1e-12);
        for (std::size_t r = 0; r < 8; ++r)
            if (r != m) REQUIRE(std::abs(u[m][r]) < 1e-12);
    }
}

TEST_CASE("circuit evolution tracks the exact engine over many iterations", "[circuit]") {
    for (int n_q : {1, 2, 3, 4, 5, 6}) {
        const auto params = SawtoothParams::make_default(n_q, -0.1);
        const auto circuit = build_map_circuit(params);
        ExactEngine engine(params);
        auto a = init_momentum_eigenstate(params);
        auto b = a;
        for (int t = 0; t < 10; ++t) {
            apply_circuit(a, circuit);
            engine.step(b);
        }
        REQUIRE(std::norm(inner_product(a, b)) > 1.0 - 1e-11);
    }
}

TEST_CASE("hadamard squares to the identity", "[apply]") {
    auto reg = random_register(5, 17);
    const auto original = reg.amp;
    apply_gate(reg, Gate::hadamard(2));
    apply_gate(reg, Gate::hadamard(2));
    for (std::size_t i = 0; i < reg.size(); ++i)
        REQUIRE(std::abs(reg.amp[i] - original[i]) < 1e-14);
}

TEST_CASE("controlled phase multiplies only the |11> block", "[apply]") {
    QuantumRegister reg(2, Basis::momentum);
    reg.amp = {cplx{0.5, 0}, cplx{0.5, 0}, cplx{0.5, 0}, cplx{0.5, 0}};
    apply_gate(reg, Gate::controlled_phase(0, 1, 0.7));
    REQUIRE(reg.amp[0] == cplx{0.5, 0.0});
    REQUIRE(reg.amp[1] == cplx{0.5, 0.0});
    REQUIRE(reg.amp[2] == cplx{0.5, 0.0});
    REQUIRE(std::abs(reg.amp[3] - 0.5 * std::polar(1.0, 0.7)) < 1e-16);
    // symmetric in its operands
    QuantumRegister reg2(2, Basis::momentum);
    reg2.amp = reg.amp;
    apply_gate(reg2, Gate::controlled_phase(1, 0, -0.7));
    REQUIRE(std::abs(reg2.amp[3] - cplx{0.5, 0.0}) < 1e-15);
}

TEST_CASE("gate application rejects out-of-range qubits", "[apply]") {
    auto reg = random_register(3, 2);
    REQUIRE_THROWS_AS(apply_gate(reg, Gate::hadamard(3)), std::out_of_range);
    REQUIRE_THROWS_AS(apply_gate(reg, Gate::swap(0, 5)), std::out_of_range);
    REQUIRE_THROWS_AS(apply_gate(reg, Gate::controlled_phase(-1, 1, 0.1)), std::out_of_range);
}

TEST_CASE("norm survives ten thousand random gates", "[apply]") {
    auto reg = random_register(6, 77);
    auto gen = rng::SplitMix64::stream(78, 0);
    for (int i = 0; i < 10000; ++i) {
        const int q1 = static_cast<int>(gen.next_u64() % 6);
        int q2 = static_cast<int>(gen.next_u64() % 6);
        if (q2 == q1) q2 = (q2 + 1) % 6;
        switch (gen.next_u64() % 4) {
            case 0: apply_gate(reg, Gate::hadamard(q1)); break;
            case 1: apply_gate(reg, Gate::phase(q1, gen.uniform(-3.0, 3.0))); break;
            case 2: apply_gate(reg, Gate::controlled_phase(q1, q2, gen.uniform(-3.0, 3.0))); break;
            case 3: apply_gate(reg, Gate::swap(q1, q2)); break;
        }
    }
    REQUIRE(std::abs(norm(reg) - 1.0) < 1e-12);
}

TEST_CASE("compensation rotation acts as the identity after cancellation", "[apply]") {
    auto reg = random_register(4, 5);
    const auto original = reg.amp;
    apply_gate(reg, Gate::compensation(1));
    REQUIRE(reg.amp == original);
}

TEST_CASE("circuit dumps round-trip bit-exactly", "[circuit]") {
    const auto params = SawtoothParams::make_default(3, -0.1);
    const auto circuit = build_map_circuit(params);
    const auto parsed = parse_circuit(dump_circuit(circuit), 3);
    REQUIRE(parsed.gates.size() == circuit.gates.size());
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        REQUIRE(parsed.gates[i].kind == circuit.gates[i].kind);
        REQUIRE(parsed.gates[i].q1 == circuit.gates[i].q1);
        REQUIRE(parsed.gates[i].q2 == circuit.gates[i].q2);
        REQUIRE(std::memcmp(&parsed.gates[i].angle, &circuit.gates[i].angle,
                            sizeof(double)) == 0);
    }
    REQUIRE(parsed.bit_reversed_output == circuit.bit_reversed_output);

    const auto qft = build_qft(3, QftDirection::forward);
    const auto qft_parsed = parse_circuit(dump_circuit(qft), 3);
    REQUIRE(qft_parsed.bit_reversed_output);
}
