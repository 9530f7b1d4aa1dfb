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

#include "dense_oracle.hpp"
#include "qsaw/analysis.hpp"
#include "qsaw/apply.hpp"
#include "qsaw/circuit_builder.hpp"
#include "qsaw/routing.hpp"

using namespace qsaw;
using testing::random_register;

TEST_CASE("near-square layouts are chosen as documented", "[lattice]") {
    struct Want {
        int n_q, rows, cols;
    };
    for (const auto& w : std::initializer_list<Want>{{1, 1, 1},
                                                     {2, 1, 2},
                                                     {4, 2, 2},
                                                     {5, 2, 3},
                                                     {6, 2, 3},
                                                     {7, 3, 3},
                                                     {9, 3, 3},
                                                     {10, 3, 4},
                                                     {12, 3, 4},
                                                     {16, 4, 4},
                                                     {25, 5, 5}}) {
        const auto layout = choose_layout(w.n_q);
        CAPTURE(w.n_q);
        REQUIRE(layout.rows == w.rows);
        REQUIRE(layout.cols == w.cols);
    }
}

TEST_CASE("a full 3x3 lattice carries twelve coupling edges", "[lattice]") {
    REQUIRE(LatticeLayout(3, 3, 9).edges().size() == 12);
    REQUIRE(LatticeLayout(2, 3, 6).edges().size() == 7);
}

TEST_CASE("adjacent operands route with zero swaps", "[routing]") {
    Circuit c;
    c.n_q = 2;
    c.gates.push_back(Gate::controlled_phase(0, 1, 0.4));
    const auto routed = route(c, LatticeLayout(1, 2, 2));
    REQUIRE(routed.report.swaps_added == 0);
    REQUIRE(routed.circuit.gates == c.gates);
}

TEST_CASE("corner-to-corner gates on 3x3 cost six swaps", "[routing]") {
    Circuit c;
    c.n_q = 9;
    c.gates.push_back(Gate::controlled_phase(0, 8, 1.1));
    const auto routed = route(c, LatticeLayout(3, 3, 9));
    REQUIRE(routed.report.swaps_added == 6);
    // unitary is untouched by the swap sandwich
    auto a = random_register(9, 4);
    auto b = a;
    apply_circuit(a, c);
    apply_circuit(b, routed.circuit);
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(std::abs(a.amp[i] - b.amp[i]) < 1e-12);
}

TEST_CASE("routing preserves the dense unitary of the map circuit", "[routing]") {
    for (int n_q : {4, 5, 6}) {
        const auto params = SawtoothParams::make_default(n_q, -0.1);
        const auto circuit = build_map_circuit(params);
        const auto routed = route(circuit, choose_layout(n_q));
        const auto u = dense_unitary(circuit);
        const auto v = dense_unitary(routed.circuit);
        double worst = 0.0;
        for (std::size_t c = 0; c < u.size(); ++c)
            for (std::size_t r = 0; r < u.size(); ++r)
                worst = std::max(worst, std::abs(u[c][r] - v[c][r]));
        CAPTURE(n_q);
        REQUIRE(worst < 1e-12);
    }
}

TEST_CASE("hops through empty sites emit no gates but keep the unitary", "[routing]") {
    // 2x3 layout with five qubits: the site (1,2) is empty, so routing the
    // pair (q3 at (1,0), q2 at (0,2)) crosses it and saves a swap pair.
    Circuit c;
    c.n_q = 5;
    c.gates.push_back(Gate::controlled_phase(3, 2, 0.9));
    const auto routed = route(c, LatticeLayout(2, 3, 5));
    REQUIRE(routed.report.swaps_added == 2);

    auto a = random_register(5, 12);
    auto b = a;
    apply_circuit(a, c);
    apply_circuit(b, routed.circuit);
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(std::abs(a.amp[i] - b.amp[i]) < 1e-12);
}

TEST_CASE("routed map circuit at n_q = 9 lands near the expected budget", "[routing]") {
    const auto params = SawtoothParams::make_default(9, -0.1);
    const auto routed = route(build_map_circuit(params), LatticeLayout(3, 3, 9));
    const auto counts = routed.circuit.counts();
    REQUIRE(counts.swap == 288);
    REQUIRE(counts.controlled_phase == 144);
    REQUIRE(counts.hadamard + counts.phase == 36);
    REQUIRE(counts.total() == 468);
    REQUIRE(counts.total() >= 252);
    REQUIRE(counts.total() <= 550);
}

TEST_CASE("swap chains follow 2(d - 1) and operand distance scales as sqrt(n_q)",
          "[routing]") {
    std::vector<std::pair<double, double>> distance_points;
    for (int n_q : {4, 9, 16, 25}) {
        const auto params = SawtoothParams::make(n_q, -0.1, 0);
        const auto routed = route(build_map_circuit(params), choose_layout(n_q));
        // full squares: every chain is swaps on both sides, no empty hops
        REQUIRE(routed.report.swaps_added ==
                2 * (routed.report.distance_sum - routed.report.two_qubit_gates));
        distance_points.emplace_back(static_cast<double>(n_q),
                                     routed.report.mean_operand_distance());
    }
    // mean operand distance on an L x L lattice is 2L/3, a pure square-root
    // law in n_q; the swap count is an affine function of it (above), so
    // this pins the O(sqrt(n_q)) routing overhead without the -2 offset
    // that dominates small lattices.
    const auto fit = scaling_exponent(distance_points);
    REQUIRE(fit.slope == Catch::Approx(0.5).margin(0.15));
}

TEST_CASE("routing rejects undersized layouts", "[routing]") {
    Circuit c;
    c.n_q = 5;
    REQUIRE_THROWS_AS(route(c, LatticeLayout(2, 2, 4)), std::invalid_argument);
}
