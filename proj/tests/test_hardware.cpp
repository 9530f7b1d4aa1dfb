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
#include "qsaw/circuit_builder.hpp"
#include "qsaw/error_model.hpp"
#include "qsaw/experiments.hpp"
#include "qsaw/routing.hpp"

using namespace qsaw;
using testing::random_register;

TEST_CASE("zero widths sample the all-zero realization", "[disorder]") {
    const auto r = sample_static(0.0, 0.0, LatticeLayout(3, 3, 9), 1.0, 5);
    for (double d : r.delta) REQUIRE(d == 0.0);
    REQUIRE(r.couplings.size() == 12);
    for (const auto& c : r.couplings) REQUIRE(c.j == 0.0);
}

TEST_CASE("detunings are uniform on [-delta/2, delta/2]", "[disorder]") {
    const LatticeLayout layout(2, 2, 4);
    double mean = 0.0;
    const int k = 10000;
    for (int i = 0; i < k; ++i) {
        const auto r = sample_static(1.0, 0.0, layout, 1.0, static_cast<std::uint64_t>(i));
        for (double d : r.delta) {
            REQUIRE(d >= -0.5);
            REQUIRE(d <= 0.5);
        }
        mean += r.delta[0];
    }
    REQUIRE(std::abs(mean / k) < 0.02);
}

TEST_CASE("realizations are frozen per seed", "[disorder]") {
    const LatticeLayout layout(3, 3, 9);
    const auto a = sample_static(0.3, 0.3, layout, 1.0, 42);
    const auto b = sample_static(0.3, 0.3, layout, 1.0, 42);
    REQUIRE(a.delta == b.delta);
    for (std::size_t i = 0; i < a.couplings.size(); ++i)
        REQUIRE(a.couplings[i].j == b.couplings[i].j);
}

TEST_CASE("zero disorder evolves as the identity", "[evolution]") {
    const auto r = sample_static(0.0, 0.0, LatticeLayout(2, 2, 4), 1.0, 1);
    auto reg = random_register(4, 3);
    const auto original = reg.amp;
    free_evolution_step(reg, r, 1.0);
    for (std::size_t i = 0; i < reg.size(); ++i)
        REQUIRE(std::abs(reg.amp[i] - original[i]) < 1e-15);
}

TEST_CASE("pure detuning evolution matches the closed form", "[evolution]") {
    const LatticeLayout layout(2, 2, 4);
    const auto r = sample_static(0.8, 0.0, layout, 1.0, 9);
    const double tau = 0.37;
    auto reg = random_register(4, 10);
    auto want = reg.amp;
    for (std::size_t b = 0; b < want.size(); ++b) {
        double phase = 0.0;
        for (int q = 0; q < 4; ++q)
            phase += r.delta[static_cast<std::size_t>(q)] * ((b >> q) & 1 ? -1.0 : 1.0);
        want[b] *= std::polar(1.0, -phase * tau);
    }
    free_evolution_step(reg, r, tau);
    for (std::size_t i = 0; i < reg.size(); ++i)
        REQUIRE(std::abs(reg.amp[i] - want[i]) < 1e-14);
}

TEST_CASE("split evolution tracks the dense exponential", "[evolution]") {
    const auto layout = choose_layout(4);
    auto r = sample_static(1.0, 1.0, layout, 1.0, 17);
    const double tau = 1e-3; // delta*tau = J*tau = 1e-3 scale
    const auto h = testing::dense_hamiltonian(r, 4);
    const auto u = testing::dense_expm(h, tau);
    auto reg = random_register(4, 21);
    const auto exact = u * testing::to_eigen(reg);
    free_evolution_step(reg, r, tau);
    double err = 0.0;
    for (std::size_t i = 0; i < reg.size(); ++i)
        err = std::max(err, std::abs(reg.amp[i] - exact(static_cast<Eigen::Index>(i))));
    REQUIRE(err < 1e-8);
}

TEST_CASE("splitting error drops fourfold per halved substep", "[evolution]") {
    const auto layout = choose_layout(4);
    const auto r = sample_static(1.0, 1.0, layout, 1.0, 23);
    const double tau = 0.2;
    const auto u = testing::dense_expm(testing::dense_hamiltonian(r, 4), tau);
    const auto input = random_register(4, 29);
    const auto exact = u * testing::to_eigen(input);

    auto error_with_substeps = [&](int substeps) {
        auto reg = input;
        for (int s = 0; s < substeps; ++s) free_evolution_step(reg, r, tau / substeps);
        double err = 0.0;
        for (std::size_t i = 0; i < reg.size(); ++i)
            err = std::max(err, std::abs(reg.amp[i] - exact(static_cast<Eigen::Index>(i))));
        return err;
    };
    const double e1 = error_with_substeps(1);
    const double e2 = error_with_substeps(2);
    const double e4 = error_with_substeps(4);
    REQUIRE(e1 / e2 == Catch::Approx(4.0).epsilon(0.5));
    REQUIRE(e2 / e4 == Catch::Approx(4.0).epsilon(0.5));
}

namespace {

CompiledMap compiled(int n_q, double K = -0.1) {
    return CompiledMap::make(SawtoothParams::make_default(n_q, K));
}

} // namespace

TEST_CASE("mode none reproduces the plain circuit evolution exactly", "[evolution]") {
    const auto map = compiled(4);
    ImperfectEvolution run(map.params, map.routed, map.layout, ErrorMode::none(), 3);
    auto reference = init_momentum_eigenstate(map.params);
    for (int t = 0; t < 5; ++t) {
        run.iterate();
        apply_circuit(reference, map.routed);
    }
    REQUIRE(run.perturbed().amp == reference.amp);
}

TEST_CASE("merged diagonal error path equals the gate-by-gate reference", "[evolution]") {
    const auto map = compiled(3);
    const auto mode = ErrorMode::static_mode(1e-2, 1.0, false);
    ImperfectEvolution run(map.params, map.routed, map.layout, mode, 71);
    run.iterate();
    run.iterate();

    // naive reference: one free-evolution interval after every physical gate
    const auto disorder = sample_static(mode.delta, 0.0, map.layout, mode.tau_g, 71);
    auto reg = init_momentum_eigenstate(map.params);
    for (int t = 0; t < 2; ++t)
        for (const auto& g : map.routed.gates) {
            apply_gate(reg, g);
            if (g.is_physical()) free_evolution_step(reg, disorder, mode.tau_g);
        }
    for (std::size_t i = 0; i < reg.size(); ++i)
        REQUIRE(std::abs(run.perturbed().amp[i] - reg.amp[i]) < 1e-12);
}

TEST_CASE("noisy detuning runs are seed-deterministic", "[evolution]") {
    const auto map = compiled(4);
    const auto mode = ErrorMode::noisy_detuning(1e-3, 1.0);
    ImperfectEvolution a(map.params, map.routed, map.layout, mode, 5);
    ImperfectEvolution b(map.params, map.routed, map.layout, mode, 5);
    for (int t = 0; t < 3; ++t) {
        a.iterate();
        b.iterate();
    }
    REQUIRE(a.perturbed().amp == b.perturbed().amp);
}

TEST_CASE("static mode depends only on the products delta tau and J tau", "[evolution]") {
    const auto map = compiled(4);
    // power-of-two intervals make the rescaling exact in floating point
    const auto fast = ErrorMode::static_mode(1e-3, 0.5, false);
    const auto slow = ErrorMode::static_mode(1e-3, 0.25, false);
    ImperfectEvolution a(map.params, map.routed, map.layout, fast, 11);
    ImperfectEvolution b(map.params, map.routed, map.layout, slow, 11);
    for (int t = 0; t < 10; ++t) {
        a.iterate();
        b.iterate();
    }
    REQUIRE(a.perturbed().amp == b.perturbed().amp);
}

TEST_CASE("fidelity rises monotonically toward one as epsilon shrinks", "[evolution]") {
    const auto map = compiled(6);
    auto fidelity_at = [&](double eps) {
        const auto trace =
            compute_fidelity_trace(map, ErrorMode::static_mode(eps, 1.0, false), 50, 13);
        return trace.f.back();
    };
    const double f3 = fidelity_at(1e-3);
    const double f4 = fidelity_at(1e-4);
    const double f5 = fidelity_at(1e-5);
    REQUIRE(f4 > f3);
    REQUIRE(f5 > f4);
    REQUIRE(f5 > 0.999);
}

TEST_CASE("every error channel preserves the norm", "[evolution]") {
    const auto map = compiled(5);
    const std::vector<ErrorMode> modes = {
        ErrorMode::static_mode(1e-3, 1.0, false),
        ErrorMode::static_mode(1e-3, 1.0, true),
        ErrorMode::noisy_detuning(1e-3, 1.0),
        ErrorMode::random_rotation(1e-3),
    };
    for (const auto& mode : modes) {
        ImperfectEvolution run(map.params, map.routed, map.layout, mode, 19);
        for (int t = 0; t < 200; ++t) run.iterate();
        REQUIRE(std::abs(norm(run.perturbed()) - 1.0) < 1e-9);
    }
}

TEST_CASE("random rotations honor the all-qubit switch deterministically", "[evolution]") {
    const auto map = compiled(3);
    const auto operands_only = ErrorMode::random_rotation(1e-2, false);
    const auto all_qubits = ErrorMode::random_rotation(1e-2, true);
    ImperfectEvolution a(map.params, map.routed, map.layout, operands_only, 3);
    ImperfectEvolution b(map.params, map.routed, map.layout, all_qubits, 3);
    a.iterate();
    b.iterate();
    REQUIRE(a.perturbed().amp != b.perturbed().amp);
}
