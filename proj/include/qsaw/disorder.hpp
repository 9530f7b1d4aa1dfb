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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qsaw/lattice.hpp"
#include "qsaw/rng.hpp"

namespace qsaw {

struct Coupling {
    int a = 0;
    int b = 0;
    double j = 0.0;
};

/// One frozen sample of the static-imperfection Hamiltonian
///   H_s = sum_i delta_i sigma^z_i + sum_<ij> J_ij sigma^x_i sigma^x_j,
/// with delta_i uniform in [-delta/2, delta/2] on every qubit and J_ij
/// uniform in [-J, J] on every nearest-neighbor edge of the lattice. The
/// mean level spacing is removed exactly by the compensation rotation, so
/// it never appears here.
struct DisorderRealization {
    std::vector<double> delta;
    std::vector<Coupling> couplings;
    double tau_g = 1.0;
    std::uint64_t seed = 0;
};

inline DisorderRealization sample_static(double delta_width, double j_width,
                                         const LatticeLayout& layout, double tau_g,
                                         std::uint64_t seed) {
    if (delta_width < 0.0 || j_width < 0.0)
        throw std::invalid_argument("sample_static: widths must be >= 0");
    DisorderRealization r;
    r.tau_g = tau_g;
    r.seed = seed;
    auto gen = rng::SplitMix64::stream(seed, 0);
    r.delta.resize(static_cast<std::size_t>(layout.n_q));
    for (auto& d : r.delta) d = delta_width * (gen.next_double() - 0.5);
    for (const auto& [a, b] : layout.edges())
        r.couplings.push_back({a, b, j_width * (2.0 * gen.next_double() - 1.0)});
    return r;
}

} // namespace qsaw
