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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace qsaw {

/// One simulation instance of the quantum sawtooth map on N = 2^{n_q}
/// levels with T = 2*pi/N and k = K/T. Momentum quantum numbers run over
/// -N/2 <= n < N/2 and map onto basis indices m = n + N/2.
struct SawtoothParams {
    int n_q = 1;
    std::int64_t N = 2;
    double K = -0.1;
    double T = std::numbers::pi;
    double k = -0.1 / std::numbers::pi;
    std::int64_t n0 = 0;

    static SawtoothParams make(int n_q, double K, std::int64_t n0) {
        if (n_q < 1 || n_q > 24) throw std::invalid_argument("SawtoothParams: n_q out of range");
        SawtoothParams p;
        p.n_q = n_q;
        p.N = std::int64_t{1} << n_q;
        p.K = K;
        p.T = 2.0 * std::numbers::pi / static_cast<double>(p.N);
        p.k = K / p.T;
        if (n0 < -p.N / 2 || n0 >= p.N / 2)
            throw std::invalid_argument("SawtoothParams: n0 outside [-N/2, N/2)");
        p.n0 = n0;
        return p;
    }

    /// The conventional initial momentum n0 = [0.38 N].
    static std::int64_t default_n0(int n_q) {
        return static_cast<std::int64_t>(0.38 * static_cast<double>(std::int64_t{1} << n_q));
    }

    static SawtoothParams make_default(int n_q, double K = -0.1) {
        return make(n_q, K, default_n0(n_q));
    }

    /// Basis index of the initial momentum eigenstate.
    std::int64_t m0() const { return n0 + N / 2; }
    /// Initial momentum in rescaled units, p0 = n0 * T.
    double p0() const { return static_cast<double>(n0) * T; }
};

} // namespace qsaw
