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
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qsaw/params.hpp"
#include "qsaw/register.hpp"

namespace qsaw {

/// Coherent-state smoothing of |psi|^2 over the torus phase space,
/// theta in [0, 2*pi) (columns) by p in [-pi, pi) (rows), sampled at cell
/// centers. Entries are nonnegative and entries * cell_area sum to 1.
struct HusimiGrid {
    int n_theta = 0;
    int n_p = 0;
    double delta_p = 0.0; ///< smoothing width, delta_p * delta_theta = T/2
    std::vector<double> values; // row-major [ip][itheta]

    double at(int ip, int it) const {
        return values[static_cast<std::size_t>(ip) * n_theta + it];
    }
    double& at(int ip, int it) { return values[static_cast<std::size_t>(ip) * n_theta + it]; }
    double cell_area() const {
        return (2.0 * std::numbers::pi / n_theta) * (2.0 * std::numbers::pi / n_p);
    }
    double theta_center(int it) const { return (it + 0.5) * 2.0 * std::numbers::pi / n_theta; }
    double p_center(int ip) const {
        return -std::numbers::pi + (ip + 0.5) * 2.0 * std::numbers::pi / n_p;
    }

    void accumulate(const HusimiGrid& other, double weight) {
        if (other.values.size() != values.size())
            throw std::invalid_argument("HusimiGrid::accumulate: shape mismatch");
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += weight * other.values[i];
    }
};

/// H(theta0, p0) = |<chi_{theta0,p0}|psi>|^2 with torus coherent states
///   <n|chi> ~ sum_{|m|<=3} exp(-(nT - p0 - 2*pi*m)^2 / (4 dp^2) - i n theta0),
/// dp^2 = s T/2, each chi normalized numerically; the grid is then scaled
/// so that entries * cell area sum to one.
inline HusimiGrid husimi(const QuantumRegister& reg, const SawtoothParams& params, int n_theta,
                         int n_p, double s = 1.0) {
    if (reg.basis != Basis::momentum)
        throw std::invalid_argument("husimi: register not in momentum basis");
    if (n_theta < 1 || n_p < 1) throw std::invalid_argument("husimi: zero-size grid");
    if (reg.n_q != params.n_q) throw std::invalid_argument("husimi: register/params mismatch");

    const std::size_t N = reg.size();
    HusimiGrid grid;
    grid.n_theta = n_theta;
    grid.n_p = n_p;
    grid.delta_p = std::sqrt(s * params.T / 2.0);
    grid.values.assign(static_cast<std::size_t>(n_theta) * n_p, 0.0);

    const double four_dp2 = 4.0 * grid.delta_p * grid.delta_p;
    std::vector<double> weight(N);
    std::vector<cplx> wamp(N);

    for (int ip = 0; ip < n_p; ++ip) {
        const double p0 = grid.p_center(ip);
        double norm2 = 0.0;
        for (std::size_t m = 0; m < N; ++m) {
            const double pn = (static_cast<double>(m) - static_cast<double>(params.N / 2)) * params.T;
            double g = 0.0;
            for (int img = -3; img <= 3; ++img) {
                const double d = pn - p0 - 2.0 * std::numbers::pi * img;
                g += std::exp(-d * d / four_dp2);
            }
            weight[m] = g;
            norm2 += g * g;
        }
        const double inv_norm = 1.0 / std::sqrt(norm2);
        for (std::size_t m = 0; m < N; ++m) wamp[m] = weight[m] * inv_norm * reg.amp[m];

        for (int it = 0; it < n_theta; ++it) {
            const double theta0 = grid.theta_center(it);
            // overlap = sum_m wamp_m * exp(i n theta0), n = m - N/2; the
            // phase advances by exp(i theta0) per index, re-anchored
            // periodically to keep the recurrence exact to ~1e-13.
            const cplx step = std::polar(1.0, theta0);
            cplx overlap{0.0, 0.0};
            cplx phase = std::polar(1.0, -static_cast<double>(params.N / 2) * theta0);
            for (std::size_t m = 0; m < N; ++m) {
                if ((m & 255u) == 0)
                    phase = std::polar(1.0, (static_cast<double>(m) -
                                             static_cast<double>(params.N / 2)) * theta0);
                overlap += wamp[m] * phase;
                phase *= step;
            }
            grid.at(ip, it) = std::norm(overlap);
        }
    }

    double total = 0.0;
    for (double v : grid.values) total += v;
    const double scale = 1.0 / (total * grid.cell_area());
    for (auto& v : grid.values) v *= scale;
    return grid;
}

/// |c_m|^2 over basis indices.
inline std::vector<double> momentum_distribution(const QuantumRegister& reg) {
    if (reg.basis != Basis::momentum)
        throw std::invalid_argument("momentum_distribution: register not in momentum basis");
    std::vector<double> out(reg.size());
    for (std::size_t m = 0; m < reg.size(); ++m) out[m] = std::norm(reg.amp[m]);
    return out;
}

/// sum_m |c_m|^2 (n T - p0)^2 with n = m - N/2.
inline double quantum_second_moment(const QuantumRegister& reg, const SawtoothParams& params,
                                    double p0) {
    if (reg.basis != Basis::momentum)
        throw std::invalid_argument("quantum_second_moment: register not in momentum basis");
    double acc = 0.0;
    for (std::size_t m = 0; m < reg.size(); ++m) {
        const double pn = (static_cast<double>(m) - static_cast<double>(params.N / 2)) * params.T;
        acc += std::norm(reg.amp[m]) * (pn - p0) * (pn - p0);
    }
    return acc;
}

} // namespace qsaw
