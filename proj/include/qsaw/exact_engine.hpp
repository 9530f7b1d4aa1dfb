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

#include "qsaw/fft.hpp"
#include "qsaw/params.hpp"
#include "qsaw/register.hpp"

namespace qsaw {

/// Momentum -> angle: psi(theta_l) = N^{-1/2} sum_m c_m exp(i n theta_l)
/// with n = m - N/2. Relative to the plain index-based transform the shift
/// contributes the extra factor (-1)^l.
inline void transform_to_angle(QuantumRegister& reg) {
    if (reg.basis != Basis::angle && reg.basis != Basis::momentum)
        throw std::invalid_argument("transform_to_angle: unknown basis");
    if (reg.basis != Basis::momentum)
        throw std::invalid_argument("transform_to_angle: register not in momentum basis");
    detail::fft_inplace(reg.amp, +1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(reg.size()));
    for (std::size_t l = 0; l < reg.size(); ++l)
        reg.amp[l] *= (l & 1) ? -scale : scale;
    reg.basis = Basis::angle;
}

/// Angle -> momentum; exact inverse of transform_to_angle.
inline void transform_to_momentum(QuantumRegister& reg) {
    if (reg.basis != Basis::angle)
        throw std::invalid_argument("transform_to_momentum: register not in angle basis");
    for (std::size_t l = 1; l < reg.size(); l += 2) reg.amp[l] = -reg.amp[l];
    detail::fft_inplace(reg.amp, -1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(reg.size()));
    for (auto& c : reg.amp) c *= scale;
    reg.basis = Basis::momentum;
}

/// Split-operator reference engine for the quantum sawtooth map,
///   psi' = exp(-i T n^2 / 2) exp(i k (theta - pi)^2 / 2) psi,
/// evaluated exactly via the two basis transforms. This is the oracle the
/// gate-level engine is verified against.
class ExactEngine {
  public:
    explicit ExactEngine(const SawtoothParams& params) : params_(params) {
        const auto N = static_cast<std::size_t>(params.N);
        kick_.resize(N);
        rotation_.resize(N);
        inv_kick_.resize(N);
        inv_rotation_.resize(N);
        for (std::size_t i = 0; i < N; ++i) {
            const double theta = two_pi_over_n() * static_cast<double>(i);
            const double kick_phase =
                0.5 * params.k * (theta - std::numbers::pi) * (theta - std::numbers::pi);
            const double n = static_cast<double>(static_cast<std::int64_t>(i) - params.N / 2);
            const double rot_phase = -0.5 * params.T * n * n;
            kick_[i] = std::polar(1.0, kick_phase);
            rotation_[i] = std::polar(1.0, rot_phase);
            inv_kick_[i] = std::conj(kick_[i]);
            inv_rotation_[i] = std::conj(rotation_[i]);
        }
    }

    const SawtoothParams& params() const { return params_; }

    /// One forward map iteration; register must be in the momentum basis.
    void step(QuantumRegister& reg) const {
        check(reg);
        transform_to_angle(reg);
        for (std::size_t l = 0; l < reg.size(); ++l) reg.amp[l] *= kick_[l];
        transform_to_momentum(reg);
        for (std::size_t m = 0; m < reg.size(); ++m) reg.amp[m] *= rotation_[m];
    }

    /// Exact inverse iteration: conjugate phases applied in reverse order.
    void step_back(QuantumRegister& reg) const {
        check(reg);
        for (std::size_t m = 0; m < reg.size(); ++m) reg.amp[m] *= inv_rotation_[m];
        transform_to_angle(reg);
        for (std::size_t l = 0; l < reg.size(); ++l) reg.amp[l] *= inv_kick_[l];
        transform_to_momentum(reg);
    }

  private:
    double two_pi_over_n() const {
        return 2.0 * std::numbers::pi / static_cast<double>(params_.N);
    }
    void check(const QuantumRegister& reg) const {
        if (reg.basis != Basis::momentum)
            throw std::invalid_argument("ExactEngine: register not in momentum basis");
        if (reg.n_q != params_.n_q)
            throw std::invalid_argument("ExactEngine: register size mismatch");
    }

    SawtoothParams params_;
    std::vector<cplx> kick_, rotation_, inv_kick_, inv_rotation_;
};

/// Single-shot form of ExactEngine::step.
inline void exact_map_iteration(QuantumRegister& reg, const SawtoothParams& params) {
    ExactEngine(params).step(reg);
}

} // namespace qsaw
