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

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsaw/apply.hpp"
#include "qsaw/disorder.hpp"
#include "qsaw/exact_engine.hpp"
#include "qsaw/gates.hpp"
#include "qsaw/lattice.hpp"
#include "qsaw/register.hpp"
#include "qsaw/rng.hpp"

namespace qsaw {

enum class ErrorModeKind {
    none,
    static_imperfections, ///< frozen delta_i, J_ij acting between gates
    noisy_detuning,       ///< J = 0, delta_i redrawn before every gate
    random_rotation,      ///< random-axis rotation of angle ~ U[-eps, eps] per gate
};

/// Imperfection model and strength. Detuning-based modes are parameterized
/// by (epsilon, tau_g) with delta = epsilon / tau_g; in static mode only
/// the products delta*tau_g and J*tau_g matter.
struct ErrorMode {
    ErrorModeKind kind = ErrorModeKind::none;
    double delta = 0.0;    ///< detuning width (delta_i in [-delta/2, delta/2])
    double coupling = 0.0; ///< J (couplings in [-J, J])
    double tau_g = 1.0;    ///< inter-gate interval
    bool rotate_all_qubits = false; ///< random_rotation on all qubits, not just operands

    double epsilon() const { return delta * tau_g; }

    static ErrorMode none() { return {}; }
    static ErrorMode static_mode(double epsilon, double tau_g, bool j_equals_delta) {
        ErrorMode m;
        m.kind = ErrorModeKind::static_imperfections;
        m.tau_g = tau_g;
        m.delta = epsilon / tau_g;
        m.coupling = j_equals_delta ? m.delta : 0.0;
        return m;
    }
    static ErrorMode noisy_detuning(double epsilon, double tau_g) {
        ErrorMode m;
        m.kind = ErrorModeKind::noisy_detuning;
        m.tau_g = tau_g;
        m.delta = epsilon / tau_g;
        return m;
    }
    static ErrorMode random_rotation(double epsilon, bool all_qubits = false) {
        ErrorMode m;
        m.kind = ErrorModeKind::random_rotation;
        m.delta = epsilon; // angle scale, used directly
        m.tau_g = 1.0;
        m.rotate_all_qubits = all_qubits;
        return m;
    }
};

namespace detail {

/// diag phases exp(-i sum_w angle_w s_w(b)) with s_w = +1/-1 for bit 0/1,
/// built by a subset product over set bits and multiplied into the state in
/// the same pass.
inline void apply_z_diagonal(QuantumRegister& reg, const std::vector<double>& angles) {
    const std::size_t n = reg.size();
    thread_local std::vector<cplx> f;
    f.resize(n);
    double base = 0.0;
    for (double a : angles) base += a;
    f[0] = std::polar(1.0, -base);
    std::vector<cplx> ratio(angles.size());
    for (std::size_t j = 0; j < angles.size(); ++j) ratio[j] = std::polar(1.0, 2.0 * angles[j]);
    reg.amp[0] *= f[0];
    for (std::size_t b = 1; b < n; ++b) {
        const int j = std::countr_zero(b);
        f[b] = f[b & (b - 1)] * ratio[static_cast<std::size_t>(j)];
        reg.amp[b] *= f[b];
    }
}

/// exp(-i phi XX) on the qubit pair (a, b), applied exactly.
inline void apply_xx(QuantumRegister& reg, int qa, int qb, double phi) {
    const std::size_t ba = std::size_t{1} << qa;
    const std::size_t bb = std::size_t{1} << qb;
    const std::size_t mask = ba | bb;
    const double c = std::cos(phi);
    const cplx is{0.0, -std::sin(phi)};
    auto& a = reg.amp;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i & bb) continue; // representative of the pair (i, i^mask)
        const std::size_t p = i ^ mask;
        const cplx x = a[i], y = a[p];
        a[i] = c * x + is * y;
        a[p] = is * x + c * y;
    }
}

/// Greedy edge coloring (deterministic); on a rectangular grid this needs
/// at most four colors, and edges within one color act on disjoint qubits.
inline std::vector<std::vector<Coupling>> color_edges(const std::vector<Coupling>& couplings) {
    std::vector<std::vector<Coupling>> colors;
    for (const auto& e : couplings) {
        std::size_t c = 0;
        for (; c < colors.size(); ++c) {
            bool clash = false;
            for (const auto& o : colors[c])
                if (o.a == e.a || o.a == e.b || o.b == e.a || o.b == e.b) {
                    clash = true;
                    break;
                }
            if (!clash) break;
        }
        if (c == colors.size()) colors.emplace_back();
        colors[c].push_back(e);
    }
    return colors;
}

} // namespace detail

/// exp(-i H_s tau) with the detuning part exact and the coupling part split
/// into commuting edge-color groups, combined in a symmetric second-order
/// composition: Z and colors 0..k-2 at tau/2 on each side, the last color
/// at full tau in the middle. Exact whenever the couplings vanish or form a
/// single color group.
class FreeEvolutionPlan {
  public:
    FreeEvolutionPlan(const DisorderRealization& disorder, double tau)
        : disorder_(disorder), tau_(tau), colors_(detail::color_edges(disorder.couplings)) {
        half_angles_.resize(disorder.delta.size());
        full_angles_.resize(disorder.delta.size());
        for (std::size_t i = 0; i < disorder.delta.size(); ++i) {
            full_angles_[i] = disorder.delta[i] * tau;
            half_angles_[i] = 0.5 * full_angles_[i];
        }
    }

    void apply(QuantumRegister& reg) const {
        if (static_cast<std::size_t>(reg.n_q) != disorder_.delta.size())
            throw std::invalid_argument("free evolution: register/disorder size mismatch");
        if (colors_.empty()) {
            detail::apply_z_diagonal(reg, full_angles_);
            return;
        }
        detail::apply_z_diagonal(reg, half_angles_);
        const std::size_t k = colors_.size();
        for (std::size_t c = 0; c + 1 < k; ++c) apply_color(reg, colors_[c], 0.5 * tau_);
        apply_color(reg, colors_[k - 1], tau_);
        for (std::size_t c = k - 1; c-- > 0;) apply_color(reg, colors_[c], 0.5 * tau_);
        detail::apply_z_diagonal(reg, half_angles_);
    }

  private:
    static void apply_color(QuantumRegister& reg, const std::vector<Coupling>& edges,
                            double tau) {
        for (const auto& e : edges) detail::apply_xx(reg, e.a, e.b, e.j * tau);
    }

    DisorderRealization disorder_;
    double tau_;
    std::vector<std::vector<Coupling>> colors_;
    std::vector<double> half_angles_, full_angles_;
};

/// One inter-gate interval of free evolution under a frozen realization.
inline void free_evolution_step(QuantumRegister& reg, const DisorderRealization& disorder,
                                double tau) {
    FreeEvolutionPlan(disorder, tau).apply(reg);
}

/// Per-iteration view handed to observers; `t` counts map iterations, with
/// t = 0 the initial state. Return false to stop the run.
using EvolutionObserver =
    std::function<bool(int t, const QuantumRegister& perturbed, const QuantumRegister& ideal)>;

/// Runs the routed gate circuit with perfect instantaneous gates separated
/// by imperfection intervals, next to the ideal reference evolution.
///
/// Static and noisy-detuning errors are diagonal in the computational
/// basis, so between the (rare) Hadamards the per-gate intervals are merged
/// into one accumulated Z-phase and flushed in a single pass; swap gates
/// permute the accumulator. This is exact operator algebra, not an
/// approximation. With J != 0 every interval is applied individually.
class ImperfectEvolution {
  public:
    ImperfectEvolution(const SawtoothParams& params, const Circuit& routed,
                       const LatticeLayout& layout, const ErrorMode& mode, std::uint64_t seed)
        : params_(params),
          circuit_(routed),
          mode_(mode),
          ideal_engine_(params),
          psi_(init_momentum_eigenstate(params)),
          ideal_(init_momentum_eigenstate(params)),
          gate_gen_(rng::SplitMix64::stream(seed, 1)),
          acc_(static_cast<std::size_t>(params.n_q), 0.0) {
        if (routed.bit_reversed_output)
            throw std::invalid_argument("ImperfectEvolution: circuit must not end in a relabeling");
        if (mode.kind == ErrorModeKind::static_imperfections) {
            disorder_ = sample_static(mode.delta, mode.coupling, layout, mode.tau_g, seed);
            if (mode.coupling != 0.0)
                plan_.emplace(disorder_, mode.tau_g);
        }
    }

    const QuantumRegister& perturbed() const { return psi_; }
    const QuantumRegister& ideal() const { return ideal_; }
    const DisorderRealization& disorder() const { return disorder_; }

    /// Advance one map iteration on both registers.
    void iterate() {
        for (const auto& g : circuit_.gates) {
            if (!g.is_physical()) {
                apply_gate(psi_, g);
                continue;
            }
            if (merge_diagonal_errors()) {
                if (g.kind == GateKind::hadamard) flush();
                if (g.kind == GateKind::swap) std::swap(acc_[g.q1], acc_[g.q2]);
                apply_gate(psi_, g);
                accumulate_interval();
            } else {
                apply_gate(psi_, g);
                apply_interval(g);
            }
        }
        flush();
        ideal_engine_.step(ideal_);
    }

  private:
    bool merge_diagonal_errors() const {
        return mode_.kind == ErrorModeKind::noisy_detuning ||
               (mode_.kind == ErrorModeKind::static_imperfections && mode_.coupling == 0.0);
    }

    void accumulate_interval() {
        if (mode_.kind == ErrorModeKind::noisy_detuning) {
            for (auto& a : acc_)
                a += mode_.delta * (gate_gen_.next_double() - 0.5) * mode_.tau_g;
        } else {
            for (std::size_t w = 0; w < acc_.size(); ++w)
                acc_[w] += disorder_.delta[w] * mode_.tau_g;
        }
    }

    void flush() {
        if (!merge_diagonal_errors()) return;
        bool any = false;
        for (double a : acc_)
            if (a != 0.0) any = true;
        if (!any) return;
        detail::apply_z_diagonal(psi_, acc_);
        std::fill(acc_.begin(), acc_.end(), 0.0);
    }

    void apply_interval(const Gate& g) {
        switch (mode_.kind) {
            case ErrorModeKind::none: break;
            case ErrorModeKind::static_imperfections: plan_->apply(psi_); break;
            case ErrorModeKind::noisy_detuning: break; // handled by the merged path
            case ErrorModeKind::random_rotation: rotate_after(g); break;
        }
    }

    void rotate_after(const Gate& g) {
        auto rotate = [&](int q) {
            const double cos_axis = 2.0 * gate_gen_.next_double() - 1.0;
            const double azimuth = gate_gen_.uniform(0.0, 2.0 * std::numbers::pi);
            const double alpha = gate_gen_.symmetric(mode_.delta);
            const double sin_axis = std::sqrt(std::max(0.0, 1.0 - cos_axis * cos_axis));
            const double nx = sin_axis * std::cos(azimuth);
            const double ny = sin_axis * std::sin(azimuth);
            const double c = std::cos(0.5 * alpha), s = std::sin(0.5 * alpha);
            // U = cos(a/2) I - i sin(a/2) (n . sigma)
            const cplx u00{c, -s * cos_axis};
            const cplx u01{-s * ny, -s * nx};
            const cplx u10{s * ny, -s * nx};
            const cplx u11{c, s * cos_axis};
            const std::size_t bit = std::size_t{1} << q;
            auto& a = psi_.amp;
            for (std::size_t base = 0; base < a.size(); base += 2 * bit)
                for (std::size_t i = base; i < base + bit; ++i) {
                    const cplx x = a[i], y = a[i | bit];
                    a[i] = u00 * x + u01 * y;
                    a[i | bit] = u10 * x + u11 * y;
                }
        };
        if (mode_.rotate_all_qubits) {
            for (int q = 0; q < params_.n_q; ++q) rotate(q);
        } else {
            if (g.q1 >= 0) rotate(g.q1);
            if (g.q2 >= 0) rotate(g.q2);
        }
    }

    SawtoothParams params_;
    Circuit circuit_;
    ErrorMode mode_;
    ExactEngine ideal_engine_;
    QuantumRegister psi_, ideal_;
    rng::SplitMix64 gate_gen_;
    DisorderRealization disorder_;
    std::optional<FreeEvolutionPlan> plan_;
    std::vector<double> acc_;
};

inline void run_imperfect_evolution(const SawtoothParams& params, const Circuit& routed,
                                    const LatticeLayout& layout, const ErrorMode& mode,
                                    int t_max, std::uint64_t seed,
                                    const EvolutionObserver& observer) {
    ImperfectEvolution run(params, routed, layout, mode, seed);
    if (!observer(0, run.perturbed(), run.ideal())) return;
    for (int t = 1; t <= t_max; ++t) {
        run.iterate();
        if (!observer(t, run.perturbed(), run.ideal())) return;
    }
}

} // namespace qsaw
