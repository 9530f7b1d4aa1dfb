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
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qsaw/linfit.hpp"
#include "qsaw/rng.hpp"

namespace qsaw {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Wrap into [0, 2*pi).
inline double wrap_angle(double theta) {
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) r += two_pi;
    // fmod can return exactly two_pi after the correction when theta is a
    // tiny negative number.
    if (r >= two_pi) r = 0.0;
    return r;
}

/// Wrap into [-pi, pi).
inline double wrap_momentum(double p) {
    return wrap_angle(p + std::numbers::pi) - std::numbers::pi;
}

/// One point of the classical sawtooth map on the torus:
/// p in [-pi, pi), theta in [0, 2*pi).
struct ClassicalState {
    double p = 0.0;
    double theta = 0.0;
};

/// One iteration of the rescaled sawtooth map,
///   p' = p + K (theta - pi),  theta' = theta + p',
/// with both coordinates wrapped back onto the torus.
inline ClassicalState classical_step(const ClassicalState& s, double K) {
    const double kicked = s.p + K * (s.theta - std::numbers::pi);
    return {wrap_momentum(kicked), wrap_angle(s.theta + kicked)};
}

struct EnsembleConfig {
    std::uint64_t count = 100000;    ///< number of trajectories
    double p0 = 0.0;                 ///< initial momentum, identical for all
    double K = 1.0;                  ///< chaos parameter K = k*T
    int t_max = 100;                 ///< map iterations
    double noise_amplitude = 0.0;    ///< per-step additive noise half-width
    std::uint64_t seed = 1;
};

/// <(Delta p)^2> per iteration, measured on the unwrapped momentum so the
/// spread is not capped by the torus circumference.
struct EnsembleMoments {
    std::vector<double> m2; // index t = 0..t_max
    EnsembleConfig config;
};

namespace detail {

struct Trajectory {
    double u;     // unwrapped momentum
    double theta; // angle on [0, 2*pi)
};

inline Trajectory start_trajectory(const EnsembleConfig& cfg, std::uint64_t i,
                                   rng::SplitMix64& gen) {
    (void)i;
    return {cfg.p0, gen.uniform(0.0, two_pi)};
}

inline void advance(Trajectory& tr, const EnsembleConfig& cfg, rng::SplitMix64& gen) {
    tr.u += cfg.K * (tr.theta - std::numbers::pi);
    tr.theta = wrap_angle(tr.theta + tr.u);
    if (cfg.noise_amplitude > 0.0) {
        tr.u += gen.symmetric(cfg.noise_amplitude);
        tr.theta = wrap_angle(tr.theta + gen.symmetric(cfg.noise_amplitude));
    }
}

// Fixed-size work blocks keep the reduction order independent of the thread
// count, so results are bit-identical for any `jobs`.
inline constexpr std::uint64_t kEnsembleBlock = 4096;

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename BlockFn>
void for_each_block(std::uint64_t count, int jobs, BlockFn&& fn) {
    const std::uint64_t n_blocks = (count + kEnsembleBlock - 1) / kEnsembleBlock;
    const int workers = resolve_jobs(jobs);
    if (workers <= 1 || n_blocks <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::uint64_t b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1)) fn(b);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace detail

/// Evolve an ensemble and record <(Delta p)^2> against time. Trajectories
/// start at p = p0 with angles drawn uniformly from per-trajectory RNG
/// streams; Delta p = p_unwrapped(t) - p0. Deterministic in (seed), for any
/// thread count.
inline EnsembleMoments evolve_ensemble(const EnsembleConfig& cfg, int jobs = 0) {
    if (cfg.count == 0) throw std::invalid_argument("evolve_ensemble: count must be >= 1");
    if (cfg.t_max < 1) throw std::invalid_argument("evolve_ensemble: t_max must be >= 1");
    if (cfg.noise_amplitude < 0.0)
        throw std::invalid_argument("evolve_ensemble: negative noise amplitude");

    const std::uint64_t n_blocks = (cfg.count + detail::kEnsembleBlock - 1) / detail::kEnsembleBlock;
    std::vector<std::vector<double>> partial(n_blocks);

    detail::for_each_block(cfg.count, jobs, [&](std::uint64_t b) {
        const std::uint64_t lo = b * detail::kEnsembleBlock;
        const std::uint64_t hi = std::min(cfg.count, lo + detail::kEnsembleBlock);
        std::vector<double> acc(static_cast<std::size_t>(cfg.t_max) + 1, 0.0);
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto gen = rng::SplitMix64::stream(cfg.seed, i);
            auto tr = detail::start_trajectory(cfg, i, gen);
            for (int t = 1; t <= cfg.t_max; ++t) {
                detail::advance(tr, cfg, gen);
                const double dp = tr.u - cfg.p0;
                acc[static_cast<std::size_t>(t)] += dp * dp;
            }
        }
        partial[b] = std::move(acc);
    });

    EnsembleMoments out;
    out.config = cfg;
    out.m2.assign(static_cast<std::size_t>(cfg.t_max) + 1, 0.0);
    for (std::uint64_t b = 0; b < n_blocks; ++b)
        for (std::size_t t = 0; t < out.m2.size(); ++t) out.m2[t] += partial[b][t];
    for (auto& v : out.m2) v /= static_cast<double>(cfg.count);
    return out;
}

/// Power-law fit m2 ~ prefactor * t^alpha over the window [t_min, t_max].
inline PowerLawFit fit_power_law(const EnsembleMoments& moments, int t_min, int t_max) {
    if (t_min < 1 || t_max <= t_min)
        throw std::invalid_argument("fit_power_law: need 1 <= t_min < t_max");
    if (t_max >= static_cast<int>(moments.m2.size()))
        throw std::invalid_argument("fit_power_law: window exceeds trace");
    std::vector<double> ts, ys;
    for (int t = t_min; t <= t_max; ++t) {
        ts.push_back(static_cast<double>(t));
        ys.push_back(moments.m2[static_cast<std::size_t>(t)]);
    }
    return fit_power_law_points(ts, ys); // rejects m2 <= 0 and short windows
}

/// Diffusion coefficient: slope of the least-squares line m2 = a + D t over
/// [t_min, t_max].
inline double fit_diffusion_coefficient(const EnsembleMoments& moments, int t_min, int t_max) {
    if (t_min < 0 || t_max <= t_min || t_max >= static_cast<int>(moments.m2.size()))
        throw std::invalid_argument("fit_diffusion_coefficient: bad window");
    std::vector<double> ts, ys;
    for (int t = t_min; t <= t_max; ++t) {
        ts.push_back(static_cast<double>(t));
        ys.push_back(moments.m2[static_cast<std::size_t>(t)]);
    }
    return fit_line(ts, ys).slope;
}

/// (theta, p) occupation histogram accumulated over all trajectories and all
/// t in [t_lo, t_hi] (t = 0 is the initial condition). Normalized to sum 1.
/// Row-major [ip][itheta]; theta bins span [0, 2*pi), p bins span [-pi, pi).
struct PhaseDensity {
    int n_theta = 0;
    int n_p = 0;
    std::vector<double> cells;
    double& at(int ip, int it) { return cells[static_cast<std::size_t>(ip) * n_theta + it]; }
    double at(int ip, int it) const { return cells[static_cast<std::size_t>(ip) * n_theta + it]; }
};

inline PhaseDensity classical_phase_density(const EnsembleConfig& cfg, int n_theta, int n_p,
                                            int t_lo, int t_hi, int jobs = 0) {
    if (n_theta < 2 || n_p < 2)
        throw std::invalid_argument("classical_phase_density: grid dimensions must be >= 2");
    if (t_lo > t_hi) throw std::invalid_argument("classical_phase_density: empty time window");
    if (t_lo < 0 || t_hi > cfg.t_max)
        throw std::invalid_argument("classical_phase_density: window outside [0, t_max]");
    if (cfg.count == 0) throw std::invalid_argument("classical_phase_density: count must be >= 1");

    const std::uint64_t n_blocks = (cfg.count + detail::kEnsembleBlock - 1) / detail::kEnsembleBlock;
    std::vector<std::vector<double>> partial(n_blocks);
    const std::size_t n_cells = static_cast<std::size_t>(n_theta) * n_p;

    detail::for_each_block(cfg.count, jobs, [&](std::uint64_t b) {
        const std::uint64_t lo = b * detail::kEnsembleBlock;
        const std::uint64_t hi = std::min(cfg.count, lo + detail::kEnsembleBlock);
        std::vector<double> acc(n_cells, 0.0);
        auto deposit = [&](const detail::Trajectory& tr) {
            const double p = wrap_momentum(tr.u);
            int it = static_cast<int>(tr.theta / two_pi * n_theta);
            int ip = static_cast<int>((p + std::numbers::pi) / two_pi * n_p);
            it = std::min(std::max(it, 0), n_theta - 1);
            ip = std::min(std::max(ip, 0), n_p - 1);
            acc[static_cast<std::size_t>(ip) * n_theta + it] += 1.0;
        };
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto gen = rng::SplitMix64::stream(cfg.seed, i);
            auto tr = detail::start_trajectory(cfg, i, gen);
            if (t_lo == 0) deposit(tr);
            for (int t = 1; t <= t_hi; ++t) {
                detail::advance(tr, cfg, gen);
                if (t >= t_lo) deposit(tr);
            }
        }
        partial[b] = std::move(acc);
    });

    PhaseDensity grid;
    grid.n_theta = n_theta;
    grid.n_p = n_p;
    grid.cells.assign(n_cells, 0.0);
    for (std::uint64_t b = 0; b < n_blocks; ++b)
        for (std::size_t c = 0; c < n_cells; ++c) grid.cells[c] += partial[b][c];
    double total = 0.0;
    for (double v : grid.cells) total += v;
    for (auto& v : grid.cells) v /= total;
    return grid;
}

} // namespace qsaw
