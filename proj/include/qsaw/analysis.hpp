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
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsaw/linfit.hpp"
#include "qsaw/register.hpp"

namespace qsaw {

/// f = |<a|b>|^2.
inline double fidelity(const QuantumRegister& a, const QuantumRegister& b) {
    return std::norm(inner_product(a, b));
}

/// Fidelity against map-iteration time; f[t] for t = 0..size-1, f[0] = 1.
struct FidelityTrace {
    std::vector<double> f;
    int n_q = 0;
    double epsilon = 0.0;
    std::string mode;
    std::uint64_t seed = 0;
};

inline constexpr double never_crossed = std::numeric_limits<double>::infinity();

/// First crossing of f below c, interpolated linearly in (t, log f) between
/// the bracketing iterations; +inf if the trace never crosses.
inline double fidelity_time(const FidelityTrace& trace, double c = 0.9) {
    if (trace.f.empty()) throw std::invalid_argument("fidelity_time: empty trace");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("fidelity_time: c outside (0, 1)");
    for (std::size_t i = 1; i < trace.f.size(); ++i) {
        if (trace.f[i] < c) {
            const double f0 = trace.f[i - 1], f1 = trace.f[i];
            if (!(f0 > 0.0) || !(f1 > 0.0)) return static_cast<double>(i);
            const double t0 = static_cast<double>(i - 1);
            return t0 + (std::log(c) - std::log(f0)) / (std::log(f1) - std::log(f0));
        }
    }
    return never_crossed;
}

enum class DecayModel { gaussian, exponential };

struct DecayFit {
    DecayModel model = DecayModel::gaussian;
    double rate = 0.0; ///< A for exp(-A t^2), B for exp(-B t)
    double ssr_gaussian = 0.0;
    double ssr_exponential = 0.0;
};

/// Window in fidelity for decay-law fitting; the short-time regime by
/// default.
struct DecayFitWindow {
    double f_min = 0.5;
    double f_max = 0.999;
};

/// Fits -log f against t^2 (gaussian) and against t (exponential), both
/// through the origin since f(0) = 1, and selects the smaller-residual
/// model.
inline DecayFit fit_fidelity_decay(const FidelityTrace& trace,
                                   DecayFitWindow window = {}) {
    std::vector<double> t2, t1, y;
    for (std::size_t i = 1; i < trace.f.size(); ++i) {
        const double f = trace.f[i];
        if (f < window.f_min || f > window.f_max) continue;
        if (!(f > 0.0)) throw std::invalid_argument("fit_fidelity_decay: f <= 0 in window");
        const double t = static_cast<double>(i);
        t1.push_back(t);
        t2.push_back(t * t);
        y.push_back(-std::log(f));
    }
    if (y.size() < 3)
        throw std::invalid_argument("fit_fidelity_decay: fewer than 3 points in window");
    const auto [a, ssr_a] = fit_through_origin(t2, y);
    const auto [b, ssr_b] = fit_through_origin(t1, y);
    DecayFit fit;
    fit.ssr_gaussian = ssr_a;
    fit.ssr_exponential = ssr_b;
    if (ssr_a <= ssr_b) {
        fit.model = DecayModel::gaussian;
        fit.rate = a;
    } else {
        fit.model = DecayModel::exponential;
        fit.rate = b;
    }
    return fit;
}

/// Log-log slope (with standard error) through a set of positive points,
/// e.g. t_f against epsilon or against n_q.
struct ScalingFit {
    double slope = 0.0;
    double stderr_ = 0.0;
};

inline ScalingFit scaling_exponent(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("scaling_exponent: need >= 3 points");
    std::vector<double> x, y;
    for (const auto& [px, py] : points) {
        if (!(px > 0.0) || !(py > 0.0))
            throw std::invalid_argument("scaling_exponent: nonpositive point");
        x.push_back(std::log(px));
        y.push_back(std::log(py));
    }
    const LineFit f = fit_line(x, y);
    return {f.slope, f.slope_stderr};
}

} // namespace qsaw
