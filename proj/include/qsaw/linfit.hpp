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
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qsaw {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double ssr = 0.0; // residual sum of squares
};

/// Ordinary least squares y = a + b x.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_line: size mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("fit_line: need at least 2 points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissa");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        f.ssr += r * r;
    }
    f.slope_stderr = (n > 2) ? std::sqrt(f.ssr / double(n - 2) / sxx) : 0.0;
    return f;
}

/// Least squares through the origin, y = b x. Returns (b, ssr).
inline std::pair<double, double> fit_through_origin(std::span<const double> x,
                                                    std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("fit_through_origin: bad input");
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_through_origin: degenerate abscissa");
    const double b = sxy / sxx;
    double ssr = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - b * x[i];
        ssr += r * r;
    }
    return {b, ssr};
}

/// Log-log power-law fit y = prefactor * x^exponent over positive data.
struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double exponent_stderr = 0.0;
};

inline PowerLawFit fit_power_law_points(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_power_law: size mismatch");
    if (x.size() < 3) throw std::invalid_argument("fit_power_law: need at least 3 points");
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("fit_power_law: nonpositive value in window");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    const LineFit f = fit_line(lx, ly);
    return {f.slope, std::exp(f.intercept), f.slope_stderr};
}

} // namespace qsaw
