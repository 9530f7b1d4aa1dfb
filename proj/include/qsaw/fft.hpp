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

#include <bit>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace qsaw::detail {

/// Twiddle factors exp(2*pi*i*j/n) for j < n/2, computed once per size per
/// thread (registers may be processed from several threads at once).
inline const std::vector<std::complex<double>>& twiddle_table(std::size_t n) {
    thread_local std::size_t cached_n = 0;
    thread_local std::vector<std::complex<double>> table;
    if (cached_n != n) {
        table.resize(n / 2);
        for (std::size_t j = 0; j < n / 2; ++j) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(n);
            table[j] = {std::cos(phi), std::sin(phi)};
        }
        cached_n = n;
    }
    return table;
}

/// In-place radix-2 transform: a[k] <- sum_j a[j] * exp(sign*2*pi*i*j*k/n).
/// n must be a power of two. Unnormalized.
inline void fft_inplace(std::span<std::complex<double>> a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size not a power of two");
    if (n == 1) return;

    // bit-reversal reorder
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto& tw = twiddle_table(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> w = tw[j * stride];
                if (sign < 0) w = std::conj(w);
                const auto u = a[base + j];
                const auto v = a[base + j + len / 2] * w;
                a[base + j] = u + v;
                a[base + j + len / 2] = u - v;
            }
        }
    }
}

} // namespace qsaw::detail
