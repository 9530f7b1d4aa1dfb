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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsaw::io {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

/// Two-column CSV with header, e.g. (t, m2) or (t, f).
inline void write_series_csv(const std::filesystem::path& path, const std::string& xname,
                             const std::string& yname, std::span<const double> y,
                             int x_start = 0) {
    auto out = open_out(path);
    out << xname << "," << yname << "\n";
    for (std::size_t i = 0; i < y.size(); ++i)
        out << (x_start + static_cast<int>(i)) << "," << format_double(y[i]) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline void write_table_csv(const std::filesystem::path& path,
                            const std::vector<std::string>& header,
                            const std::vector<std::vector<double>>& rows) {
    auto out = open_out(path);
    for (std::size_t c = 0; c < header.size(); ++c)
        out << header[c] << (c + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << format_double(row[c]) << (c + 1 < row.size() ? "," : "\n");
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

/// Plain-text matrix, one row per line, space-separated. Row 0 is the top
/// row of the image convention (largest p first for phase-space grids).
inline void write_matrix_txt(const std::filesystem::path& path, int n_rows, int n_cols,
                             std::span<const double> values, bool flip_rows = true) {
    if (values.size() != static_cast<std::size_t>(n_rows) * n_cols)
        throw std::invalid_argument("write_matrix_txt: shape mismatch");
    auto out = open_out(path);
    for (int r = 0; r < n_rows; ++r) {
        const int src = flip_rows ? n_rows - 1 - r : r;
        for (int c = 0; c < n_cols; ++c) {
            out << format_double(values[static_cast<std::size_t>(src) * n_cols + c]);
            out << (c + 1 < n_cols ? ' ' : '\n');
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

/// Portable graymap (ASCII P2, 16-bit), scaled to the matrix maximum.
inline void write_pgm(const std::filesystem::path& path, int n_rows, int n_cols,
                      std::span<const double> values, bool flip_rows = true) {
    if (values.size() != static_cast<std::size_t>(n_rows) * n_cols)
        throw std::invalid_argument("write_pgm: shape mismatch");
    const double vmax = *std::max_element(values.begin(), values.end());
    auto out = open_out(path);
    out << "P2\n" << n_cols << " " << n_rows << "\n65535\n";
    for (int r = 0; r < n_rows; ++r) {
        const int src = flip_rows ? n_rows - 1 - r : r;
        for (int c = 0; c < n_cols; ++c) {
            const double v = values[static_cast<std::size_t>(src) * n_cols + c];
            const int g = vmax > 0.0 ? static_cast<int>(65535.0 * v / vmax + 0.5) : 0;
            out << g << (c + 1 < n_cols ? ' ' : '\n');
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    auto out = open_out(path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace qsaw::io
