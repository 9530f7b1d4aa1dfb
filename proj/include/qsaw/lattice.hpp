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
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsaw {

/// Rectangular nearest-neighbor lattice. Qubit q sits at site q, sites are
/// numbered row-major; sites >= n_q are unoccupied. Unoccupied sites carry
/// no qubit and do not block routing paths.
struct LatticeLayout {
    int rows = 1;
    int cols = 1;
    int n_q = 1;

    LatticeLayout() = default;
    LatticeLayout(int r, int c, int qubits) : rows(r), cols(c), n_q(qubits) {
        if (r < 1 || c < 1 || qubits < 1 || r * c < qubits)
            throw std::invalid_argument("LatticeLayout: placement does not fit");
    }

    int sites() const { return rows * cols; }
    int row(int site) const { return site / cols; }
    int col(int site) const { return site % cols; }
    bool occupied(int site) const { return site < n_q; }
    int manhattan(int s1, int s2) const {
        return std::abs(row(s1) - row(s2)) + std::abs(col(s1) - col(s2));
    }
    bool adjacent(int s1, int s2) const { return manhattan(s1, s2) == 1; }

    /// Nearest-neighbor edges between occupied sites, in deterministic
    /// row-major order (right edge, then down edge).
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int s = 0; s < sites(); ++s) {
            if (!occupied(s)) continue;
            if (col(s) + 1 < cols && occupied(s + 1)) out.emplace_back(s, s + 1);
            if (row(s) + 1 < rows && occupied(s + cols)) out.emplace_back(s, s + cols);
        }
        return out;
    }
};

/// Near-square layout for n_q qubits: rows is floor(sqrt(n_q)) or
/// ceil(sqrt(n_q)), whichever factorization minimizes |rows - cols| with
/// rows*cols >= n_q (ties: smaller area, then rows <= cols).
inline LatticeLayout choose_layout(int n_q) {
    if (n_q < 1) throw std::invalid_argument("choose_layout: n_q must be >= 1");
    const int lo = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n_q))));
    LatticeLayout best;
    bool have = false;
    for (int rows : {lo, lo + 1}) {
        if (rows < 1) continue;
        const int cols = (n_q + rows - 1) / rows;
        LatticeLayout cand(std::min(rows, cols), std::max(rows, cols), n_q);
        if (!have) {
            best = cand;
            have = true;
            continue;
        }
        const int d_cand = cand.cols - cand.rows, d_best = best.cols - best.rows;
        if (d_cand < d_best || (d_cand == d_best && cand.sites() < best.sites())) best = cand;
    }
    return best;
}

} // namespace qsaw
