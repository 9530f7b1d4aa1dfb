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

#include <stdexcept>
#include <vector>

#include "qsaw/gates.hpp"
#include "qsaw/lattice.hpp"

namespace qsaw {

struct RoutingReport {
    std::size_t two_qubit_gates = 0;
    std::size_t swaps_added = 0;
    /// Sum over two-qubit gates of the operand Manhattan distance; the swap
    /// count per gate is 2*(distance - 1) less any hops through empty sites.
    std::size_t distance_sum = 0;
    double mean_swaps_per_two_qubit() const {
        return two_qubit_gates ? double(swaps_added) / double(two_qubit_gates) : 0.0;
    }
    double mean_operand_distance() const {
        return two_qubit_gates ? double(distance_sum) / double(two_qubit_gates) : 0.0;
    }
};

struct RoutedCircuit {
    Circuit circuit;
    RoutingReport report;
};

namespace detail {

/// Tracks which logical wire's state currently sits at each lattice site.
/// Physical swaps between two occupied sites are emitted as Swap gates on
/// the wires involved; a move into an empty site is a classical relabeling
/// and emits nothing.
class Placement {
  public:
    explicit Placement(const LatticeLayout& layout) : layout_(layout), wire_at_(layout.sites(), -1) {
        for (int q = 0; q < layout.n_q; ++q) wire_at_[q] = q;
    }

    int site_of(int wire) const {
        for (int s = 0; s < layout_.sites(); ++s)
            if (wire_at_[s] == wire) return s;
        throw std::logic_error("Placement: wire not found");
    }

    int wire_at(int site) const { return wire_at_[site]; }

    /// Move the content at `from` to the adjacent site `to`. When `to` is
    /// occupied this emits a register swap on the two wires; the emitted
    /// gate exactly compensates the physical exchange, so the site-to-wire
    /// map stays fixed. A move into an empty site emits nothing and only
    /// relabels.
    std::vector<Gate> hop(int from, int to) {
        std::vector<Gate> out;
        if (wire_at_[to] >= 0) {
            out.push_back(Gate::swap(wire_at_[from], wire_at_[to]));
        } else {
            std::swap(wire_at_[from], wire_at_[to]);
        }
        return out;
    }

  private:
    const LatticeLayout& layout_;
    std::vector<int> wire_at_;
};

/// Next site one step from `s` toward `target`, rows first, then columns.
inline int step_toward(const LatticeLayout& layout, int s, int target) {
    const int r = layout.row(s), c = layout.col(s);
    const int tr = layout.row(target), tc = layout.col(target);
    if (r != tr) return (r < tr ? (r + 1) : (r - 1)) * layout.cols + c;
    return r * layout.cols + (c < tc ? c + 1 : c - 1);
}

} // namespace detail

/// Rewrite a circuit for nearest-neighbor execution: each two-qubit gate
/// between non-adjacent operands is bracketed by a deterministic swap chain
/// that walks the second operand toward the first (rows first, then
/// columns) and is undone afterwards, so the placement is restored after
/// every gate and the routed circuit equals the input as a unitary.
inline RoutedCircuit route(const Circuit& circuit, const LatticeLayout& layout) {
    if (layout.n_q < circuit.n_q)
        throw std::invalid_argument("route: layout does not cover the circuit qubits");
    RoutedCircuit out;
    out.circuit.n_q = circuit.n_q;
    out.circuit.bit_reversed_output = circuit.bit_reversed_output;

    detail::Placement placement(layout);
    for (const auto& g : circuit.gates) {
        if (!g.is_two_qubit()) {
            out.circuit.gates.push_back(g);
            continue;
        }
        ++out.report.two_qubit_gates;
        const int s1 = placement.site_of(g.q1);
        int s_moving = placement.site_of(g.q2);
        out.report.distance_sum += static_cast<std::size_t>(layout.manhattan(s1, s_moving));

        std::vector<std::pair<int, int>> chain; // (from, to) hops, in order
        while (!layout.adjacent(s_moving, s1)) {
            const int next = detail::step_toward(layout, s_moving, s1);
            for (const auto& sw : placement.hop(s_moving, next)) {
                out.circuit.gates.push_back(sw);
                ++out.report.swaps_added;
            }
            chain.emplace_back(s_moving, next);
            s_moving = next;
        }

        Gate placed = g;
        placed.q1 = placement.wire_at(s1);
        placed.q2 = placement.wire_at(s_moving);
        out.circuit.gates.push_back(placed);

        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            for (const auto& sw : placement.hop(it->second, it->first)) {
                out.circuit.gates.push_back(sw);
                ++out.report.swaps_added;
            }
        }
    }
    return out;
}

} // namespace qsaw
