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

#include "qsaw/gates.hpp"
#include "qsaw/register.hpp"

namespace qsaw {

namespace detail {

inline void check_qubit(const QuantumRegister& reg, int q) {
    if (q < 0 || q >= reg.n_q) throw std::out_of_range("gate qubit index out of range");
}

inline constexpr double inv_sqrt2 = 0.70710678118654752440;

/// Iterate all index pairs (i0, i1) differing only in bit q.
template <typename F>
void for_amplitude_pairs(std::size_t n, int q, F&& body) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t base = 0; base < n; base += 2 * bit)
        for (std::size_t i = base; i < base + bit; ++i) body(i, i | bit);
}

} // namespace detail

inline void apply_gate(QuantumRegister& reg, const Gate& gate) {
    auto& a = reg.amp;
    const std::size_t n = a.size();
    switch (gate.kind) {
        case GateKind::hadamard: {
            detail::check_qubit(reg, gate.q1);
            detail::for_amplitude_pairs(n, gate.q1, [&](std::size_t i0, std::size_t i1) {
                const cplx u = a[i0], v = a[i1];
                a[i0] = (u + v) * detail::inv_sqrt2;
                a[i1] = (u - v) * detail::inv_sqrt2;
            });
            break;
        }
        case GateKind::phase: {
            detail::check_qubit(reg, gate.q1);
            const cplx w = std::polar(1.0, gate.angle);
            const std::size_t bit = std::size_t{1} << gate.q1;
            for (std::size_t i = 0; i < n; ++i)
                if (i & bit) a[i] *= w;
            break;
        }
        case GateKind::controlled_phase: {
            detail::check_qubit(reg, gate.q1);
            detail::check_qubit(reg, gate.q2);
            if (gate.q1 == gate.q2)
                throw std::invalid_argument("controlled_phase: identical qubits");
            const cplx w = std::polar(1.0, gate.angle);
            const std::size_t mask =
                (std::size_t{1} << gate.q1) | (std::size_t{1} << gate.q2);
            for (std::size_t i = 0; i < n; ++i)
                if ((i & mask) == mask) a[i] *= w;
            break;
        }
        case GateKind::swap: {
            detail::check_qubit(reg, gate.q1);
            detail::check_qubit(reg, gate.q2);
            if (gate.q1 == gate.q2) break;
            const std::size_t b1 = std::size_t{1} << gate.q1;
            const std::size_t b2 = std::size_t{1} << gate.q2;
            for (std::size_t i = 0; i < n; ++i)
                if ((i & b1) && !(i & b2)) std::swap(a[i], a[(i ^ b1) | b2]);
            break;
        }
        case GateKind::global_phase: {
            const cplx w = std::polar(1.0, gate.angle);
            for (auto& c : a) c *= w;
            break;
        }
        case GateKind::compensation: {
            // The mean level spacing is cancelled exactly by this rotation,
            // so after compensation it acts as the identity.
            detail::check_qubit(reg, gate.q1);
            break;
        }
    }
}

inline void apply_circuit(QuantumRegister& reg, const Circuit& circuit) {
    if (circuit.n_q != reg.n_q) throw std::invalid_argument("apply_circuit: width mismatch");
    for (const auto& g : circuit.gates) apply_gate(reg, g);
    if (circuit.bit_reversed_output) {
        std::vector<cplx> out(reg.size());
        for (std::size_t i = 0; i < reg.size(); ++i) {
            std::size_t r = 0;
            for (int b = 0; b < reg.n_q; ++b)
                if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (reg.n_q - 1 - b);
            out[i] = reg.amp[r];
        }
        reg.amp = std::move(out);
    }
}

/// Column-by-column dense unitary of a circuit; for validation at small n_q.
inline std::vector<std::vector<cplx>> dense_unitary(const Circuit& circuit, Basis basis = Basis::momentum) {
    const std::size_t n = std::size_t{1} << circuit.n_q;
    std::vector<std::vector<cplx>> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        QuantumRegister reg(circuit.n_q, basis);
        reg.amp[j] = cplx{1.0, 0.0};
        apply_circuit(reg, circuit);
        cols[j] = reg.amp;
    }
    return cols;
}

} // namespace qsaw
