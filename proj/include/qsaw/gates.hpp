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

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsaw {

enum class GateKind {
    hadamard,         // H q
    phase,            // diag(1, e^{i phi}) on q
    controlled_phase, // e^{i phi} on |11> of (q1, q2); symmetric
    swap,             // exchange q1, q2
    global_phase,     // e^{i phi} on everything; zero-duration bookkeeping
    compensation,     // one-qubit rotation cancelling the mean level spacing
};

struct Gate {
    GateKind kind = GateKind::hadamard;
    int q1 = -1;
    int q2 = -1;
    double angle = 0.0;

    static Gate hadamard(int q) { return {GateKind::hadamard, q, -1, 0.0}; }
    static Gate phase(int q, double phi) { return {GateKind::phase, q, -1, phi}; }
    static Gate controlled_phase(int qa, int qb, double phi) {
        return {GateKind::controlled_phase, qa, qb, phi};
    }
    static Gate swap(int qa, int qb) { return {GateKind::swap, qa, qb, 0.0}; }
    static Gate global_phase(double phi) { return {GateKind::global_phase, -1, -1, phi}; }
    static Gate compensation(int q) { return {GateKind::compensation, q, -1, 0.0}; }

    bool is_two_qubit() const {
        return kind == GateKind::controlled_phase || kind == GateKind::swap;
    }
    /// Global phases are classical bookkeeping: no duration, no gate count.
    bool is_physical() const { return kind != GateKind::global_phase; }

    bool operator==(const Gate&) const = default;
};

struct GateCounts {
    std::size_t hadamard = 0, phase = 0, controlled_phase = 0, swap = 0, global_phase = 0,
                compensation = 0;
    std::size_t single_qubit() const { return hadamard + phase + compensation; }
    std::size_t two_qubit() const { return controlled_phase + swap; }
    /// Physical gates only; global phases excluded.
    std::size_t total() const { return single_qubit() + two_qubit(); }
};

/// Ordered gate list. If `bit_reversed_output` is set the circuit's action
/// ends with a classical relabeling of the basis indices by bit reversal
/// (no gates); builders that compose circuits absorb the relabeling into
/// the addressing of later gates instead.
struct Circuit {
    int n_q = 0;
    std::vector<Gate> gates;
    bool bit_reversed_output = false;

    GateCounts counts() const {
        GateCounts c;
        for (const auto& g : gates) {
            switch (g.kind) {
                case GateKind::hadamard: ++c.hadamard; break;
                case GateKind::phase: ++c.phase; break;
                case GateKind::controlled_phase: ++c.controlled_phase; break;
                case GateKind::swap: ++c.swap; break;
                case GateKind::global_phase: ++c.global_phase; break;
                case GateKind::compensation: ++c.compensation; break;
            }
        }
        return c;
    }

    void append(const Circuit& other) {
        if (other.n_q != n_q) throw std::invalid_argument("Circuit::append: width mismatch");
        if (bit_reversed_output || other.bit_reversed_output)
            throw std::invalid_argument("Circuit::append: cannot append across a relabeling");
        gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    }

    /// Same circuit with every qubit index passed through `f`.
    template <typename F>
    Circuit remapped(F&& f) const {
        Circuit out = *this;
        for (auto& g : out.gates) {
            if (g.q1 >= 0) g.q1 = f(g.q1);
            if (g.q2 >= 0) g.q2 = f(g.q2);
        }
        return out;
    }

    /// Adjoint gate list: reversed order, conjugated angles.
    Circuit adjoint_gates() const {
        if (bit_reversed_output)
            throw std::invalid_argument("Circuit::adjoint_gates: relabeled circuit");
        Circuit out;
        out.n_q = n_q;
        out.gates.reserve(gates.size());
        for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
            Gate g = *it;
            g.angle = -g.angle;
            out.gates.push_back(g);
        }
        return out;
    }
};

/// The nominal per-iteration budget 3 n_q^2 + n_q, which tallies each
/// diagonal quadratic-phase stage as n_q^2 gate slots and the two QFTs at
/// n_q + n_q(n_q -/+ 1)/2. The emitted circuit stays at or below it.
inline std::size_t paper_convention_gate_count(int n_q) {
    const auto n = static_cast<std::size_t>(n_q);
    return 3 * n * n + n;
}

// --- wire format: one gate per line, `KIND q1 [q2] [angle-as-hex-float]` ---

inline std::string dump_circuit(const Circuit& circuit) {
    std::string out;
    char buf[96];
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::hadamard: std::snprintf(buf, sizeof buf, "H %d\n", g.q1); break;
            case GateKind::phase: std::snprintf(buf, sizeof buf, "P %d %a\n", g.q1, g.angle); break;
            case GateKind::controlled_phase:
                std::snprintf(buf, sizeof buf, "CP %d %d %a\n", g.q1, g.q2, g.angle);
                break;
            case GateKind::swap: std::snprintf(buf, sizeof buf, "SWAP %d %d\n", g.q1, g.q2); break;
            case GateKind::global_phase: std::snprintf(buf, sizeof buf, "GP %a\n", g.angle); break;
            case GateKind::compensation: std::snprintf(buf, sizeof buf, "CR %d\n", g.q1); break;
        }
        out += buf;
    }
    if (circuit.bit_reversed_output) out += "BITREV\n";
    return out;
}

inline Circuit parse_circuit(const std::string& text, int n_q) {
    Circuit circuit;
    circuit.n_q = n_q;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        auto read_int = [&] {
            int v;
            if (!(ls >> v)) throw std::invalid_argument("parse_circuit: bad line: " + line);
            return v;
        };
        auto read_angle = [&] {
            std::string tok;
            if (!(ls >> tok)) throw std::invalid_argument("parse_circuit: bad line: " + line);
            return std::strtod(tok.c_str(), nullptr);
        };
        if (kind == "H") {
            circuit.gates.push_back(Gate::hadamard(read_int()));
        } else if (kind == "P") {
            const int q = read_int();
            circuit.gates.push_back(Gate::phase(q, read_angle()));
        } else if (kind == "CP") {
            const int a = read_int(), b = read_int();
            circuit.gates.push_back(Gate::controlled_phase(a, b, read_angle()));
        } else if (kind == "SWAP") {
            const int a = read_int(), b = read_int();
            circuit.gates.push_back(Gate::swap(a, b));
        } else if (kind == "GP") {
            circuit.gates.push_back(Gate::global_phase(read_angle()));
        } else if (kind == "CR") {
            circuit.gates.push_back(Gate::compensation(read_int()));
        } else if (kind == "BITREV") {
            circuit.bit_reversed_output = true;
        } else {
            throw std::invalid_argument("parse_circuit: unknown gate kind: " + kind);
        }
    }
    return circuit;
}

} // namespace qsaw
