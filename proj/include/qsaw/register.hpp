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
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsaw/params.hpp"

namespace qsaw {

using cplx = std::complex<double>;

enum class Basis { momentum, angle };

/// 2^{n_q} complex amplitudes. In the momentum basis, index m holds the
/// amplitude of momentum n = m - N/2; in the angle basis, index l holds the
/// amplitude at theta_l = 2*pi*l/N. Bit j of an index is qubit j.
struct QuantumRegister {
    int n_q = 0;
    Basis basis = Basis::momentum;
    std::vector<cplx> amp;

    QuantumRegister() = default;
    QuantumRegister(int qubits, Basis b) : n_q(qubits), basis(b) {
        if (qubits < 1 || qubits > 24)
            throw std::invalid_argument("QuantumRegister: n_q out of range");
        amp.assign(std::size_t{1} << qubits, cplx{0.0, 0.0});
    }

    std::size_t size() const { return amp.size(); }
};

/// |psi(0)> = |n0>: amplitude 1 at basis index m = n0 + N/2.
inline QuantumRegister init_momentum_eigenstate(const SawtoothParams& params) {
    QuantumRegister reg(params.n_q, Basis::momentum);
    reg.amp[static_cast<std::size_t>(params.m0())] = cplx{1.0, 0.0};
    return reg;
}

inline void check_compatible(const QuantumRegister& a, const QuantumRegister& b) {
    if (a.n_q != b.n_q) throw std::invalid_argument("register dimension mismatch");
    if (a.basis != b.basis) throw std::invalid_argument("register basis mismatch");
}

inline cplx inner_product(const QuantumRegister& a, const QuantumRegister& b) {
    check_compatible(a, b);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a.amp[i]) * b.amp[i];
    return acc;
}

inline double norm(const QuantumRegister& reg) {
    double acc = 0.0;
    for (const auto& c : reg.amp) acc += std::norm(c);
    return std::sqrt(acc);
}

/// Raw little-endian (Re, Im) float64 pairs, index order.
inline void save_register(const QuantumRegister& reg, const std::string& path) {
    static_assert(std::endian::native == std::endian::little,
                  "register snapshots assume a little-endian host");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_register: cannot open " + path);
    for (const auto& c : reg.amp) {
        const double re = c.real(), im = c.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
    if (!out) throw std::runtime_error("save_register: write failed: " + path);
}

inline QuantumRegister load_register(int n_q, Basis basis, const std::string& path) {
    QuantumRegister reg(n_q, basis);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_register: cannot open " + path);
    for (auto& c : reg.amp) {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), sizeof re);
        in.read(reinterpret_cast<char*>(&im), sizeof im);
        c = cplx{re, im};
    }
    if (!in) throw std::runtime_error("load_register: truncated file: " + path);
    return reg;
}

/// Debug dump, one line per basis index: m,Re,Im.
inline void save_register_csv(const QuantumRegister& reg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_register_csv: cannot open " + path);
    out << "m,re,im\n";
    char buf[80];
    for (std::size_t m = 0; m < reg.size(); ++m) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", m, reg.amp[m].real(),
                      reg.amp[m].imag());
        out << buf;
    }
}

} // namespace qsaw
