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

#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsaw/io.hpp"

namespace qsaw {

enum class Experiment {
    husimi_panel,
    fidelity_trace,
    tf_scaling,
    classical_diffusion,
    oracle_check,
};

inline std::string to_string(Experiment e) {
    switch (e) {
        case Experiment::husimi_panel: return "husimi-panel";
        case Experiment::fidelity_trace: return "fidelity-trace";
        case Experiment::tf_scaling: return "tf-scaling";
        case Experiment::classical_diffusion: return "classical-diffusion";
        case Experiment::oracle_check: return "oracle-check";
    }
    throw std::logic_error("unknown experiment");
}

inline Experiment experiment_from_string(const std::string& s) {
    if (s == "husimi-panel") return Experiment::husimi_panel;
    if (s == "fidelity-trace") return Experiment::fidelity_trace;
    if (s == "tf-scaling") return Experiment::tf_scaling;
    if (s == "classical-diffusion") return Experiment::classical_diffusion;
    if (s == "oracle-check") return Experiment::oracle_check;
    throw std::invalid_argument("unknown experiment: " + s);
}

/// Fully self-describing run configuration; rerunning an emitted config
/// reproduces outputs byte-for-byte.
struct RunConfig {
    Experiment experiment = Experiment::oracle_check;

    // quantum instance
    int n_q = 8;
    std::vector<int> nq_list;
    double K = -0.1;

    // imperfections
    std::string error_mode = "static"; ///< none | static | noisy-detuning | random-rotation
    double epsilon = 0.0;
    std::vector<double> epsilon_list;
    bool j_equals_delta = false;
    double tau_g = 1.0;
    bool rotate_all_qubits = false;

    // time control
    int t_max = 100;
    int window_lo = 950;
    int window_hi = 1000;

    // grids
    int grid_theta = 64;
    int grid_p = 64;

    // classical ensembles
    std::uint64_t trajectories = 100000;
    double noise_amplitude = 0.0;

    // statistics
    std::uint64_t seed = 1;
    int realizations = 20;
    double fidelity_threshold = 0.9;
    std::string scan = "epsilon"; ///< tf-scaling: epsilon | nq

    // execution
    std::string out_dir = "out";
    int jobs = 0;

    bool operator==(const RunConfig&) const = default;
};

namespace detail {

inline std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += io::format_double(v[i]);
    }
    return s;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

} // namespace detail

/// Flat `key = value` text; keys in fixed order, doubles at full precision.
inline std::string emit_config(const RunConfig& c) {
    std::ostringstream out;
    out << "experiment = " << to_string(c.experiment) << "\n";
    out << "n_q = " << c.n_q << "\n";
    out << "nq_list = " << detail::join_ints(c.nq_list) << "\n";
    out << "K = " << io::format_double(c.K) << "\n";
    out << "error_mode = " << c.error_mode << "\n";
    out << "epsilon = " << io::format_double(c.epsilon) << "\n";
    out << "epsilon_list = " << detail::join_doubles(c.epsilon_list) << "\n";
    out << "j_equals_delta = " << (c.j_equals_delta ? 1 : 0) << "\n";
    out << "tau_g = " << io::format_double(c.tau_g) << "\n";
    out << "rotate_all_qubits = " << (c.rotate_all_qubits ? 1 : 0) << "\n";
    out << "t_max = " << c.t_max << "\n";
    out << "window_lo = " << c.window_lo << "\n";
    out << "window_hi = " << c.window_hi << "\n";
    out << "grid_theta = " << c.grid_theta << "\n";
    out << "grid_p = " << c.grid_p << "\n";
    out << "trajectories = " << c.trajectories << "\n";
    out << "noise_amplitude = " << io::format_double(c.noise_amplitude) << "\n";
    out << "seed = " << c.seed << "\n";
    out << "realizations = " << c.realizations << "\n";
    out << "fidelity_threshold = " << io::format_double(c.fidelity_threshold) << "\n";
    out << "scan = " << c.scan << "\n";
    out << "out_dir = " << c.out_dir << "\n";
    out << "jobs = " << c.jobs << "\n";
    return out.str();
}

inline RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = detail::trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string val = detail::trim(stripped.substr(eq + 1));

        auto as_int = [&] { return std::stoi(val); };
        auto as_u64 = [&] { return std::stoull(val); };
        auto as_double = [&] { return std::strtod(val.c_str(), nullptr); };
        auto as_bool = [&] { return val == "1" || val == "true"; };

        if (key == "experiment") c.experiment = experiment_from_string(val);
        else if (key == "n_q") c.n_q = as_int();
        else if (key == "nq_list") {
            c.nq_list.clear();
            for (const auto& tok : detail::split_list(val)) c.nq_list.push_back(std::stoi(tok));
        } else if (key == "K") c.K = as_double();
        else if (key == "error_mode") c.error_mode = val;
        else if (key == "epsilon") c.epsilon = as_double();
        else if (key == "epsilon_list") {
            c.epsilon_list.clear();
            for (const auto& tok : detail::split_list(val))
                c.epsilon_list.push_back(std::strtod(tok.c_str(), nullptr));
        } else if (key == "j_equals_delta") c.j_equals_delta = as_bool();
        else if (key == "tau_g") c.tau_g = as_double();
        else if (key == "rotate_all_qubits") c.rotate_all_qubits = as_bool();
        else if (key == "t_max") c.t_max = as_int();
        else if (key == "window_lo") c.window_lo = as_int();
        else if (key == "window_hi") c.window_hi = as_int();
        else if (key == "grid_theta") c.grid_theta = as_int();
        else if (key == "grid_p") c.grid_p = as_int();
        else if (key == "trajectories") c.trajectories = as_u64();
        else if (key == "noise_amplitude") c.noise_amplitude = as_double();
        else if (key == "seed") c.seed = as_u64();
        else if (key == "realizations") c.realizations = as_int();
        else if (key == "fidelity_threshold") c.fidelity_threshold = as_double();
        else if (key == "scan") c.scan = val;
        else if (key == "out_dir") c.out_dir = val;
        else if (key == "jobs") c.jobs = as_int();
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return c;
}

} // namespace qsaw
