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
#include <atomic>
#include <filesystem>
#include <functional>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qsaw/analysis.hpp"
#include "qsaw/circuit_builder.hpp"
#include "qsaw/classical.hpp"
#include "qsaw/config.hpp"
#include "qsaw/error_model.hpp"
#include "qsaw/husimi.hpp"
#include "qsaw/io.hpp"
#include "qsaw/routing.hpp"

namespace qsaw {

using json = nlohmann::json;

/// Per-realization seeds derived from the master seed; the realization
/// index is recorded next to every derived quantity.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return rng::mix64(rng::mix64(master) + rng::mix64(index));
}

/// Imperfection strength for the phase-space panels: the quoted values at
/// n_q = 6, 9, 16 and the n_q^{-3} rule they follow elsewhere.
inline double husimi_epsilon_for(int n_q) {
    if (n_q == 6) return 2e-3;
    if (n_q == 9) return 6e-4;
    if (n_q == 16) return 1e-4;
    const double x = static_cast<double>(n_q);
    return 0.43 / (x * x * x);
}

namespace detail {

template <typename T>
std::vector<T> parallel_map(int jobs, int n, const std::function<T(int)>& fn) {
    std::vector<T> out(static_cast<std::size_t>(n));
    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                out[static_cast<std::size_t>(i)] = fn(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

inline double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace detail

/// Routed map circuit plus its lattice, built once per instance.
struct CompiledMap {
    SawtoothParams params;
    LatticeLayout layout;
    Circuit routed;
    RoutingReport report;
    std::size_t n_g = 0; ///< physical routed gate count (no global phases)

    static CompiledMap make(const SawtoothParams& params) {
        CompiledMap c;
        c.params = params;
        c.layout = choose_layout(params.n_q);
        auto routed = route(build_map_circuit(params), c.layout);
        c.routed = std::move(routed.circuit);
        c.report = routed.report;
        c.n_g = c.routed.counts().total();
        return c;
    }
};

/// Evolve one imperfect run and record the fidelity against the ideal
/// evolution; stops early once f drops below `stop_below` (0 disables).
inline FidelityTrace compute_fidelity_trace(const CompiledMap& map, const ErrorMode& mode,
                                            int t_max, std::uint64_t seed,
                                            double stop_below = 0.0) {
    FidelityTrace trace;
    trace.n_q = map.params.n_q;
    trace.epsilon = mode.epsilon();
    trace.seed = seed;
    switch (mode.kind) {
        case ErrorModeKind::none: trace.mode = "none"; break;
        case ErrorModeKind::static_imperfections:
            trace.mode = mode.coupling == 0.0 ? "static-j0" : "static-jdelta";
            break;
        case ErrorModeKind::noisy_detuning: trace.mode = "noisy-detuning"; break;
        case ErrorModeKind::random_rotation: trace.mode = "random-rotation"; break;
    }
    run_imperfect_evolution(map.params, map.routed, map.layout, mode, t_max, seed,
                            [&](int, const QuantumRegister& psi, const QuantumRegister& ideal) {
                                const double f = fidelity(ideal, psi);
                                trace.f.push_back(f);
                                return !(stop_below > 0.0 && f < stop_below);
                            });
    return trace;
}

/// t_f for one disorder realization; runs only as long as needed.
inline double compute_fidelity_time(const CompiledMap& map, const ErrorMode& mode, int t_cap,
                                    std::uint64_t seed, double c) {
    const FidelityTrace trace = compute_fidelity_trace(map, mode, t_cap, seed, c);
    return fidelity_time(trace, c);
}

/// Window-averaged Husimi grids of the ideal and imperfect runs, evolved
/// side by side, plus the ideal run's time-averaged momentum second moment.
struct HusimiPair {
    HusimiGrid perfect;
    HusimiGrid imperfect;
    double second_moment_perfect = 0.0;
    int frames = 0;
};

inline HusimiPair compute_husimi_pair(const CompiledMap& map, const ErrorMode& mode,
                                      int window_lo, int window_hi, int n_theta, int n_p,
                                      std::uint64_t seed) {
    if (window_lo > window_hi)
        throw std::invalid_argument("compute_husimi_pair: empty window");
    HusimiPair out;
    bool first = true;
    run_imperfect_evolution(
        map.params, map.routed, map.layout, mode, window_hi, seed,
        [&](int t, const QuantumRegister& psi, const QuantumRegister& ideal) {
            if (t < window_lo) return true;
            auto h_perfect = husimi(ideal, map.params, n_theta, n_p);
            auto h_imperfect = husimi(psi, map.params, n_theta, n_p);
            if (first) {
                out.perfect = h_perfect;
                out.imperfect = h_imperfect;
                first = false;
            } else {
                out.perfect.accumulate(h_perfect, 1.0);
                out.imperfect.accumulate(h_imperfect, 1.0);
            }
            out.second_moment_perfect +=
                quantum_second_moment(ideal, map.params, map.params.p0());
            ++out.frames;
            return true;
        });
    for (auto& v : out.perfect.values) v /= out.frames;
    for (auto& v : out.imperfect.values) v /= out.frames;
    out.second_moment_perfect /= out.frames;
    return out;
}

inline ErrorMode mode_from_config(const RunConfig& cfg, double epsilon) {
    if (cfg.error_mode == "none") return ErrorMode::none();
    if (cfg.error_mode == "static")
        return ErrorMode::static_mode(epsilon, cfg.tau_g, cfg.j_equals_delta);
    if (cfg.error_mode == "noisy-detuning") return ErrorMode::noisy_detuning(epsilon, cfg.tau_g);
    if (cfg.error_mode == "random-rotation")
        return ErrorMode::random_rotation(epsilon, cfg.rotate_all_qubits);
    throw std::invalid_argument("unknown error_mode: " + cfg.error_mode);
}

// ---------------------------------------------------------------------------
// presets
// ---------------------------------------------------------------------------

inline RunConfig default_config(Experiment e) {
    RunConfig c;
    c.experiment = e;
    switch (e) {
        case Experiment::oracle_check:
            c.n_q = 8;
            c.t_max = 100;
            break;
        case Experiment::classical_diffusion:
            c.trajectories = 100000;
            c.t_max = 1000;
            c.noise_amplitude = 1e-3; // used for the density panel only
            break;
        case Experiment::fidelity_trace:
            c.n_q = 9;
            c.t_max = 1000;
            c.epsilon_list = {1e-5, 3e-5, 1e-4, 3e-4, 1e-3};
            break;
        case Experiment::tf_scaling:
            c.n_q = 9;
            c.realizations = 20;
            c.epsilon = 1e-4;
            c.nq_list = {4, 5, 6, 7, 8, 9, 10};
            // epsilon grids are per mode; see run_tf_scaling
            break;
        case Experiment::husimi_panel:
            c.nq_list = {6, 9};
            c.window_lo = 950;
            c.window_hi = 1000;
            c.t_max = 1000;
            break;
    }
    return c;
}

namespace detail {

inline json run_oracle_check(const RunConfig& cfg) {
    const auto params = SawtoothParams::make_default(cfg.n_q, cfg.K);
    const auto map = CompiledMap::make(params);
    auto trace = compute_fidelity_trace(map, ErrorMode::none(), cfg.t_max, cfg.seed);
    double max_inf = 0.0;
    for (double f : trace.f) max_inf = std::max(max_inf, 1.0 - f);
    std::vector<double> inf(trace.f.size());
    for (std::size_t i = 0; i < trace.f.size(); ++i) inf[i] = 1.0 - trace.f[i];
    io::write_series_csv(std::filesystem::path(cfg.out_dir) / "oracle_infidelity.csv", "t",
                         "infidelity", inf);

    const auto counts = map.routed.counts();
    json j;
    j["max_infidelity"] = max_inf;
    j["iterations"] = cfg.t_max;
    j["n_q"] = cfg.n_q;
    j["gate_counts"] = {{"hadamard", counts.hadamard},
                        {"phase", counts.phase},
                        {"controlled_phase", counts.controlled_phase},
                        {"swap", counts.swap},
                        {"total_physical", counts.total()},
                        {"paper_convention_budget", paper_convention_gate_count(cfg.n_q)}};
    j["routed_n_g"] = map.n_g;
    j["ok"] = max_inf < 1e-9;
    j["outputs"] = {"oracle_infidelity.csv"};
    return j;
}

inline json run_classical_diffusion(const RunConfig& cfg) {
    const std::filesystem::path out(cfg.out_dir);
    json j;
    j["outputs"] = json::array();

    auto run_case = [&](const std::string& name, double K, double p0, int t_max,
                        double noise) {
        EnsembleConfig ec;
        ec.count = cfg.trajectories;
        ec.K = K;
        ec.p0 = p0;
        ec.t_max = t_max;
        ec.noise_amplitude = noise;
        ec.seed = cfg.seed;
        auto moments = evolve_ensemble(ec, cfg.jobs);
        io::write_series_csv(out / ("m2_" + name + ".csv"), "t", "m2", moments.m2);
        j["outputs"].push_back("m2_" + name + ".csv");
        return moments;
    };

    {
        auto m = run_case("K2", 2.0, 0.0, std::min(cfg.t_max, 100), 0.0);
        const double d = fit_diffusion_coefficient(m, 10, std::min(cfg.t_max, 100));
        const double theory = (std::numbers::pi * std::numbers::pi / 3.0) * 4.0;
        j["normal_diffusion"] = {{"K", 2.0}, {"D", d}, {"D_theory", theory},
                                 {"ratio", d / theory}};
    }
    {
        auto m = run_case("K05", 0.5, 0.0, std::min(cfg.t_max, 100), 0.0);
        const double d = fit_diffusion_coefficient(m, 10, std::min(cfg.t_max, 100));
        const double theory = 3.3 * std::pow(0.5, 2.5);
        j["slow_diffusion"] = {{"K", 0.5}, {"D", d}, {"D_theory", theory},
                               {"ratio", d / theory}};
    }
    {
        const double p0 = 0.38 * two_pi;
        auto m = run_case("anomalous", -0.1, p0, cfg.t_max, 0.0);
        const auto fit = fit_power_law(m, 10, cfg.t_max);
        // fit-window sensitivity for the exponent
        const auto early = fit_power_law(m, 10, std::min(100, cfg.t_max));
        const auto late = fit_power_law(m, std::min(100, cfg.t_max), cfg.t_max);
        j["anomalous_diffusion"] = {{"K", -0.1},
                                    {"p0", p0},
                                    {"alpha", fit.exponent},
                                    {"alpha_stderr", fit.exponent_stderr},
                                    {"prefactor", fit.prefactor},
                                    {"alpha_window_early", early.exponent},
                                    {"alpha_window_late", late.exponent}};

        // density panel in the same regime, with round-off-style noise
        EnsembleConfig ec;
        ec.count = cfg.trajectories;
        ec.K = -0.1;
        ec.p0 = p0;
        ec.t_max = cfg.window_hi;
        ec.noise_amplitude = cfg.noise_amplitude;
        ec.seed = cfg.seed;
        auto density = classical_phase_density(ec, cfg.grid_theta, cfg.grid_p,
                                               std::min(cfg.window_lo, cfg.window_hi),
                                               cfg.window_hi, cfg.jobs);
        io::write_matrix_txt(out / "classical_density.txt", density.n_p, density.n_theta,
                             density.cells);
        io::write_pgm(out / "classical_density.pgm", density.n_p, density.n_theta,
                      density.cells);
        j["outputs"].push_back("classical_density.txt");
        j["outputs"].push_back("classical_density.pgm");
    }
    j["ok"] = true;
    return j;
}

inline json run_fidelity_trace(const RunConfig& cfg) {
    const std::filesystem::path out(cfg.out_dir);
    const auto params = SawtoothParams::make_default(cfg.n_q, cfg.K);
    const auto map = CompiledMap::make(params);

    struct Curve {
        double epsilon;
        bool j_equals_delta;
    };
    std::vector<Curve> curves;
    for (bool jd : {true, false})
        for (double eps : cfg.epsilon_list) curves.push_back({eps, jd});

    auto traces = parallel_map<FidelityTrace>(
        cfg.jobs, static_cast<int>(curves.size()), [&](int i) {
            const auto& cv = curves[static_cast<std::size_t>(i)];
            const auto mode = ErrorMode::static_mode(cv.epsilon, cfg.tau_g, cv.j_equals_delta);
            return compute_fidelity_trace(map, mode, cfg.t_max, cfg.seed);
        });

    json j;
    j["n_q"] = cfg.n_q;
    j["routed_n_g"] = map.n_g;
    j["curves"] = json::array();
    j["outputs"] = json::array();
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& cv = curves[i];
        char name[64];
        std::snprintf(name, sizeof name, "fidelity_%s_eps%.0e.csv",
                      cv.j_equals_delta ? "jdelta" : "j0", cv.epsilon);
        io::write_series_csv(out / name, "t", "f", traces[i].f);
        j["outputs"].push_back(name);
        j["curves"].push_back({{"epsilon", cv.epsilon},
                               {"j_equals_delta", cv.j_equals_delta},
                               {"file", name},
                               {"t_f", fidelity_time(traces[i], cfg.fidelity_threshold)}});
    }
    j["ok"] = true;
    return j;
}

inline json run_tf_scaling(const RunConfig& cfg) {
    const std::filesystem::path out(cfg.out_dir);
    json j;
    j["outputs"] = json::array();
    j["realizations"] = cfg.realizations;

    struct ModeSpec {
        std::string name;
        std::function<ErrorMode(double)> make;
        std::vector<double> epsilons;
        int t_cap;
    };

    if (cfg.scan == "epsilon") {
        const std::vector<double> eps_static =
            cfg.epsilon_list.empty() ? std::vector<double>{1e-5, 2e-5, 4e-5, 8e-5}
                                     : cfg.epsilon_list;
        const std::vector<double> eps_noisy =
            cfg.epsilon_list.empty() ? std::vector<double>{1e-3, 2e-3, 4e-3, 8e-3}
                                     : cfg.epsilon_list;
        std::vector<ModeSpec> modes = {
            {"static-j0",
             [&](double e) { return ErrorMode::static_mode(e, cfg.tau_g, false); }, eps_static,
             5000},
            {"static-jdelta",
             [&](double e) { return ErrorMode::static_mode(e, cfg.tau_g, true); }, eps_static,
             5000},
            {"noisy",
             [&](double e) { return ErrorMode::noisy_detuning(e, cfg.tau_g); }, eps_noisy,
             100000},
        };
        const auto params = SawtoothParams::make_default(cfg.n_q, cfg.K);
        const auto map = CompiledMap::make(params);
        j["n_q"] = cfg.n_q;
        j["routed_n_g"] = map.n_g;
        j["modes"] = json::array();
        for (const auto& ms : modes) {
            json jm;
            jm["name"] = ms.name;
            jm["points"] = json::array();
            std::vector<std::pair<double, double>> pts;
            std::vector<std::vector<double>> rows;
            for (double eps : ms.epsilons) {
                auto tfs = parallel_map<double>(cfg.jobs, cfg.realizations, [&](int r) {
                    return compute_fidelity_time(map, ms.make(eps), ms.t_cap,
                                                 derive_seed(cfg.seed, std::uint64_t(r)),
                                                 cfg.fidelity_threshold);
                });
                const double med = median(tfs);
                pts.emplace_back(eps, med);
                json jp;
                jp["epsilon"] = eps;
                jp["t_f_median"] = med;
                jp["t_f"] = tfs;
                jm["points"].push_back(jp);
                std::vector<double> row{eps, med};
                rows.push_back(row);
            }
            const auto fit = scaling_exponent(pts);
            jm["slope"] = fit.slope;
            jm["slope_stderr"] = fit.stderr_;
            const std::string file = "tf_vs_eps_" + ms.name + ".csv";
            io::write_table_csv(out / file, {"epsilon", "t_f_median"}, rows);
            j["outputs"].push_back(file);
            jm["file"] = file;
            j["modes"].push_back(jm);
        }
    } else if (cfg.scan == "nq") {
        json jm;
        jm["name"] = "static-j0";
        jm["epsilon"] = cfg.epsilon;
        jm["points"] = json::array();
        std::vector<std::pair<double, double>> pts;
        std::vector<std::vector<double>> rows;
        for (int n_q : cfg.nq_list) {
            const auto params = SawtoothParams::make_default(n_q, cfg.K);
            const auto map = CompiledMap::make(params);
            auto tfs = parallel_map<double>(cfg.jobs, cfg.realizations, [&](int r) {
                return compute_fidelity_time(map, ErrorMode::static_mode(cfg.epsilon, cfg.tau_g, false),
                                             5000, derive_seed(cfg.seed, std::uint64_t(r)),
                                             cfg.fidelity_threshold);
            });
            const double med = median(tfs);
            pts.emplace_back(static_cast<double>(n_q), med);
            json jp;
            jp["n_q"] = n_q;
            jp["routed_n_g"] = map.n_g;
            jp["t_f_median"] = med;
            jp["t_f"] = tfs;
            jm["points"].push_back(jp);
            rows.push_back({static_cast<double>(n_q), med});
        }
        const auto fit = scaling_exponent(pts);
        jm["slope"] = fit.slope;
        jm["slope_stderr"] = fit.stderr_;
        io::write_table_csv(out / "tf_vs_nq.csv", {"n_q", "t_f_median"}, rows);
        j["outputs"].push_back("tf_vs_nq.csv");
        jm["file"] = "tf_vs_nq.csv";
        j["modes"] = json::array({jm});
    } else {
        throw std::invalid_argument("tf-scaling: scan must be 'epsilon' or 'nq'");
    }
    j["ok"] = true;
    return j;
}

inline json run_husimi_panel(const RunConfig& cfg) {
    const std::filesystem::path out(cfg.out_dir);
    json j;
    j["outputs"] = json::array();
    j["panels"] = json::array();

    for (int n_q : cfg.nq_list) {
        const auto params = SawtoothParams::make_default(n_q, cfg.K);
        const auto map = CompiledMap::make(params);
        const double eps = cfg.epsilon > 0.0 ? cfg.epsilon : husimi_epsilon_for(n_q);
        const auto mode = ErrorMode::static_mode(eps, cfg.tau_g, cfg.j_equals_delta);

        const auto pair = compute_husimi_pair(map, mode, cfg.window_lo, cfg.window_hi,
                                              cfg.grid_theta, cfg.grid_p, cfg.seed);
        const auto& avg_perfect = pair.perfect;
        const auto& avg_imperfect = pair.imperfect;
        const double second_moment_perfect = pair.second_moment_perfect;

        auto emit = [&](const std::string& tag, const HusimiGrid& g) {
            const std::string base = "husimi_nq" + std::to_string(n_q) + "_" + tag;
            io::write_matrix_txt(out / (base + ".txt"), g.n_p, g.n_theta, g.values);
            io::write_pgm(out / (base + ".pgm"), g.n_p, g.n_theta, g.values);
            json meta;
            meta["n_theta"] = g.n_theta;
            meta["n_p"] = g.n_p;
            meta["delta_p"] = g.delta_p;
            meta["theta_range"] = {0.0, two_pi};
            meta["p_range"] = {-std::numbers::pi, std::numbers::pi};
            meta["axes"] = "theta horizontal, p vertical (top row = largest p)";
            meta["window"] = {cfg.window_lo, cfg.window_hi};
            io::write_file(out / (base + ".meta.json"), meta.dump(2) + "\n");
            j["outputs"].push_back(base + ".txt");
            j["outputs"].push_back(base + ".pgm");
            j["outputs"].push_back(base + ".meta.json");
            return base;
        };

        // mass within |p - p0| < 1 (torus distance), from the perfect panel
        double mass_near_p0 = 0.0;
        for (int ip = 0; ip < avg_perfect.n_p; ++ip) {
            const double dp = wrap_momentum(avg_perfect.p_center(ip) - params.p0());
            if (std::abs(dp) < 1.0)
                for (int it = 0; it < avg_perfect.n_theta; ++it)
                    mass_near_p0 += avg_perfect.at(ip, it);
        }
        mass_near_p0 *= avg_perfect.cell_area();

        json panel;
        panel["n_q"] = n_q;
        panel["epsilon"] = eps;
        panel["routed_n_g"] = map.n_g;
        panel["perfect"] = emit("perfect", avg_perfect);
        panel["imperfect"] = emit("imperfect", avg_imperfect);
        panel["husimi_mass_near_p0"] = mass_near_p0;
        panel["second_moment_perfect"] = second_moment_perfect;
        j["panels"].push_back(panel);
    }
    j["ok"] = true;
    return j;
}

} // namespace detail

struct ExperimentResult {
    json manifest;
    std::filesystem::path out_dir;
    bool ok = true;
};

inline void emit_plot_data(const json& manifest, const std::filesystem::path& out_dir);

/// Execute a preset, write its outputs plus manifest.json and gnuplot
/// stubs, and return the manifest.
inline ExperimentResult run_experiment(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    json manifest;
    switch (cfg.experiment) {
        case Experiment::oracle_check: manifest = detail::run_oracle_check(cfg); break;
        case Experiment::classical_diffusion:
            manifest = detail::run_classical_diffusion(cfg);
            break;
        case Experiment::fidelity_trace: manifest = detail::run_fidelity_trace(cfg); break;
        case Experiment::tf_scaling: manifest = detail::run_tf_scaling(cfg); break;
        case Experiment::husimi_panel: manifest = detail::run_husimi_panel(cfg); break;
    }
    manifest["experiment"] = to_string(cfg.experiment);
    manifest["seed"] = cfg.seed;
    manifest["config"] = emit_config(cfg);
    io::write_file(std::filesystem::path(cfg.out_dir) / "config.txt", emit_config(cfg));
    io::write_file(std::filesystem::path(cfg.out_dir) / "manifest.json",
                   manifest.dump(2) + "\n");
    emit_plot_data(manifest, cfg.out_dir);
    ExperimentResult res;
    res.manifest = manifest;
    res.out_dir = cfg.out_dir;
    res.ok = manifest.value("ok", false);
    return res;
}

/// Gnuplot-ready data and script stubs for an experiment manifest.
inline void emit_plot_data(const json& manifest, const std::filesystem::path& out_dir) {
    if (!manifest.contains("experiment") || !manifest.contains("outputs"))
        throw std::invalid_argument("emit_plot_data: manifest missing experiment/outputs");
    const std::string exp = manifest["experiment"];
    std::string gp = "# gnuplot stub for " + exp + "\nset datafile separator ','\n";

    if (exp == "tf-scaling") {
        gp += "set logscale xy\nset xlabel 'epsilon'\nset ylabel 't_f'\n";
        // reference slope lines anchored at the first point of each mode
        for (const auto& jm : manifest["modes"]) {
            const std::string file = jm["file"];
            const auto& p0 = jm["points"][0];
            const bool noisy = jm["name"] == "noisy";
            const double slope_ref = noisy ? -2.0 : -1.0;
            if (p0.contains("epsilon")) {
                const double x0 = p0["epsilon"], y0 = p0["t_f_median"];
                gp += "ref_" + std::string(jm["name"]) + "(x) = " + io::format_double(y0) +
                      " * (x/" + io::format_double(x0) + ")**(" +
                      io::format_double(slope_ref) + ")\n";
            }
            gp += "# measured slope " + io::format_double(jm["slope"]) + " for " + file + "\n";
        }
        gp += "plot ";
        bool first = true;
        for (const auto& jm : manifest["modes"]) {
            if (!first) gp += ", ";
            first = false;
            gp += "'" + std::string(jm["file"]) + "' skip 1 using 1:2 with points title '" +
                  std::string(jm["name"]) + "'";
            if (jm["points"][0].contains("epsilon"))
                gp += ", ref_" + std::string(jm["name"]) + "(x) with lines notitle";
        }
        gp += "\n";
    } else if (exp == "fidelity-trace") {
        gp += "set xlabel 't'\nset ylabel 'f'\nset yrange [0:1]\nplot ";
        bool first = true;
        for (const auto& cv : manifest["curves"]) {
            if (!first) gp += ", ";
            first = false;
            gp += "'" + std::string(cv["file"]) + "' skip 1 using 1:2 with lines title 'eps=" +
                  io::format_double(cv["epsilon"]) +
                  (cv["j_equals_delta"].get<bool>() ? " J=delta'" : " J=0'");
        }
        gp += "\n";
    } else if (exp == "husimi-panel") {
        gp = "# gnuplot stub for husimi-panel\n";
        for (const auto& panel : manifest["panels"]) {
            for (const std::string key : {"perfect", "imperfect"}) {
                const std::string base = panel[key];
                gp += "# " + base + "\nset view map\nsplot '" + base +
                      ".txt' matrix with image\npause -1\n";
            }
        }
    } else if (exp == "classical-diffusion") {
        gp += "set logscale xy\nset xlabel 't'\nset ylabel '<(dp)^2>'\nplot ";
        bool first = true;
        for (const auto& f : manifest["outputs"]) {
            const std::string name = f;
            if (name.rfind("m2_", 0) != 0) continue;
            if (!first) gp += ", ";
            first = false;
            gp += "'" + name + "' skip 1 using 1:2 with lines title '" + name + "'";
        }
        gp += "\n";
    } else if (exp == "oracle-check") {
        gp += "set xlabel 't'\nset ylabel 'infidelity'\nset logscale y\n";
        gp += "plot 'oracle_infidelity.csv' skip 1 using 1:2 with lines notitle\n";
    }
    io::write_file(out_dir / "plot.gp", gp);
}

} // namespace qsaw
