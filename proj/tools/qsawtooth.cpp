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

// Experiment harness for the sawtooth-map simulator. Each subcommand runs
// one preset and writes CSV/grid outputs, a reproducible config, a JSON
// manifest, and gnuplot stubs into the output directory.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsaw/qsaw.hpp"

namespace {

// exit codes: 0 ok, 2 bad config, 3 I/O failure, 4 invariant violation
constexpr int kExitBadConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInvariant = 4;

struct CommonOpts {
    std::string config_file;
    std::string out_dir;
    std::string seed;
    int jobs = -1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_file, "run configuration file (key = value)");
    cmd->add_option("--seed", opts.seed, "master seed (64-bit)");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--jobs", opts.jobs, "worker threads (0 = hardware)");
}

qsaw::RunConfig load_config(qsaw::Experiment preset, const CommonOpts& opts) {
    qsaw::RunConfig cfg = qsaw::default_config(preset);
    if (!opts.config_file.empty())
        cfg = qsaw::parse_config(qsaw::io::read_file(opts.config_file));
    cfg.experiment = preset; // the subcommand wins
    if (!opts.seed.empty()) cfg.seed = std::stoull(opts.seed);
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    if (opts.jobs >= 0) cfg.jobs = opts.jobs;
    // environment overrides for out-dir and jobs only
    if (opts.out_dir.empty())
        if (const char* env = std::getenv("QSAWTOOTH_OUT")) cfg.out_dir = env;
    if (opts.jobs < 0)
        if (const char* env = std::getenv("QSAWTOOTH_JOBS")) cfg.jobs = std::atoi(env);
    return cfg;
}

int run_preset(qsaw::Experiment preset, const CommonOpts& opts) {
    qsaw::RunConfig cfg;
    try {
        cfg = load_config(preset, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: invalid configuration: " << e.what() << "\n";
        return kExitBadConfig;
    }
    try {
        const auto result = qsaw::run_experiment(cfg);
        std::cout << "wrote " << (result.out_dir / "manifest.json").string() << "\n";
        if (!result.ok) {
            std::cerr << "error: invariant violation recorded in manifest\n";
            return kExitInvariant;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid configuration: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum sawtooth map simulator"};
    app.require_subcommand(1);

    struct Preset {
        qsaw::Experiment experiment;
        const char* name;
        const char* help;
    };
    const Preset presets[] = {
        {qsaw::Experiment::oracle_check, "oracle-check",
         "verify the routed gate circuit against the split-operator engine"},
        {qsaw::Experiment::classical_diffusion, "classical-diffusion",
         "classical ensembles: diffusion coefficients and the anomalous exponent"},
        {qsaw::Experiment::fidelity_trace, "fidelity-trace",
         "fidelity decay curves for a family of imperfection strengths"},
        {qsaw::Experiment::tf_scaling, "tf-scaling",
         "fidelity-time scaling against epsilon or against n_q"},
        {qsaw::Experiment::husimi_panel, "husimi-panel",
         "time-averaged phase-space distributions, perfect vs imperfect"},
    };

    CommonOpts opts[std::size(presets)];
    CLI::App* cmds[std::size(presets)];
    for (std::size_t i = 0; i < std::size(presets); ++i) {
        cmds[i] = app.add_subcommand(presets[i].name, presets[i].help);
        add_common(cmds[i], opts[i]);
    }

    // regenerate plot stubs from an existing manifest
    std::string manifest_path;
    auto* plots = app.add_subcommand("plot-data", "re-emit plot data for a manifest");
    plots->add_option("--manifest", manifest_path, "manifest.json path")->required();

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < std::size(presets); ++i)
        if (cmds[i]->parsed()) return run_preset(presets[i].experiment, opts[i]);

    if (plots->parsed()) {
        try {
            const auto manifest = qsaw::json::parse(qsaw::io::read_file(manifest_path));
            qsaw::emit_plot_data(manifest,
                                 std::filesystem::path(manifest_path).parent_path());
            return 0;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadConfig;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitIo;
        }
    }
    return 0;
}
