// Copyright 2026 The vncdr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run, cost, validate, demo.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/harness.hpp"

using namespace vncdr;

namespace {

struct Overrides {
    std::optional<uint64_t> seed;
    std::optional<uint32_t> threads;
    std::string out;
    std::string backend;
    std::string shots;
};

void apply(const Overrides &o, ExperimentConfig &cfg) {
    if (o.seed) cfg.seed = *o.seed;
    if (o.threads) cfg.threads = *o.threads;
    if (!o.out.empty()) cfg.output = o.out;
    if (!o.backend.empty()) cfg.backend = o.backend == "mpo" ? Backend::Mpo : Backend::Dense;
    if (!o.shots.empty()) {
        if (o.shots == "inf") {
            cfg.shots.reset();
        } else {
            const uint64_t n = std::stoull(o.shots);
            if (n == 0) throw ParameterError("--shots must be positive or inf");
            cfg.shots = n;
        }
    }
}

void add_overrides(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--backend", o.backend, "dense or mpo")->check(CLI::IsMember({"dense", "mpo"}));
    cmd->add_option("--shots", o.shots, "shots per circuit, or inf");
}

void print_summary(const RunResult &result) {
    const Summary s = summarize(result_rows(result), result.config.task);
    std::printf("%-16s %12s %12s %12s %10s\n", s.metric.c_str(), "mean", "median", "max", "factor");
    for (const auto &m : s.methods) {
        std::printf("%-16s %12.4e %12.4e %12.4e %10.3f\n", m.method.c_str(), m.mean, m.median, m.max,
                    m.improvement);
    }
}

int run_and_emit(ExperimentConfig cfg) {
    const RunResult result = run_experiment(cfg);
    emit_results(result, cfg.output);
    print_summary(result);
    std::printf("wrote %s/results.csv\n", cfg.output.c_str());
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"vncdr: noisy-circuit simulation and error-mitigation benchmarks"};
    app.require_subcommand(1);

    Overrides run_o;
    std::string config_path;
    auto *run = app.add_subcommand("run", "run an experiment described by a config file");
    run->add_option("--config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
    add_overrides(run, run_o);

    auto *cost = app.add_subcommand("cost", "shot budget per mitigated expectation value");
    std::string cost_config;
    uint64_t m = 100, levels = 5, shots = 1000;
    cost->add_option("--config", cost_config, "take m and levels from a config file")->check(CLI::ExistingFile);
    cost->add_option("--m", m, "training circuits");
    cost->add_option("--levels", levels, "number of noise levels");
    cost->add_option("--shots", shots, "shots per circuit");

    auto *validate = app.add_subcommand("validate", "run the quick invariant suite");
    uint64_t validate_seed = 7;
    validate->add_option("--seed", validate_seed, "seed for the randomized checks");

    Overrides demo_o;
    auto *demo = app.add_subcommand("demo", "built-in 6-qubit random-circuit experiment");
    add_overrides(demo, demo_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            ExperimentConfig cfg = load_config(config_path);
            apply(run_o, cfg);
            return run_and_emit(cfg);
        }
        if (demo->parsed()) {
            ExperimentConfig cfg = demo_config();
            apply(demo_o, cfg);
            return run_and_emit(cfg);
        }
        if (cost->parsed()) {
            if (!cost_config.empty()) {
                const ExperimentConfig cfg = load_config(cost_config);
                m = cfg.training_circuits;
                levels = cfg.levels.size();
                if (cfg.shots) shots = *cfg.shots;
            }
            std::printf("%-6s %12s %16s\n", "method", "circuits", "total_shots");
            for (const auto &line : shot_budget(m, levels, shots)) {
                std::printf("%-6s %12llu %16llu\n", std::string(cost_method_name(line.method)).c_str(),
                            static_cast<unsigned long long>(line.circuits),
                            static_cast<unsigned long long>(line.shots));
            }
            return 0;
        }
        if (validate->parsed()) {
            bool all = true;
            for (const auto &c : run_validation_suite(validate_seed)) {
                std::printf("%s  %-40s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
                all = all && c.passed;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
