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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vncdr/clifford_training.hpp"
#include "vncdr/mitigation.hpp"
#include "vncdr/noise.hpp"
#include "vncdr/simulate.hpp"
#include "vncdr/training_data.hpp"

namespace vncdr {

enum class Task : uint8_t { QaoaIsing, Rqc };

inline constexpr int kConfigSchemaVersion = 1;

struct ExperimentConfig {
    Task task = Task::Rqc;
    uint32_t qubits = 8;
    uint32_t layers = 4;
    double field = 2.0;                  // qaoa only
    std::optional<uint64_t> angle_seed;  // qaoa: overrides the master seed for angles
    std::vector<double> gamma, beta;     // qaoa: explicit angles (all instances)
    std::vector<std::string> observables;  // empty: task default
    NoiseSpec noise{};
    NoiseLevelSet levels;
    SubstitutionStrategy strategy{};
    uint32_t training_circuits = 0;
    std::optional<uint64_t> shots;  // empty: infinite
    Backend backend = Backend::Dense;
    double mpo_cutoff = 1e-12;
    bool mpo_absolute = false;
    uint32_t instances = 1;
    uint64_t seed = 0;
    uint32_t threads = 1;
    std::string output = "results";
    double ridge = 0.0;
    bool dump_training = false;

    /// Task defaults: qaoa m=80, N=16, C={1,3,5}, simple substitution;
    /// rqc m=100, N=20, C={1,...,9}, cone-weighted substitution.
    static ExperimentConfig defaults(Task task);
    SimulationOptions simulation_options() const;
    std::vector<PauliObservable> resolved_observables() const;
};

/// Parses the JSON config format (see README). Unknown keys are rejected.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string &path);
/// Full resolved config, as JSON text.
std::string config_to_json(const ExperimentConfig &cfg);

std::string_view task_name(Task task);

enum class Method : uint8_t { Noisy, ZneRichardson, ZneLinear, Cdr, Vncdr };
inline constexpr std::array<Method, 5> kMethods{Method::Noisy, Method::ZneRichardson, Method::ZneLinear,
                                               Method::Cdr, Method::Vncdr};
std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

/// Stream tags for derive_seed(master, {tag, ...}).
enum SeedTag : uint64_t { kTagAngles = 1, kTagCircuit = 2, kTagTraining = 3, kTagShots = 4 };

/// Noise-free-of-shots simulation output for one observable: everything the
/// estimators need, before any sampling.
struct RawObservable {
    PauliObservable observable;
    double exact = 0;
    std::vector<double> target;            // noisy value per level
    std::vector<std::vector<double>> train_x;  // row, level
    std::vector<double> train_y;
    std::vector<std::string> train_labels;
    uint64_t training_seed = 0;
};

struct RawInstance {
    uint32_t index = 0;
    uint64_t circuit_seed = 0;
    std::string circuit_label;
    std::vector<double> gamma, beta;  // qaoa
    std::vector<RawObservable> observables;
};

struct RawRun {
    ExperimentConfig config;
    std::vector<RawInstance> instances;
};

struct ObservableResult {
    std::string label;
    double exact = 0;
    std::vector<double> noisy_levels;
    std::array<double, 5> estimate{};  // indexed like kMethods
    std::vector<double> richardson;
    LinearFit linear;
    CdrFit cdr;
    VncdrFit vncdr;
    TrainingData training;
    uint64_t training_seed = 0;

    double value(Method m) const {
        return estimate[static_cast<size_t>(m)];
    }
    double abs_error(Method m) const;
};

struct InstanceResult {
    uint32_t index = 0;
    uint64_t circuit_seed = 0;
    std::string circuit_label;
    std::vector<double> gamma, beta;
    std::vector<ObservableResult> observables;
    /// qaoa: E = -g sum <X_j> - sum <Z_j Z_j+1> per method, and its exact value.
    std::optional<std::array<double, 5>> energy;
    double energy_exact = 0;
};

struct RunResult {
    ExperimentConfig config;
    std::vector<InstanceResult> instances;
};

/// Builds circuits and training sets and runs every noisy and exact
/// simulation. Instances are spread over cfg.threads workers; the result
/// does not depend on the thread count.
RawRun evaluate_raw(const ExperimentConfig &cfg);

/// Applies shot sampling (cfg.shots unless overridden) and every estimator.
RunResult mitigate(const RawRun &raw, std::optional<std::optional<uint64_t>> shots_override = std::nullopt);

RunResult run_experiment(const ExperimentConfig &cfg);
RunResult run_qaoa_benchmark(const ExperimentConfig &cfg);
RunResult run_rqc_benchmark(const ExperimentConfig &cfg);

/// Energy weights of the Ising terms in observable order (X_0.., then ZZ).
std::vector<double> ising_weights(uint32_t qubits, double field);

enum class CostMethod : uint8_t { Zne, Cdr, Vncdr };
/// ZNE: n N_s; CDR: (m + 1) N_s; vnCDR: (m + 1) n N_s.
uint64_t circuits_executed(CostMethod method, uint64_t m, uint64_t n_levels);
uint64_t shot_cost(CostMethod method, uint64_t m, uint64_t n_levels, uint64_t shots);

struct ShotBudgetLine {
    CostMethod method;
    uint64_t circuits = 0;
    uint64_t shots = 0;
};
std::vector<ShotBudgetLine> shot_budget(uint64_t m, uint64_t n_levels, uint64_t shots);
std::string_view cost_method_name(CostMethod m);

/// One line of results.csv.
struct ResultRow {
    uint32_t instance = 0;
    std::string observable;
    std::string method;
    double estimate = 0;
    double exact = 0;
    double abs_error = 0;
};

std::vector<ResultRow> result_rows(const RunResult &result);
void write_results_csv(std::ostream &os, const std::vector<ResultRow> &rows);
std::vector<ResultRow> read_results_csv(std::istream &is);

struct MethodSummary {
    std::string method;
    double mean = 0;
    double median = 0;
    double max = 0;
    double improvement = 0;  // mean(noisy) / mean(method)
};

/// Per-instance error: |E - E_exact| for qaoa (rows with observable "H"),
/// mean absolute error over the observables otherwise.
struct Summary {
    std::string metric;
    size_t instances = 0;
    std::vector<MethodSummary> methods;

    const MethodSummary &at(std::string_view method) const;
};
Summary summarize(const std::vector<ResultRow> &rows, Task task);
std::string summary_to_json(const Summary &summary);

/// Writes results.csv, summary.json and config.resolved into `dir`
/// (created if needed), plus training sets when cfg.dump_training is set.
void emit_results(const RunResult &result, const std::string &dir);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};
/// Quick invariant checks behind the `validate` command.
std::vector<CheckResult> run_validation_suite(uint64_t seed);

/// Built-in Q=6 random-circuit smoke experiment.
ExperimentConfig demo_config();

}  // namespace vncdr
