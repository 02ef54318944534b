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

#include "vncdr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/rng.hpp"
#include "vncdr/sampling.hpp"

namespace vncdr {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// NaN and infinity have no JSON spelling; they become null.
json num(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
// handled exactly once; the first exception is rethrown on the caller.
template <class Body>
void parallel_for(size_t n, uint32_t threads, Body body) {
    const size_t workers = std::min<size_t>(std::max<uint32_t>(threads, 1), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::vector<double> uniform_angles(Rng &rng, size_t count, double hi) {
    std::vector<double> out(count);
    for (auto &a : out) {
        a = hi * uniform01(rng);
    }
    return out;
}

// Noisy values of every training circuit (and the circuit of interest, last)
// at every level, for a group of observables sharing one training set.
void evaluate_group(const Circuit &circuit, const std::vector<Circuit> &training,
                    std::span<const PauliObservable> observables, const NoiseModel &noise,
                    const ExperimentConfig &cfg, std::vector<RawObservable *> slots) {
    const SimulationOptions opts = cfg.simulation_options();
    const size_t m = training.size();
    for (auto *slot : slots) {
        slot->train_x.assign(m, std::vector<double>(cfg.levels.size()));
        slot->train_y.assign(m, 0.0);
        slot->train_labels.clear();
        slot->target.assign(cfg.levels.size(), 0.0);
    }
    for (size_t row = 0; row <= m; ++row) {
        const Circuit &c = row < m ? training[row] : circuit;
        for (size_t j = 0; j < cfg.levels.size(); ++j) {
            const auto vals = noisy_expectations(amplify_fiim(c, cfg.levels[j]), noise, observables, opts);
            for (size_t o = 0; o < slots.size(); ++o) {
                (row < m ? slots[o]->train_x[row][j] : slots[o]->target[j]) = vals[o];
            }
        }
        const auto exact = exact_expectations(c, observables, opts);
        for (size_t o = 0; o < slots.size(); ++o) {
            if (row < m) {
                slots[o]->train_y[row] = exact[o];
                slots[o]->train_labels.push_back(c.label());
            } else {
                slots[o]->exact = exact[o];
            }
        }
    }
}

RawInstance evaluate_instance(const ExperimentConfig &cfg, uint32_t index) {
    RawInstance inst;
    inst.index = index;
    Circuit circuit;
    if (cfg.task == Task::QaoaIsing) {
        QaoaParams params;
        params.qubits = cfg.qubits;
        params.field = cfg.field;
        if (!cfg.gamma.empty()) {
            params.gamma = cfg.gamma;
            params.beta = cfg.beta;
        } else {
            inst.circuit_seed = derive_seed(cfg.angle_seed.value_or(cfg.seed), {kTagAngles, index});
            Rng rng(inst.circuit_seed);
            params.gamma = uniform_angles(rng, cfg.layers, kHalfPi);
            params.beta = uniform_angles(rng, cfg.layers, kHalfPi);
        }
        inst.gamma = params.gamma;
        inst.beta = params.beta;
        circuit = build_qaoa_ising(params);
    } else {
        inst.circuit_seed = derive_seed(cfg.seed, {kTagCircuit, index});
        circuit = build_random_hea(cfg.qubits, cfg.layers, inst.circuit_seed);
    }
    inst.circuit_label = std::string(task_name(cfg.task)) + "-" + std::to_string(index);
    circuit.set_label(inst.circuit_label);

    const NoiseModel noise(cfg.noise);
    const auto observables = cfg.resolved_observables();
    inst.observables.resize(observables.size());
    for (size_t o = 0; o < observables.size(); ++o) {
        inst.observables[o].observable = observables[o];
    }

    if (cfg.strategy.variant == SubstitutionStrategy::Variant::Simple) {
        SubstitutionStrategy s = cfg.strategy;
        s.seed = derive_seed(cfg.seed, {kTagTraining, index});
        const auto training = generate_training_circuits(circuit, observables.front(), s, cfg.training_circuits);
        std::vector<RawObservable *> slots;
        for (auto &ro : inst.observables) {
            ro.training_seed = s.seed;
            slots.push_back(&ro);
        }
        evaluate_group(circuit, training, observables, noise, cfg, slots);
    } else {
        for (size_t o = 0; o < observables.size(); ++o) {
            SubstitutionStrategy s = cfg.strategy;
            s.seed = derive_seed(cfg.seed, {kTagTraining, index, o});
            const auto training = generate_training_circuits(circuit, observables[o], s, cfg.training_circuits);
            inst.observables[o].training_seed = s.seed;
            evaluate_group(circuit, training, std::span(&observables[o], 1), noise, cfg, {&inst.observables[o]});
        }
    }
    return inst;
}

ObservableResult mitigate_observable(const RawObservable &raw, const ExperimentConfig &cfg,
                                     std::optional<uint64_t> shots, uint32_t instance, uint64_t obs_index) {
    const size_t m = raw.train_y.size();
    const size_t n = cfg.levels.size();
    auto sample = [&](double mu, uint64_t row, uint64_t level) {
        ShotConfig sc;
        sc.shots = shots;
        sc.seed = derive_seed(cfg.seed, {kTagShots, instance, obs_index, row, level});
        return sample_expectation(mu, sc);
    };

    ObservableResult r;
    r.label = raw.observable.label();
    r.exact = raw.exact;
    r.training_seed = raw.training_seed;
    r.training.levels = cfg.levels;
    for (size_t i = 0; i < m; ++i) {
        std::vector<double> xi(n);
        for (size_t j = 0; j < n; ++j) {
            xi[j] = sample(raw.train_x[i][j], i, j);
        }
        r.training.add_row(std::move(xi), raw.train_y[i], raw.train_labels.at(i));
    }
    r.noisy_levels.resize(n);
    for (size_t j = 0; j < n; ++j) {
        r.noisy_levels[j] = sample(raw.target[j], m, j);
    }

    r.richardson = richardson_coefficients(cfg.levels);
    r.linear = zne_linear(r.noisy_levels, cfg.levels);
    r.cdr = cdr_fit_or_identity(r.training.level_column(0), r.training.y);
    r.vncdr = vncdr_fit(r.training, cfg.ridge);

    r.estimate[static_cast<size_t>(Method::Noisy)] = r.noisy_levels[0];
    r.estimate[static_cast<size_t>(Method::ZneRichardson)] = zne_richardson(r.noisy_levels, cfg.levels);
    r.estimate[static_cast<size_t>(Method::ZneLinear)] = r.linear.b0;
    r.estimate[static_cast<size_t>(Method::Cdr)] = cdr_predict(r.cdr, r.noisy_levels[0]);
    r.estimate[static_cast<size_t>(Method::Vncdr)] = vncdr_predict(r.vncdr, r.noisy_levels);
    return r;
}

json fit_json(const ObservableResult &r) {
    json j;
    j["observable"] = r.label;
    j["exact"] = num(r.exact);
    json noisy = json::array();
    for (double v : r.noisy_levels) noisy.push_back(num(v));
    j["noisy_levels"] = noisy;
    j["training_seed"] = r.training_seed;
    j["zne_richardson"] = {{"method", "zne_richardson"}, {"coefficients", r.richardson}};
    j["zne_linear"] = {{"method", "zne_linear"}, {"b0", num(r.linear.b0)}, {"b1", num(r.linear.b1)}};
    j["cdr"] = {{"method", "cdr"}, {"a1", num(r.cdr.a1)}, {"a2", num(r.cdr.a2)}, {"degenerate", r.cdr.degenerate}};
    json a = json::array();
    for (double v : r.vncdr.a) a.push_back(num(v));
    j["vncdr"] = {{"method", "vncdr"}, {"a", a}, {"rss", num(r.vncdr.rss)}, {"rank", r.vncdr.rank},
                  {"ridge", r.vncdr.ridge}};
    return j;
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

double parse_double(const std::string &s) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw FormatError("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw FormatError("not a number: '" + s + "'");
    }
    return v;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) {
        throw ParameterError("shot cost overflows 64 bits");
    }
    return a * b;
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Noisy:
            return "noisy";
        case Method::ZneRichardson:
            return "zne_richardson";
        case Method::ZneLinear:
            return "zne_linear";
        case Method::Cdr:
            return "cdr";
        case Method::Vncdr:
            return "vncdr";
    }
    return "?";
}

Method method_from_name(std::string_view name) {
    for (Method m : kMethods) {
        if (method_name(m) == name) {
            return m;
        }
    }
    throw FormatError("unknown method '" + std::string(name) + "'");
}

double ObservableResult::abs_error(Method m) const {
    return std::abs(value(m) - exact);
}

std::vector<double> ising_weights(uint32_t qubits, double field) {
    std::vector<double> w(qubits, -field);
    w.resize(2 * qubits - 1, -1.0);
    return w;
}

RawRun evaluate_raw(const ExperimentConfig &cfg) {
    RawRun raw;
    raw.config = cfg;
    raw.instances.resize(cfg.instances);
    parallel_for(cfg.instances, cfg.threads,
                 [&](size_t i) { raw.instances[i] = evaluate_instance(cfg, static_cast<uint32_t>(i)); });
    return raw;
}

RunResult mitigate(const RawRun &raw, std::optional<std::optional<uint64_t>> shots_override) {
    RunResult result;
    result.config = raw.config;
    if (shots_override) {
        result.config.shots = *shots_override;
    }
    const ExperimentConfig &cfg = result.config;
    const bool qaoa = cfg.task == Task::QaoaIsing && cfg.observables.empty();
    for (const RawInstance &ri : raw.instances) {
        InstanceResult inst;
        inst.index = ri.index;
        inst.circuit_seed = ri.circuit_seed;
        inst.circuit_label = ri.circuit_label;
        inst.gamma = ri.gamma;
        inst.beta = ri.beta;
        for (size_t o = 0; o < ri.observables.size(); ++o) {
            inst.observables.push_back(mitigate_observable(ri.observables[o], cfg, cfg.shots, ri.index, o));
        }
        if (qaoa) {
            const auto w = ising_weights(cfg.qubits, cfg.field);
            std::array<double, 5> e{};
            inst.energy_exact = 0;
            for (size_t o = 0; o < w.size(); ++o) {
                inst.energy_exact += w[o] * inst.observables[o].exact;
                for (size_t k = 0; k < kMethods.size(); ++k) {
                    e[k] += w[o] * inst.observables[o].estimate[k];
                }
            }
            inst.energy = e;
        }
        result.instances.push_back(std::move(inst));
    }
    return result;
}

RunResult run_experiment(const ExperimentConfig &cfg) {
    return mitigate(evaluate_raw(cfg));
}

RunResult run_qaoa_benchmark(const ExperimentConfig &cfg) {
    if (cfg.task != Task::QaoaIsing) {
        throw ParameterError("run_qaoa_benchmark needs task qaoa-ising");
    }
    return run_experiment(cfg);
}

RunResult run_rqc_benchmark(const ExperimentConfig &cfg) {
    if (cfg.task != Task::Rqc) {
        throw ParameterError("run_rqc_benchmark needs task rqc");
    }
    return run_experiment(cfg);
}

uint64_t circuits_executed(CostMethod method, uint64_t m, uint64_t n_levels) {
    if (n_levels == 0 || (method != CostMethod::Zne && m == 0)) {
        throw ParameterError("shot-cost inputs must be positive");
    }
    switch (method) {
        case CostMethod::Zne:
            return n_levels;
        case CostMethod::Cdr:
            return m + 1;
        case CostMethod::Vncdr:
            return checked_mul(m + 1, n_levels);
    }
    return 0;
}

uint64_t shot_cost(CostMethod method, uint64_t m, uint64_t n_levels, uint64_t shots) {
    if (shots == 0) {
        throw ParameterError("shot-cost inputs must be positive");
    }
    return checked_mul(circuits_executed(method, m, n_levels), shots);
}

std::vector<ShotBudgetLine> shot_budget(uint64_t m, uint64_t n_levels, uint64_t shots) {
    std::vector<ShotBudgetLine> out;
    for (CostMethod k : {CostMethod::Zne, CostMethod::Cdr, CostMethod::Vncdr}) {
        out.push_back({k, circuits_executed(k, m, n_levels), shot_cost(k, m, n_levels, shots)});
    }
    return out;
}

std::string_view cost_method_name(CostMethod m) {
    switch (m) {
        case CostMethod::Zne:
            return "zne";
        case CostMethod::Cdr:
            return "cdr";
        case CostMethod::Vncdr:
            return "vncdr";
    }
    return "?";
}

std::vector<ResultRow> result_rows(const RunResult &result) {
    std::vector<ResultRow> rows;
    for (const auto &inst : result.instances) {
        for (const auto &obs : inst.observables) {
            for (Method m : kMethods) {
                rows.push_back({inst.index, obs.label, std::string(method_name(m)), obs.value(m), obs.exact,
                                obs.abs_error(m)});
            }
        }
        if (inst.energy) {
            for (size_t k = 0; k < kMethods.size(); ++k) {
                const double e = (*inst.energy)[k];
                rows.push_back({inst.index, "H", std::string(method_name(kMethods[k])), e, inst.energy_exact,
                                std::abs(e - inst.energy_exact)});
            }
        }
    }
    return rows;
}

void write_results_csv(std::ostream &os, const std::vector<ResultRow> &rows) {
    os << "instance,observable,method,estimate,exact,abs_error\n";
    for (const auto &r : rows) {
        os << r.instance << ',' << r.observable << ',' << r.method << ',' << fmt17(r.estimate) << ','
           << fmt17(r.exact) << ',' << fmt17(r.abs_error) << '\n';
    }
}

std::vector<ResultRow> read_results_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line != "instance,observable,method,estimate,exact,abs_error") {
        throw FormatError("results CSV has an unexpected header");
    }
    std::vector<ResultRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto c = split_csv(line);
        if (c.size() != 6) {
            throw FormatError("results CSV row needs 6 cells");
        }
        rows.push_back({static_cast<uint32_t>(parse_double(c[0])), c[1], c[2], parse_double(c[3]),
                        parse_double(c[4]), parse_double(c[5])});
    }
    return rows;
}

const MethodSummary &Summary::at(std::string_view method) const {
    for (const auto &m : methods) {
        if (m.method == method) {
            return m;
        }
    }
    throw ParameterError("summary has no method '" + std::string(method) + "'");
}

Summary summarize(const std::vector<ResultRow> &rows, Task task) {
    Summary s;
    s.metric = task == Task::QaoaIsing ? "energy_abs_error" : "circuit_mean_abs_error";
    const bool energy = task == Task::QaoaIsing &&
                        std::any_of(rows.begin(), rows.end(), [](const ResultRow &r) { return r.observable == "H"; });
    std::vector<uint32_t> instances;
    for (const auto &r : rows) {
        instances.push_back(r.instance);
    }
    std::sort(instances.begin(), instances.end());
    instances.erase(std::unique(instances.begin(), instances.end()), instances.end());
    s.instances = instances.size();

    for (Method m : kMethods) {
        const std::string name(method_name(m));
        std::vector<double> per_instance;
        for (uint32_t inst : instances) {
            double acc = 0;
            size_t count = 0;
            for (const auto &r : rows) {
                if (r.instance != inst || r.method != name || (r.observable == "H") != energy) {
                    continue;
                }
                acc += r.abs_error;
                ++count;
            }
            if (count > 0) {
                per_instance.push_back(acc / static_cast<double>(count));
            }
        }
        MethodSummary ms;
        ms.method = name;
        if (!per_instance.empty()) {
            ms.mean = std::accumulate(per_instance.begin(), per_instance.end(), 0.0) /
                      static_cast<double>(per_instance.size());
            std::vector<double> sorted = per_instance;
            std::sort(sorted.begin(), sorted.end());
            const size_t h = sorted.size() / 2;
            ms.median = sorted.size() % 2 ? sorted[h] : 0.5 * (sorted[h - 1] + sorted[h]);
            ms.max = sorted.back();
        }
        s.methods.push_back(ms);
    }
    const double noisy = s.methods.front().mean;
    for (auto &ms : s.methods) {
        ms.improvement = noisy / ms.mean;
    }
    return s;
}

std::string summary_to_json(const Summary &summary) {
    json j;
    j["metric"] = summary.metric;
    j["instances"] = summary.instances;
    json methods = json::object();
    for (const auto &m : summary.methods) {
        methods[m.method] = {{"mean", num(m.mean)},
                             {"median", num(m.median)},
                             {"max", num(m.max)},
                             {"improvement", num(m.improvement)}};
    }
    j["methods"] = methods;
    return j.dump(2);
}

void emit_results(const RunResult &result, const std::string &dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
    }
    auto open = [&](const std::string &name) {
        std::ofstream f(fs::path(dir) / name);
        if (!f) {
            throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
        }
        return f;
    };
    const auto rows = result_rows(result);
    {
        auto f = open("results.csv");
        write_results_csv(f, rows);
    }
    const Summary summary = summarize(rows, result.config.task);
    json sj = json::parse(summary_to_json(summary));
    sj["default_zne"] = "zne_linear";
    json instances = json::array();
    for (const auto &inst : result.instances) {
        json ij;
        ij["instance"] = inst.index;
        ij["circuit"] = inst.circuit_label;
        ij["circuit_seed"] = inst.circuit_seed;
        if (!inst.gamma.empty()) {
            ij["gamma"] = inst.gamma;
            ij["beta"] = inst.beta;
        }
        if (inst.energy) {
            json e = json::object();
            for (size_t k = 0; k < kMethods.size(); ++k) {
                e[std::string(method_name(kMethods[k]))] = num((*inst.energy)[k]);
            }
            ij["energy"] = e;
            ij["energy_exact"] = num(inst.energy_exact);
        }
        json fits = json::array();
        for (const auto &o : inst.observables) {
            fits.push_back(fit_json(o));
        }
        ij["fits"] = fits;
        instances.push_back(ij);
    }
    sj["per_instance"] = instances;
    {
        auto f = open("summary.json");
        f << sj.dump(2) << '\n';
    }
    {
        auto f = open("config.resolved");
        f << config_to_json(result.config) << '\n';
    }
    if (result.config.dump_training) {
        const fs::path tdir = fs::path(dir) / "training";
        fs::create_directories(tdir, ec);
        for (const auto &inst : result.instances) {
            for (const auto &o : inst.observables) {
                const std::string stem = "instance" + std::to_string(inst.index) + "_" + o.label;
                std::ofstream csv(tdir / (stem + ".csv"));
                write_training_csv(csv, o.training);
                json meta;
                meta["observable"] = o.label;
                meta["circuit"] = inst.circuit_label;
                meta["training_seed"] = o.training_seed;
                meta["row_seed_rule"] = "derive_seed(training_seed, {row})";
                meta["levels"] = result.config.levels.levels();
                json cfg = json::parse(config_to_json(result.config));
                meta["strategy"] = cfg["strategy"];
                meta["noise"] = cfg["noise"];
                meta["shots"] = cfg["shots"];
                meta["master_seed"] = result.config.seed;
                std::ofstream side(tdir / (stem + ".json"));
                side << meta.dump(2) << '\n';
            }
        }
    }
}

ExperimentConfig demo_config() {
    ExperimentConfig cfg = ExperimentConfig::defaults(Task::Rqc);
    cfg.qubits = 6;
    cfg.layers = 4;
    cfg.instances = 2;
    cfg.seed = 2021;
    cfg.output = "demo-out";
    return cfg;
}

}  // namespace vncdr
