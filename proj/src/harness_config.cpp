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

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/harness.hpp"

namespace vncdr {

using nlohmann::json;

namespace {

void check_keys(const json &obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) {
        throw FormatError(std::string(where) + " must be an object");
    }
    for (const auto &item : obj.items()) {
        bool ok = false;
        for (auto a : allowed) {
            ok = ok || item.key() == a;
        }
        if (!ok) {
            throw FormatError("unknown key '" + item.key() + "' in " + std::string(where));
        }
    }
}

uint64_t as_uint(const json &v, std::string_view key) {
    if (v.is_number_unsigned()) {
        return v.get<uint64_t>();
    }
    if (v.is_number_integer() && v.get<int64_t>() >= 0) {
        return static_cast<uint64_t>(v.get<int64_t>());
    }
    throw FormatError("'" + std::string(key) + "' must be a non-negative integer");
}

uint32_t as_u32(const json &v, std::string_view key) {
    const uint64_t x = as_uint(v, key);
    if (x > UINT32_MAX) {
        throw FormatError("'" + std::string(key) + "' is too large");
    }
    return static_cast<uint32_t>(x);
}

double as_double(const json &v, std::string_view key) {
    if (!v.is_number()) {
        throw FormatError("'" + std::string(key) + "' must be a number");
    }
    return v.get<double>();
}

bool as_bool(const json &v, std::string_view key) {
    if (!v.is_boolean()) {
        throw FormatError("'" + std::string(key) + "' must be true or false");
    }
    return v.get<bool>();
}

std::string as_string(const json &v, std::string_view key) {
    if (!v.is_string()) {
        throw FormatError("'" + std::string(key) + "' must be a string");
    }
    return v.get<std::string>();
}

std::vector<double> as_doubles(const json &v, std::string_view key) {
    if (!v.is_array()) {
        throw FormatError("'" + std::string(key) + "' must be a list of numbers");
    }
    std::vector<double> out;
    for (const auto &e : v) {
        out.push_back(as_double(e, key));
    }
    return out;
}

GateKind gate_kind_from_name(const std::string &s) {
    if (s == "RZ") return GateKind::RZ;
    if (s == "SX") return GateKind::SX;
    if (s == "CNOT") return GateKind::CNOT;
    throw FormatError("unknown gate class '" + s + "'");
}

Task task_from_name(const std::string &s) {
    if (s == "qaoa-ising") return Task::QaoaIsing;
    if (s == "rqc") return Task::Rqc;
    throw FormatError("unknown task '" + s + "' (expected qaoa-ising or rqc)");
}

void parse_noise(const json &j, NoiseSpec &noise) {
    check_keys(j, "noise",
               {"mode", "eps_1q", "eps_2q", "amplitude_damping", "noiseless_rz", "global_eps", "global_triggers"});
    if (j.contains("mode")) {
        const std::string mode = as_string(j["mode"], "noise.mode");
        if (mode == "per-gate") {
            noise.mode = NoiseMode::PerGate;
        } else if (mode == "global") {
            noise = NoiseSpec::global(noise.global_eps);
        } else {
            throw FormatError("noise.mode must be per-gate or global");
        }
    }
    if (j.contains("eps_1q")) noise.eps_1q = as_double(j["eps_1q"], "noise.eps_1q");
    if (j.contains("eps_2q")) noise.eps_2q = as_double(j["eps_2q"], "noise.eps_2q");
    if (j.contains("amplitude_damping")) noise.amplitude_damping = as_double(j["amplitude_damping"], "noise.amplitude_damping");
    if (j.contains("noiseless_rz")) noise.noiseless_rz = as_bool(j["noiseless_rz"], "noise.noiseless_rz");
    if (j.contains("global_eps")) noise.global_eps = as_double(j["global_eps"], "noise.global_eps");
    if (j.contains("global_triggers")) {
        if (!j["global_triggers"].is_array()) {
            throw FormatError("noise.global_triggers must be a list");
        }
        noise.global_triggers.clear();
        for (const auto &t : j["global_triggers"]) {
            noise.global_triggers.push_back(gate_kind_from_name(as_string(t, "noise.global_triggers")));
        }
    }
}

void parse_strategy(const json &j, SubstitutionStrategy &s) {
    check_keys(j, "strategy", {"variant", "non_clifford", "sigma", "distance"});
    if (j.contains("variant")) {
        const std::string v = as_string(j["variant"], "strategy.variant");
        if (v == "simple") {
            s.variant = SubstitutionStrategy::Variant::Simple;
        } else if (v == "cone-weighted") {
            s.variant = SubstitutionStrategy::Variant::ConeWeighted;
        } else {
            throw FormatError("strategy.variant must be simple or cone-weighted");
        }
    }
    if (j.contains("non_clifford")) s.non_clifford = as_u32(j["non_clifford"], "strategy.non_clifford");
    if (j.contains("sigma")) s.sigma = as_double(j["sigma"], "strategy.sigma");
    if (j.contains("distance")) {
        const std::string d = as_string(j["distance"], "strategy.distance");
        if (d == "phase-invariant") {
            s.distance = DistanceConvention::PhaseInvariant;
        } else if (d == "literal") {
            s.distance = DistanceConvention::LiteralFrobenius;
        } else {
            throw FormatError("strategy.distance must be phase-invariant or literal");
        }
    }
}

void validate(const ExperimentConfig &cfg) {
    if (cfg.qubits < 2) {
        throw ParameterError("qubits must be at least 2");
    }
    if (cfg.layers < 1) {
        throw ParameterError("layers must be at least 1");
    }
    if (cfg.instances < 1) {
        throw ParameterError("instances must be at least 1");
    }
    if (cfg.training_circuits < 1) {
        throw ParameterError("training_circuits must be at least 1");
    }
    if (cfg.levels.size() < 2) {
        throw ParameterError("at least two noise levels are needed for extrapolation");
    }
    if (cfg.shots && *cfg.shots == 0) {
        throw ParameterError("shots must be positive or \"inf\"");
    }
    if (!(cfg.strategy.sigma > 0)) {
        throw ParameterError("strategy.sigma must be positive");
    }
    if (cfg.mpo_cutoff < 0 || cfg.ridge < 0) {
        throw ParameterError("mpo_cutoff and ridge must be non-negative");
    }
    if (cfg.task == Task::QaoaIsing) {
        if (cfg.gamma.size() != cfg.beta.size()) {
            throw ParameterError("gamma and beta must have equal length");
        }
        if (!cfg.gamma.empty() && cfg.gamma.size() != cfg.layers) {
            throw ParameterError("explicit angles must have one entry per layer");
        }
    } else if (cfg.qubits % 2 != 0 && cfg.observables.empty()) {
        throw ParameterError("rqc default observables need an even qubit count");
    }
    NoiseModel check(cfg.noise);  // validates the noise block
    (void)check;
    cfg.resolved_observables();
}

}  // namespace

std::string_view task_name(Task task) {
    return task == Task::QaoaIsing ? "qaoa-ising" : "rqc";
}

ExperimentConfig ExperimentConfig::defaults(Task task) {
    ExperimentConfig cfg;
    cfg.task = task;
    if (task == Task::QaoaIsing) {
        cfg.training_circuits = 80;
        cfg.strategy.non_clifford = 16;
        cfg.strategy.variant = SubstitutionStrategy::Variant::Simple;
        cfg.levels = NoiseLevelSet::odd(3);
    } else {
        cfg.training_circuits = 100;
        cfg.strategy.non_clifford = 20;
        cfg.strategy.variant = SubstitutionStrategy::Variant::ConeWeighted;
        cfg.levels = NoiseLevelSet::odd(5);
    }
    return cfg;
}

SimulationOptions ExperimentConfig::simulation_options() const {
    SimulationOptions opts;
    opts.backend = backend;
    opts.mpo = TruncationPolicy{mpo_cutoff, mpo_absolute};
    return opts;
}

std::vector<PauliObservable> ExperimentConfig::resolved_observables() const {
    std::vector<PauliObservable> out;
    if (!observables.empty()) {
        for (const auto &label : observables) {
            out.push_back(PauliObservable::parse(label));
            if (out.back().max_qubit() >= qubits) {
                throw ParameterError("observable " + label + " is outside the register");
            }
        }
        return out;
    }
    if (task == Task::QaoaIsing) {
        for (uint32_t j = 0; j < qubits; ++j) {
            out.push_back(PauliObservable::single(j, Pauli::X));
        }
        for (uint32_t j = 0; j + 1 < qubits; ++j) {
            out.push_back(PauliObservable::pair(j, Pauli::Z, j + 1, Pauli::Z));
        }
    } else {
        const uint32_t mid = qubits / 2 - 1;
        out.push_back(PauliObservable::single(0, Pauli::X));
        out.push_back(PauliObservable::single(mid, Pauli::X));
        out.push_back(PauliObservable::pair(0, Pauli::Z, 1, Pauli::Z));
        out.push_back(PauliObservable::pair(mid, Pauli::Z, mid + 1, Pauli::Z));
    }
    return out;
}

ExperimentConfig parse_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(j, "config",
               {"schema_version", "task", "qubits", "layers", "field", "angles", "observables", "noise", "levels",
                "strategy", "training_circuits", "shots", "backend", "mpo_cutoff", "mpo_absolute", "instances",
                "seed", "threads", "output", "ridge", "dump_training"});
    if (!j.contains("schema_version") || as_uint(j["schema_version"], "schema_version") != kConfigSchemaVersion) {
        throw FormatError("config needs \"schema_version\": " + std::to_string(kConfigSchemaVersion));
    }
    if (!j.contains("task")) {
        throw FormatError("config needs a \"task\"");
    }
    ExperimentConfig cfg = ExperimentConfig::defaults(task_from_name(as_string(j["task"], "task")));
    if (j.contains("qubits")) cfg.qubits = as_u32(j["qubits"], "qubits");
    if (j.contains("layers")) cfg.layers = as_u32(j["layers"], "layers");
    if (j.contains("field")) cfg.field = as_double(j["field"], "field");
    if (j.contains("angles")) {
        const json &a = j["angles"];
        check_keys(a, "angles", {"seed", "gamma", "beta"});
        if (a.contains("seed")) cfg.angle_seed = as_uint(a["seed"], "angles.seed");
        if (a.contains("gamma")) cfg.gamma = as_doubles(a["gamma"], "angles.gamma");
        if (a.contains("beta")) cfg.beta = as_doubles(a["beta"], "angles.beta");
    }
    if (j.contains("observables")) {
        if (!j["observables"].is_array()) {
            throw FormatError("observables must be a list of labels");
        }
        for (const auto &o : j["observables"]) {
            cfg.observables.push_back(as_string(o, "observables"));
        }
    }
    if (j.contains("noise")) parse_noise(j["noise"], cfg.noise);
    if (j.contains("levels")) {
        if (!j["levels"].is_array()) {
            throw FormatError("levels must be a list of odd integers");
        }
        std::vector<uint32_t> levels;
        for (const auto &l : j["levels"]) {
            levels.push_back(as_u32(l, "levels"));
        }
        cfg.levels = NoiseLevelSet(levels);
    }
    if (j.contains("strategy")) parse_strategy(j["strategy"], cfg.strategy);
    if (j.contains("training_circuits")) cfg.training_circuits = as_u32(j["training_circuits"], "training_circuits");
    if (j.contains("shots")) {
        const json &s = j["shots"];
        if (s.is_string() && s.get<std::string>() == "inf") {
            cfg.shots.reset();
        } else {
            cfg.shots = as_uint(s, "shots");
        }
    }
    if (j.contains("backend")) {
        const std::string b = as_string(j["backend"], "backend");
        if (b == "dense") {
            cfg.backend = Backend::Dense;
        } else if (b == "mpo") {
            cfg.backend = Backend::Mpo;
        } else {
            throw FormatError("backend must be dense or mpo");
        }
    }
    if (j.contains("mpo_cutoff")) cfg.mpo_cutoff = as_double(j["mpo_cutoff"], "mpo_cutoff");
    if (j.contains("mpo_absolute")) cfg.mpo_absolute = as_bool(j["mpo_absolute"], "mpo_absolute");
    if (j.contains("instances")) cfg.instances = as_u32(j["instances"], "instances");
    if (j.contains("seed")) cfg.seed = as_uint(j["seed"], "seed");
    if (j.contains("threads")) cfg.threads = as_u32(j["threads"], "threads");
    if (j.contains("output")) cfg.output = as_string(j["output"], "output");
    if (j.contains("ridge")) cfg.ridge = as_double(j["ridge"], "ridge");
    if (j.contains("dump_training")) cfg.dump_training = as_bool(j["dump_training"], "dump_training");
    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open config file " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_json(const ExperimentConfig &cfg) {
    json j;
    j["schema_version"] = kConfigSchemaVersion;
    j["task"] = std::string(task_name(cfg.task));
    j["qubits"] = cfg.qubits;
    j["layers"] = cfg.layers;
    if (cfg.task == Task::QaoaIsing) {
        j["field"] = cfg.field;
        json a = json::object();
        if (cfg.angle_seed) a["seed"] = *cfg.angle_seed;
        if (!cfg.gamma.empty()) {
            a["gamma"] = cfg.gamma;
            a["beta"] = cfg.beta;
        }
        j["angles"] = a;
    }
    json obs = json::array();
    for (const auto &o : cfg.resolved_observables()) {
        obs.push_back(o.label());
    }
    j["observables"] = obs;
    json noise;
    noise["mode"] = cfg.noise.mode == NoiseMode::PerGate ? "per-gate" : "global";
    noise["eps_1q"] = cfg.noise.eps_1q;
    noise["eps_2q"] = cfg.noise.eps_2q;
    noise["amplitude_damping"] = cfg.noise.amplitude_damping;
    noise["noiseless_rz"] = cfg.noise.noiseless_rz;
    noise["global_eps"] = cfg.noise.global_eps;
    json triggers = json::array();
    for (GateKind k : cfg.noise.global_triggers) {
        triggers.push_back(std::string(gate_kind_name(k)));
    }
    noise["global_triggers"] = triggers;
    j["noise"] = noise;
    j["levels"] = cfg.levels.levels();
    json strat;
    strat["variant"] = cfg.strategy.variant == SubstitutionStrategy::Variant::Simple ? "simple" : "cone-weighted";
    strat["non_clifford"] = cfg.strategy.non_clifford;
    strat["sigma"] = cfg.strategy.sigma;
    strat["distance"] = cfg.strategy.distance == DistanceConvention::PhaseInvariant ? "phase-invariant" : "literal";
    j["strategy"] = strat;
    j["training_circuits"] = cfg.training_circuits;
    if (cfg.shots) {
        j["shots"] = *cfg.shots;
    } else {
        j["shots"] = "inf";
    }
    j["backend"] = cfg.backend == Backend::Dense ? "dense" : "mpo";
    j["mpo_cutoff"] = cfg.mpo_cutoff;
    j["mpo_absolute"] = cfg.mpo_absolute;
    j["instances"] = cfg.instances;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["output"] = cfg.output;
    j["ridge"] = cfg.ridge;
    j["dump_training"] = cfg.dump_training;
    return j.dump(2);
}

}  // namespace vncdr
