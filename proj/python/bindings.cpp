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

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vncdr/causal_cone.hpp"
#include "vncdr/clifford_training.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/harness.hpp"
#include "vncdr/mitigation.hpp"
#include "vncdr/sampling.hpp"
#include "vncdr/simulate.hpp"

namespace py = pybind11;
using namespace vncdr;

namespace {

PauliObservable obs_of(const std::string &label) {
    return PauliObservable::parse(label);
}

Backend backend_of(const std::string &name) {
    if (name == "dense") return Backend::Dense;
    if (name == "mpo") return Backend::Mpo;
    throw ParameterError("backend must be 'dense' or 'mpo'");
}

CostMethod cost_method_of(const std::string &name) {
    if (name == "zne") return CostMethod::Zne;
    if (name == "cdr") return CostMethod::Cdr;
    if (name == "vncdr") return CostMethod::Vncdr;
    throw ParameterError("method must be 'zne', 'cdr' or 'vncdr'");
}

SubstitutionStrategy strategy_of(const std::string &variant, uint32_t non_clifford, double sigma, uint64_t seed) {
    SubstitutionStrategy s;
    if (variant == "simple") {
        s.variant = SubstitutionStrategy::Variant::Simple;
    } else if (variant == "cone-weighted") {
        s.variant = SubstitutionStrategy::Variant::ConeWeighted;
    } else {
        throw ParameterError("variant must be 'simple' or 'cone-weighted'");
    }
    s.non_clifford = non_clifford;
    s.sigma = sigma;
    s.seed = seed;
    return s;
}

py::dict rows_to_dict(const std::vector<ResultRow> &rows) {
    py::list out;
    for (const auto &r : rows) {
        py::dict d;
        d["instance"] = r.instance;
        d["observable"] = r.observable;
        d["method"] = r.method;
        d["estimate"] = r.estimate;
        d["exact"] = r.exact;
        d["abs_error"] = r.abs_error;
        out.append(d);
    }
    py::dict res;
    res["rows"] = out;
    return res;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Noisy circuit simulation and error-mitigation estimators";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<DegenerateDesignError>(m, "DegenerateDesignError", PyExc_ArithmeticError);

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<uint32_t>(), py::arg("qubits"))
        .def("rz", [](Circuit &c, uint32_t q, double a) -> Circuit & { return c.append(Gate::rz(q, a)); },
             py::return_value_policy::reference_internal)
        .def("sx", [](Circuit &c, uint32_t q) -> Circuit & { return c.append(Gate::sx(q)); },
             py::return_value_policy::reference_internal)
        .def("cnot", [](Circuit &c, uint32_t a, uint32_t b) -> Circuit & { return c.append(Gate::cnot(a, b)); },
             py::return_value_policy::reference_internal)
        .def("u", [](Circuit &c, uint32_t q, double t, double p, double l) -> Circuit & {
            append_u(c, q, t, p, l);
            return c;
        }, py::return_value_policy::reference_internal)
        .def_property_readonly("qubits", &Circuit::qubit_count)
        .def("__len__", &Circuit::size)
        .def("cnot_count", &Circuit::cnot_count)
        .def("cnot_depth", &Circuit::cnot_depth)
        .def("non_clifford_count", [](const Circuit &c) { return count_non_clifford(c); })
        .def("to_text", [](const Circuit &c) { return to_text(c); })
        .def_static("from_text", [](const std::string &t) { return circuit_from_text(t); })
        .def(py::self == py::self);

    py::class_<NoiseSpec>(m, "NoiseSpec")
        .def(py::init<>())
        .def_readwrite("eps_1q", &NoiseSpec::eps_1q)
        .def_readwrite("eps_2q", &NoiseSpec::eps_2q)
        .def_readwrite("amplitude_damping", &NoiseSpec::amplitude_damping)
        .def_readwrite("noiseless_rz", &NoiseSpec::noiseless_rz)
        .def_static("noiseless", &NoiseSpec::noiseless)
        .def_static("global_depolarizing", [](double eps) { return NoiseSpec::global(eps); }, py::arg("eps"));

    m.def("qaoa_ising", [](uint32_t q, std::vector<double> gamma, std::vector<double> beta, double field) {
        return build_qaoa_ising({q, std::move(gamma), std::move(beta), field});
    }, py::arg("qubits"), py::arg("gamma"), py::arg("beta"), py::arg("field") = 2.0);
    m.def("random_hea", &build_random_hea, py::arg("qubits"), py::arg("layers"), py::arg("seed"));
    m.def("amplify_fiim", &amplify_fiim, py::arg("circuit"), py::arg("level"));
    m.def("causal_cone", [](const Circuit &c, const std::string &obs) {
        const CausalCone cone = causal_cone(c, obs_of(obs));
        return py::make_tuple(cone.gate_indices(), cone.active_qubits);
    }, py::arg("circuit"), py::arg("observable"), "(gate indices, active input qubits)");

    m.def("exact_expectation", [](const Circuit &c, const std::string &obs) { return exact_expectation(c, obs_of(obs)); },
          py::arg("circuit"), py::arg("observable"));
    m.def("noisy_expectation", [](const Circuit &c, const NoiseSpec &noise, const std::string &obs,
                                  const std::string &backend, bool restrict_to_cone, double mpo_cutoff) {
        SimulationOptions opts;
        opts.backend = backend_of(backend);
        opts.restrict_to_cone = restrict_to_cone;
        opts.mpo.cutoff = mpo_cutoff;
        return noisy_expectation(c, NoiseModel(noise), obs_of(obs), opts);
    }, py::arg("circuit"), py::arg("noise"), py::arg("observable"), py::arg("backend") = "dense",
          py::arg("restrict_to_cone") = true, py::arg("mpo_cutoff") = 1e-12);
    m.def("sample_expectation", [](double mu, uint64_t shots, uint64_t seed) {
        return sample_expectation(mu, ShotConfig::finite(shots, seed));
    }, py::arg("mu"), py::arg("shots"), py::arg("seed"));

    m.def("clifford_distance", [](double beta, int n, bool literal) {
        return clifford_distance(beta, n, literal ? DistanceConvention::LiteralFrobenius : DistanceConvention::PhaseInvariant);
    }, py::arg("beta"), py::arg("n"), py::arg("literal") = false);
    m.def("closest_clifford", [](double beta) { return closest_clifford(beta); }, py::arg("beta"));
    m.def("training_circuits", [](const Circuit &c, const std::string &obs, uint32_t count, const std::string &variant,
                                  uint32_t non_clifford, double sigma, uint64_t seed) {
        return generate_training_circuits(c, obs_of(obs), strategy_of(variant, non_clifford, sigma, seed), count);
    }, py::arg("circuit"), py::arg("observable"), py::arg("count"), py::arg("variant") = "simple",
          py::arg("non_clifford") = 0, py::arg("sigma") = 0.5, py::arg("seed") = 0);

    m.def("richardson_coefficients", [](std::vector<uint32_t> levels) {
        return richardson_coefficients(NoiseLevelSet(std::move(levels)));
    }, py::arg("levels"));
    m.def("zne_richardson", [](const std::vector<double> &mu, std::vector<uint32_t> levels) {
        return zne_richardson(mu, NoiseLevelSet(std::move(levels)));
    }, py::arg("mu"), py::arg("levels"));
    m.def("zne_linear", [](const std::vector<double> &mu, std::vector<uint32_t> levels) {
        const LinearFit f = zne_linear(mu, NoiseLevelSet(std::move(levels)));
        return py::make_tuple(f.b0, f.b1);
    }, py::arg("mu"), py::arg("levels"), "(intercept, slope)");
    m.def("cdr_fit", [](const std::vector<double> &x, const std::vector<double> &y) {
        const CdrFit f = cdr_fit(x, y);
        return py::make_tuple(f.a1, f.a2);
    }, py::arg("x"), py::arg("y"));
    m.def("vncdr_fit", [](const std::vector<std::vector<double>> &x, const std::vector<double> &y, double ridge) {
        if (x.size() != y.size() || x.empty()) throw ParameterError("x and y need the same non-zero row count");
        Eigen::MatrixXd xm(x.size(), x[0].size());
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i].size() != x[0].size()) throw ParameterError("ragged design matrix");
            for (size_t j = 0; j < x[i].size(); ++j) xm(i, j) = x[i][j];
        }
        const VncdrFit f = vncdr_fit(xm, Eigen::Map<const Eigen::VectorXd>(y.data(), y.size()), ridge);
        py::dict d;
        d["a"] = f.a;
        d["rss"] = f.rss;
        d["rank"] = f.rank;
        return d;
    }, py::arg("x"), py::arg("y"), py::arg("ridge") = 0.0);
    m.def("vncdr_predict", [](const std::vector<double> &a, const std::vector<double> &mu) {
        VncdrFit f;
        f.a = a;
        return vncdr_predict(f, mu);
    }, py::arg("a"), py::arg("mu"));

    m.def("shot_cost", [](const std::string &method, uint64_t m_train, uint64_t levels, uint64_t shots) {
        return shot_cost(cost_method_of(method), m_train, levels, shots);
    }, py::arg("method"), py::arg("m"), py::arg("levels"), py::arg("shots"));

    m.def("run_experiment", [](const std::string &config_json, py::object output_dir) {
        const ExperimentConfig cfg = parse_config(config_json);
        RunResult r;
        {
            py::gil_scoped_release release;
            r = run_experiment(cfg);
        }
        const auto rows = result_rows(r);
        if (!output_dir.is_none()) emit_results(r, py::str(output_dir));
        py::dict out = rows_to_dict(rows);
        out["summary"] = summary_to_json(summarize(rows, cfg.task));
        return out;
    }, py::arg("config_json"), py::arg("output_dir") = py::none(),
          "Runs a JSON-configured experiment; returns result rows and the summary as JSON text.");
    m.def("validate", [](uint64_t seed) {
        py::list out;
        for (const auto &c : run_validation_suite(seed)) out.append(py::make_tuple(c.name, c.passed, c.detail));
        return out;
    }, py::arg("seed") = 0);
}
