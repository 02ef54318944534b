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

#include "vncdr/noise.hpp"

#include <algorithm>
#include <cmath>

#include "vncdr/errors.hpp"

namespace vncdr {

Eigen::Matrix2cd pauli_matrix(Pauli p) {
    const cdouble i{0.0, 1.0};
    Eigen::Matrix2cd m;
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -i, i, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

void check_arity(int arity) {
    if (arity != 1 && arity != 2) {
        throw ParameterError("channel arity must be 1 or 2");
    }
}

}  // namespace

KrausChannel identity_channel(int arity) {
    check_arity(arity);
    const int d = 1 << arity;
    return KrausChannel{arity, {Eigen::MatrixXcd::Identity(d, d)}};
}

KrausChannel depolarizing_channel(double eps, int arity) {
    check_arity(arity);
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw ParameterError("depolarizing eps must lie in [0, 1]");
    }
    if (eps == 0.0) {
        return identity_channel(arity);
    }
    const int d = 1 << arity;
    const double d2 = static_cast<double>(d * d);
    KrausChannel ch{arity, {}};
    ch.ops.push_back(std::sqrt(1.0 - eps * (d2 - 1.0) / d2) * Eigen::MatrixXcd::Identity(d, d));
    const double w = std::sqrt(eps / d2);
    const Pauli all[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    if (arity == 1) {
        for (int k = 1; k < 4; ++k) {
            ch.ops.push_back(w * Eigen::MatrixXcd(pauli_matrix(all[k])));
        }
    } else {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                if (a == 0 && b == 0) {
                    continue;
                }
                ch.ops.push_back(w * kron(pauli_matrix(all[a]), pauli_matrix(all[b])));
            }
        }
    }
    return ch;
}

KrausChannel amplitude_damping_channel(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ParameterError("amplitude damping gamma must lie in [0, 1]");
    }
    Eigen::MatrixXcd k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    KrausChannel ch{1, {k0}};
    if (gamma > 0) {
        ch.ops.push_back(k1);
    }
    return ch;
}

KrausChannel compose(const KrausChannel &first, const KrausChannel &second) {
    if (first.arity != second.arity) {
        throw ParameterError("cannot compose channels of different arity");
    }
    KrausChannel out{first.arity, {}};
    for (const auto &b : second.ops) {
        for (const auto &a : first.ops) {
            out.ops.push_back(b * a);
        }
    }
    return pruned(std::move(out));
}

KrausChannel tensor(const KrausChannel &a, const KrausChannel &b) {
    if (a.arity != 1 || b.arity != 1) {
        throw ParameterError("tensor expects two single-qubit channels");
    }
    KrausChannel out{2, {}};
    for (const auto &ka : a.ops) {
        for (const auto &kb : b.ops) {
            out.ops.push_back(kron(ka, kb));
        }
    }
    return out;
}

KrausChannel pruned(KrausChannel channel, double tol) {
    std::erase_if(channel.ops, [tol](const Eigen::MatrixXcd &k) { return k.norm() <= tol; });
    if (channel.ops.empty()) {
        const int d = channel.dim();
        channel.ops.push_back(Eigen::MatrixXcd::Zero(d, d));
    }
    return channel;
}

bool validate_channel(const KrausChannel &channel, double tol) {
    if (channel.arity != 1 && channel.arity != 2) {
        return false;
    }
    const int d = channel.dim();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &k : channel.ops) {
        if (k.rows() != d || k.cols() != d) {
            return false;
        }
        sum += k.adjoint() * k;
    }
    return (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

NoiseLevelSet::NoiseLevelSet(std::vector<uint32_t> levels) : levels_(std::move(levels)) {
    if (levels_.empty() || levels_[0] != 1) {
        throw ParameterError("noise levels must start at 1");
    }
    for (size_t j = 0; j < levels_.size(); ++j) {
        if (levels_[j] % 2 == 0) {
            throw ParameterError("noise levels must be odd");
        }
        if (j > 0 && levels_[j] <= levels_[j - 1]) {
            throw ParameterError("noise levels must be strictly increasing");
        }
    }
}

NoiseLevelSet NoiseLevelSet::odd(size_t count) {
    std::vector<uint32_t> v;
    for (size_t j = 0; j < count; ++j) {
        v.push_back(static_cast<uint32_t>(2 * j + 1));
    }
    return NoiseLevelSet(std::move(v));
}

NoiseSpec NoiseSpec::noiseless() {
    NoiseSpec s;
    s.eps_1q = 0.0;
    s.eps_2q = 0.0;
    s.amplitude_damping = 0.0;
    return s;
}

NoiseSpec NoiseSpec::global(double eps, std::vector<GateKind> triggers) {
    NoiseSpec s = noiseless();
    s.mode = NoiseMode::GlobalDepolarizing;
    s.global_eps = eps;
    s.global_triggers = std::move(triggers);
    return s;
}

NoiseModel::NoiseModel(const NoiseSpec &spec) {
    if (spec.mode == NoiseMode::GlobalDepolarizing) {
        set_global(spec.global_eps, spec.global_triggers);
    }
    KrausChannel one = depolarizing_channel(spec.eps_1q, 1);
    KrausChannel two = depolarizing_channel(spec.eps_2q, 2);
    if (spec.amplitude_damping > 0) {
        KrausChannel ad = amplitude_damping_channel(spec.amplitude_damping);
        one = compose(one, ad);
        two = compose(two, tensor(ad, ad));
    }
    auto nontrivial = [](const KrausChannel &ch) { return ch.ops.size() > 1; };
    if (nontrivial(one)) {
        set_channel(GateKind::SX, one);
        if (!spec.noiseless_rz) {
            set_channel(GateKind::RZ, one);
        }
    }
    if (nontrivial(two)) {
        set_channel(GateKind::CNOT, two);
    }
}

NoiseModel &NoiseModel::set_channel(GateKind kind, KrausChannel channel) {
    const int want = kind == GateKind::CNOT ? 2 : 1;
    if (channel.arity != want) {
        throw ParameterError("channel arity does not match gate class");
    }
    if (!validate_channel(channel)) {
        throw ParameterError("channel is not trace preserving");
    }
    channels_[static_cast<int>(kind)] = std::move(channel);
    return *this;
}

NoiseModel &NoiseModel::set_global(double eps, std::vector<GateKind> triggers) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw ParameterError("global depolarizing eps must lie in [0, 1]");
    }
    mode_ = NoiseMode::GlobalDepolarizing;
    global_eps_ = eps;
    global_triggers_ = std::move(triggers);
    return *this;
}

const KrausChannel *NoiseModel::channel_for(GateKind kind) const {
    const auto &ch = channels_[static_cast<int>(kind)];
    return ch ? &*ch : nullptr;
}

bool NoiseModel::triggers_global(GateKind kind) const {
    return mode_ == NoiseMode::GlobalDepolarizing &&
           std::find(global_triggers_.begin(), global_triggers_.end(), kind) != global_triggers_.end();
}

bool NoiseModel::is_noiseless() const {
    if (mode_ == NoiseMode::GlobalDepolarizing && global_eps_ > 0) {
        return false;
    }
    for (const auto &ch : channels_) {
        if (ch) {
            return false;
        }
    }
    return true;
}

double apply_global_depolarizing(double mu, double trace_over_dim, double eps, int times) {
    const double f = std::pow(1.0 - eps, times);
    return f * mu + (1.0 - f) * trace_over_dim;
}

Circuit amplify_fiim(const Circuit &circuit, uint32_t level) {
    if (level == 0 || level % 2 == 0) {
        throw ParameterError("FIIM level must be odd and positive");
    }
    if (level == 1) {
        return circuit;
    }
    Circuit out(circuit.qubit_count(), circuit.label());
    for (const Gate &g : circuit.gates()) {
        const uint32_t copies = g.kind == GateKind::CNOT ? level : 1;
        for (uint32_t k = 0; k < copies; ++k) {
            out.append(g);
        }
    }
    return out;
}

}  // namespace vncdr
