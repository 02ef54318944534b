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

#include "vncdr/pauli_simulator.hpp"

#include <algorithm>
#include <optional>

#include "vncdr/channel_algebra.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/statevector.hpp"

namespace vncdr {

using Matrix16d = Eigen::Matrix<double, 16, 16>;

namespace {

// Entries of a CPTP map's transfer matrix are bounded by 1, so this
// threshold only removes rounding debris from structural zeros.
constexpr double kDropTol = 1e-15;

Matrix16d swap_order(const Matrix16d &m) {
    auto swapped = [](int l) { return 4 * (l % 4) + l / 4; };
    Matrix16d out;
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            out(swapped(r), swapped(c)) = m(r, c);
        }
    }
    return out;
}

Eigen::Matrix4d ptm4(const KrausChannel &ch) {
    return pauli_transfer_matrix(ch);
}

Eigen::Matrix4d noise_ptm1(const NoiseModel &noise, GateKind kind) {
    const KrausChannel *ch = noise.channel_for(kind);
    return ch ? ptm4(*ch) : Eigen::Matrix4d::Identity();
}

}  // namespace

SparsePtm16 SparsePtm16::from_dense(const Matrix16d &m, double drop_tol) {
    SparsePtm16 s;
    s.row_start.push_back(0);
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            if (std::abs(m(r, c)) > drop_tol) {
                s.cols.push_back(static_cast<uint8_t>(c));
                s.vals.push_back(m(r, c));
            }
        }
        s.row_start.push_back(static_cast<uint16_t>(s.vals.size()));
    }
    return s;
}

PtmProgram compile_ptm_program(const Circuit &circuit, const NoiseModel &noise) {
    const uint32_t nq = circuit.qubit_count();
    PtmProgram prog;
    prog.qubits = nq;

    const Eigen::Matrix4d noise_rz = noise_ptm1(noise, GateKind::RZ);
    const Eigen::Matrix4d noise_sx = noise_ptm1(noise, GateKind::SX);
    const Eigen::Matrix4d sx = ptm4(gate_channel(gate_unitary(Gate::sx(0)), nullptr));
    const Matrix16d cnot = [&] {
        const KrausChannel *ch = noise.channel_for(GateKind::CNOT);
        return Matrix16d(pauli_transfer_matrix(gate_channel(gate_unitary(Gate::cnot(0, 1)), ch)));
    }();

    std::vector<std::optional<Eigen::Matrix4d>> pending(nq);
    std::vector<long> last(nq, -1);

    auto flush = [&](uint32_t q) {
        if (!pending[q]) {
            return;
        }
        PtmOp op;
        op.kind = PtmOp::Kind::One;
        op.a = q;
        op.one = *pending[q];
        prog.ops.push_back(std::move(op));
        last[q] = static_cast<long>(prog.ops.size()) - 1;
        pending[q].reset();
    };

    for (const Gate &g : circuit.gates()) {
        if (g.kind == GateKind::CNOT) {
            const uint32_t a = g.q0, b = g.q1;
            const bool clean = !pending[a] && !pending[b];
            flush(a);
            flush(b);
            const long prev = last[a];
            if (clean && prev >= 0 && prev == last[b] && prog.ops[prev].kind == PtmOp::Kind::Two) {
                PtmOp &op = prog.ops[prev];
                op.two = (op.a == a ? cnot : swap_order(cnot)) * op.two;
            } else {
                PtmOp op;
                op.kind = PtmOp::Kind::Two;
                op.a = a;
                op.b = b;
                op.two = cnot;
                prog.ops.push_back(std::move(op));
                last[a] = last[b] = static_cast<long>(prog.ops.size()) - 1;
            }
        } else {
            Eigen::Matrix4d r;
            if (g.kind == GateKind::RZ) {
                r = noise_rz * ptm4(gate_channel(gate_unitary(g), nullptr));
            } else {
                r = noise_sx * sx;
            }
            pending[g.q0] = pending[g.q0] ? Eigen::Matrix4d(r * *pending[g.q0]) : r;
        }
        if (noise.triggers_global(g.kind)) {
            for (uint32_t q = 0; q < nq; ++q) {
                flush(q);
            }
            PtmOp op;
            op.kind = PtmOp::Kind::Global;
            op.eps = noise.global_eps();
            prog.ops.push_back(std::move(op));
            std::fill(last.begin(), last.end(), static_cast<long>(prog.ops.size()) - 1);
        }
    }
    for (uint32_t q = 0; q < nq; ++q) {
        flush(q);
    }
    for (PtmOp &op : prog.ops) {
        if (op.kind == PtmOp::Kind::Two) {
            op.two_sparse = SparsePtm16::from_dense(op.two, kDropTol);
        }
    }
    return prog;
}

PauliSimulator::PauliSimulator(uint32_t qubits) : qubits_(qubits) {
    if (qubits == 0 || qubits > 13) {
        throw CapacityError("Pauli-basis simulator supports 1..13 qubits");
    }
    const size_t n = size_t{1} << (2 * qubits);
    coeffs_.assign(n, 0.0);
    // |0><0| = (I + Z)/2 on every qubit: r_P = 1 iff every digit is I or Z.
    for (size_t idx = 0; idx < n; ++idx) {
        bool ok = true;
        for (uint32_t q = 0; q < qubits && ok; ++q) {
            const size_t digit = (idx >> (2 * q)) & 3;
            ok = digit == 0 || digit == 3;
        }
        if (ok) {
            coeffs_[idx] = 1.0;
        }
    }
}

void PauliSimulator::run(const PtmProgram &program) {
    if (program.qubits != qubits_) {
        throw ParameterError("program width does not match simulator");
    }
    for (const PtmOp &op : program.ops) {
        switch (op.kind) {
            case PtmOp::Kind::One:
                apply_one(op.a, op.one);
                break;
            case PtmOp::Kind::Two:
                apply_two(op.a, op.b, op.two_sparse);
                break;
            case PtmOp::Kind::Global:
                apply_global_depolarizing(op.eps);
                break;
        }
    }
}

void PauliSimulator::apply_one(uint32_t q, const Eigen::Matrix4d &m) {
    const size_t s = size_t{1} << (2 * q);
    const size_t n = coeffs_.size();
    double *r = coeffs_.data();
    for (size_t hi = 0; hi < n; hi += 4 * s) {
        for (size_t lo = 0; lo < s; ++lo) {
            double *p = r + hi + lo;
            const double v0 = p[0], v1 = p[s], v2 = p[2 * s], v3 = p[3 * s];
            p[0] = m(0, 0) * v0 + m(0, 1) * v1 + m(0, 2) * v2 + m(0, 3) * v3;
            p[s] = m(1, 0) * v0 + m(1, 1) * v1 + m(1, 2) * v2 + m(1, 3) * v3;
            p[2 * s] = m(2, 0) * v0 + m(2, 1) * v1 + m(2, 2) * v2 + m(2, 3) * v3;
            p[3 * s] = m(3, 0) * v0 + m(3, 1) * v1 + m(3, 2) * v2 + m(3, 3) * v3;
        }
    }
}

void PauliSimulator::apply_two(uint32_t a, uint32_t b, const SparsePtm16 &m) {
    const size_t sa = size_t{1} << (2 * a);
    const size_t sb = size_t{1} << (2 * b);
    const size_t slo = std::min(sa, sb);
    const size_t shi = std::max(sa, sb);
    size_t off[16];
    for (int l = 0; l < 16; ++l) {
        off[l] = static_cast<size_t>(l / 4) * sa + static_cast<size_t>(l % 4) * sb;
    }
    const size_t n = coeffs_.size();
    double *r = coeffs_.data();
    double in[16];
    for (size_t x = 0; x < n; x += 4 * shi) {
        for (size_t y = 0; y < shi; y += 4 * slo) {
            for (size_t z = 0; z < slo; ++z) {
                double *p = r + x + y + z;
                for (int l = 0; l < 16; ++l) {
                    in[l] = p[off[l]];
                }
                for (int i = 0; i < 16; ++i) {
                    double acc = 0.0;
                    for (uint16_t k = m.row_start[i]; k < m.row_start[i + 1]; ++k) {
                        acc += m.vals[k] * in[m.cols[k]];
                    }
                    p[off[i]] = acc;
                }
            }
        }
    }
}

void PauliSimulator::apply_global_depolarizing(double eps) {
    const double f = 1.0 - eps;
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        coeffs_[i] *= f;
    }
}

double PauliSimulator::expectation(const PauliObservable &obs) const {
    size_t idx = 0;
    for (auto [q, p] : obs.terms()) {
        if (q >= qubits_) {
            throw ParameterError("observable qubit out of range");
        }
        idx |= static_cast<size_t>(p) << (2 * q);
    }
    return coeffs_[idx];
}

DensityMatrix PauliSimulator::to_density_matrix() const {
    if (qubits_ > 8) {
        throw CapacityError("to_density_matrix is limited to 8 qubits");
    }
    const size_t dim = size_t{1} << qubits_;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    const double norm = 1.0 / static_cast<double>(dim);
    for (size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (coeffs_[idx] == 0.0) {
            continue;
        }
        std::map<uint32_t, Pauli> terms;
        for (uint32_t q = 0; q < qubits_; ++q) {
            terms[q] = static_cast<Pauli>((idx >> (2 * q)) & 3);
        }
        const PauliMasks masks = PauliMasks::of(PauliObservable(std::move(terms)));
        for (size_t x = 0; x < dim; ++x) {
            rho(x ^ masks.x_mask, x) += coeffs_[idx] * norm * masks.phase(x);
        }
    }
    return DensityMatrix(std::move(rho));
}

}  // namespace vncdr
