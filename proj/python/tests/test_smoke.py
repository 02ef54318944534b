# Copyright 2026 The vncdr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import pytest

import vncdr


def test_richardson_and_linear():
    assert vncdr.richardson_coefficients([1, 3, 5]) == pytest.approx([15 / 8, -10 / 8, 3 / 8], abs=1e-12)
    assert vncdr.zne_richardson([0.8, 0.4, 0.2], [1, 3, 5]) == pytest.approx(1.075)
    b0, b1 = vncdr.zne_linear([0.9, 0.7, 0.5], [1, 3, 5])
    assert (b0, b1) == pytest.approx((1.0, -0.1))
    with pytest.raises(ValueError):
        vncdr.richardson_coefficients([3, 5])


def test_cdr_and_vncdr():
    assert vncdr.cdr_fit([0.1, 0.2, 0.3], [0.4, 0.6, 0.8]) == pytest.approx((2.0, 0.2))
    with pytest.raises(ArithmeticError):
        vncdr.cdr_fit([0.4, 0.4], [0.1, 0.3])
    fit = vncdr.vncdr_fit([[0.9, 0.756], [0.1, 0.244]], [1.0, 0.0])
    assert sum(fit["a"]) == pytest.approx(1.0)
    assert vncdr.vncdr_predict(fit["a"], [0.58, 0.5512]) == pytest.approx(0.6)


def test_circuits_and_simulation():
    c = vncdr.Circuit(1).rz(0, math.pi / 2).sx(0).rz(0, math.pi / 2)
    assert vncdr.exact_expectation(c, "X0") == pytest.approx(1.0)
    noise = vncdr.NoiseSpec.global_depolarizing(0.1)
    assert vncdr.noisy_expectation(vncdr.Circuit(2).cnot(0, 1), noise, "Z0") == pytest.approx(0.9)
    q = vncdr.qaoa_ising(8, [0.3] * 4, [0.2] * 4)
    assert q.non_clifford_count() == 60
    h = vncdr.random_hea(4, 2, 7)
    spec = vncdr.NoiseSpec()
    dense = vncdr.noisy_expectation(h, spec, "Z1Z2")
    mpo = vncdr.noisy_expectation(h, spec, "Z1Z2", backend="mpo")
    assert dense == pytest.approx(mpo, abs=1e-8)
    assert vncdr.amplify_fiim(h, 3).cnot_count() == 3 * h.cnot_count()
    assert vncdr.Circuit.from_text(h.to_text()) == h


def test_training_and_costs():
    assert vncdr.clifford_distance(0.1, 0) == pytest.approx(math.sqrt(4 - 4 * math.cos(0.05)))
    assert vncdr.closest_clifford(3 * math.pi / 4) == 1
    h = vncdr.random_hea(4, 2, 3)
    ts = vncdr.training_circuits(h, "X1", 5, variant="cone-weighted", non_clifford=2, seed=4)
    assert len(ts) == 5
    assert vncdr.shot_cost("vncdr", 100, 5, 1) == 505
    assert vncdr.shot_cost("cdr", 100, 5, 1000) == 101000


def test_run_experiment(tmp_path):
    cfg = {"schema_version": 1, "task": "rqc", "qubits": 4, "layers": 2, "levels": [1, 3],
           "training_circuits": 10, "strategy": {"non_clifford": 3}, "instances": 1, "seed": 3}
    out = vncdr.run_experiment(json.dumps(cfg), str(tmp_path))
    assert len(out["rows"]) == 4 * 5
    summary = json.loads(out["summary"])
    assert summary["instances"] == 1
    assert (tmp_path / "results.csv").exists()
    with pytest.raises(ValueError):
        vncdr.run_experiment('{"task": "rqc"}')


def test_validate():
    assert all(passed for _, passed, _ in vncdr.validate(1))
