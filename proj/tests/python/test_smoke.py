# Copyright 2026 The qadc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import os
from pathlib import Path

import numpy as np
import pytest

import qadc

DATA = Path(os.environ.get("QADC_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def bell_state():
    reg = qadc.Register([("A", 2), ("B", 2)])
    m = np.zeros((4, 4), dtype=complex)
    for r in (0, 3):
        for c in (0, 3):
            m[r, c] = 0.5
    return qadc.DensityMatrix(reg, m)


def test_entropy_and_mutual_information():
    rho = bell_state()
    assert qadc.von_neumann_entropy(rho) == pytest.approx(0.0, abs=1e-10)
    assert qadc.mutual_information(rho, ["A"], ["B"]) == pytest.approx(2.0)
    marginal = qadc.partial_trace_state(rho, ["A"])
    assert qadc.von_neumann_entropy(marginal) == pytest.approx(1.0)


def test_pinching_inequality():
    rng = np.random.default_rng(7)
    reg = qadc.Register([("X", 4)])
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    a = qadc.LabeledOperator(reg, (g + g.conj().T) / 2)
    h = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    psd = h @ h.conj().T
    b = qadc.LabeledOperator(reg, psd / np.trace(psd).real)
    clusters = qadc.spectral_decompose(a)
    nu = len(clusters)
    pinched = qadc.pinch(a, b)
    slack = np.linalg.eigvalsh(nu * pinched.matrix - b.matrix).min()
    assert slack >= -1e-8


def test_sandwiched_renyi_vs_fidelity():
    reg = qadc.Register([("X", 2)])
    rho = qadc.DensityMatrix(reg, np.diag([0.8, 0.2]).astype(complex))
    sigma = qadc.DensityMatrix(reg, np.diag([0.4, 0.6]).astype(complex))
    d_half = qadc.sandwiched_renyi(rho, sigma, 0.5)
    assert d_half == pytest.approx(-2 * math.log2(qadc.fidelity(rho, sigma)), abs=1e-9)


def test_rate_on_shipped_model():
    model = qadc.load_model(str(DATA / "models" / "identity_qubit.json"))
    strat = qadc.load_strategy(str(DATA / "strategies" / "identity_qubit.json"))
    report = qadc.achievable_rate(qadc.assemble(model, strat))
    assert report["r_low"] == pytest.approx(1.0, abs=1e-9)
    assert report["i_vs_given_u"] == pytest.approx(0.0, abs=1e-9)


def test_codebook_determinism_and_simulation():
    model = qadc.load_model(str(DATA / "models" / "orthogonal_actions.json"))
    strat = qadc.load_strategy(str(DATA / "strategies" / "orthogonal_actions.json"))
    params = qadc.CodeParams(2, 2)
    cb1 = qadc.sample_codebook(strat, params, 42)
    cb2 = qadc.sample_codebook(strat, params, 42)
    assert cb1.u == cb2.u and cb1.v == cb2.v

    mc1 = qadc.monte_carlo_expected_error(model, strat, params, 20, 5, workers=1)
    mc4 = qadc.monte_carlo_expected_error(model, strat, params, 20, 5, workers=4)
    assert mc1["per_trial_error"] == mc4["per_trial_error"]
    assert mc1["mean_error"] <= 0.2  # designed instance: rare collisions only


def test_hayashi_nagaoka():
    reg = qadc.Register([("X", 3)])
    eye = qadc.LabeledOperator(reg, np.eye(3, dtype=complex))
    zero = qadc.LabeledOperator(reg, np.zeros((3, 3), dtype=complex))
    result = qadc.hayashi_nagaoka_check(eye, zero)
    assert result["pass_"]
    assert result["min_eig_slack"] == pytest.approx(0.0, abs=1e-12)
