# Copyright 2026 The rydgate Authors
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

import numpy as np
import pytest

import rydgate as rg

OMEGA = rg.angular_from_mhz(0.8)


@pytest.fixture(scope="module")
def design():
    return rg.design_protocol(OMEGA, OMEGA, math.pi)


def test_design_chain(design):
    assert design.separation == pytest.approx(20.99, abs=0.01)
    assert design.t_gate == pytest.approx(3.415, abs=1e-3)
    assert design.omega_t / design.interaction == pytest.approx(math.sqrt(3.0), rel=1e-14)
    assert rg.gate_duration(design) == pytest.approx(design.t_gate, rel=1e-15)


def test_cz_and_cnot_matrices(design):
    cz = rg.build_cz_protocol(design)
    m = rg.gate_matrix(cz)
    assert m.shape == (4, 4)
    np.testing.assert_allclose(m, np.diag([1, 1, 1, -1]), atol=1e-9)
    assert rg.pedersen_fidelity(m, rg.ideal_gate(cz)) == pytest.approx(1.0, abs=1e-9)

    cnot = rg.build_cnot_protocol(design)
    expected = np.eye(4)[[0, 1, 3, 2]]
    np.testing.assert_allclose(rg.gate_matrix(cnot), expected, atol=1e-9)


def test_zero_interaction_is_identity(design):
    np.testing.assert_allclose(rg.gate_matrix(rg.build_cz_protocol(design), 0.0), np.eye(4), atol=1e-9)


def test_exposure_and_decay(design):
    t_ryd = rg.rydberg_exposure(rg.build_cz_protocol(design))
    assert t_ryd == pytest.approx(1.91, abs=0.02)
    assert rg.decay_error_from_exposure(t_ryd, 0.311) == pytest.approx(6.14e-3, rel=0.02)


def test_noise_average(design):
    cz = rg.build_cz_protocol(design)
    cfg = rg.NoiseConfig()
    cfg.trap_separation = design.separation
    sigmas = rg.inflate_sigmas(cfg, design.t_gate)
    assert (sigmas.sigma_z, sigmas.sigma_perp) == pytest.approx((1.52, 0.32), abs=0.01)
    grid = rg.grid_average_fidelity(cz, rg.VdwModel(), sigmas, design.separation, delta=0.25)
    assert grid.mean_fidelity == pytest.approx(0.9910, abs=1e-3)
    a = rg.monte_carlo_average_fidelity(cz, rg.VdwModel(), sigmas, design.separation, samples=5000, seed=3)
    b = rg.monte_carlo_average_fidelity(cz, rg.VdwModel(), sigmas, design.separation, samples=5000, seed=3,
                                        threads=3)
    assert a.mean_fidelity == b.mean_fidelity
    assert a.std_error > 0.0


def test_interaction_geometry():
    vdw = rg.VdwModel()
    assert rg.distance((0, 0, 3), (0, 0, 0), 4.0) == pytest.approx(5.0)
    v = rg.vdw_interaction(vdw, 20.99)
    assert rg.separation_for_interaction(vdw, v) == pytest.approx(20.99, rel=1e-12)


def test_errors():
    with pytest.raises(ValueError):
        rg.solve_interaction_for_phase(0.0, OMEGA)
    with pytest.raises(rg.InvalidParameter):
        rg.vdw_interaction(rg.VdwModel(), -1.0)
    with pytest.raises(rg.ConfigError):
        rg.solve({"omega_c_mhz": -1})


def test_command_wrappers():
    rec = rg.solve()
    assert rec["params"]["separation_um"] == pytest.approx(20.99, abs=0.01)
    sim = rg.simulate({"gate": "cnot"})
    assert sim["nominal_fidelity"] == pytest.approx(1.0, abs=1e-9)
    fid = rg.fidelity({"sampling": {"deltas": [0.3]}})
    assert 0.98 < fid["grid"]["mean_fidelity"] < 1.0
    rows = rg.sweep({"sweep": {"axis": "temperature", "values": [5, 10]}})
    assert [r["axis_value"] for r in rows] == [5, 10]


def test_config_echo_matches_schema():
    import json
    import pathlib

    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((pathlib.Path(__file__).parents[2] / "docs" / "config.schema.json").read_text())
    jsonschema.validate(rg.solve()["config"], schema)
    jsonschema.validate(rg.simulate({"gate": "cnot", "sampling": {"mode": "both"}})["config"], schema)
