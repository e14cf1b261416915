import cmath
import math

import numpy as np
import pytest

import confmap


def test_disk_forward_and_backward():
    fwd, rep = confmap.build_forward(confmap.disk_region(), 0.5, confmap.PointConfig(32, 0.2, 0.1))
    assert rep["residual"] < 1e-9
    assert fwd(0.5) == 0
    w = fwd(np.exp(2j * np.pi * np.linspace(0, 1, 64, endpoint=False)))
    assert np.max(np.abs(np.abs(w) - 1.0)) < 3e-7

    bwd, brep = confmap.build_backward(fwd, confmap.PointConfig(32, 0.2, 0.1))
    assert brep["residual"] < 1e-9
    z = np.array([0.1 + 0.2j, -0.3j, 0.6])
    assert np.max(np.abs(bwd(fwd(z)) - z)) < 1e-5


def test_frame_modulus():
    ex = confmap.frame_case(2 * math.sqrt(14), 7, 2, 1)
    fwd, _ = confmap.build_forward(ex.region, 0.0, confmap.PointConfig(48, 0.06, 0.03))
    assert abs(fwd.moduli[0] - math.sqrt(14) / 7) < 1e-6


def test_exact_cases():
    c = confmap.cassini_case(1.1)
    z = 0.3 + 0.1j
    assert abs(c.backward(c.forward(z)) - z) < 1e-12
    assert abs(confmap.mobius_case(0.5).forward(1.0) - 1.0) < 1e-15


def test_errors_are_exceptions():
    with pytest.raises(confmap.GeometryError):
        confmap.build_forward(confmap.disk_region(), 2.0)
    with pytest.raises(confmap.ConfigError):
        confmap.parse_config_text('{"region":{"kind":"disk"},"z0":[0,0],"N_list":[],"rtilde_f":0.2,"rtilde_b":0.1}')
    assert issubclass(confmap.SolverError, confmap.Error)


def test_sweep_from_config(tmp_path):
    cfg = confmap.parse_config_text(
        '{"region":{"kind":"disk"},"z0":[0.5,0],"N_list":[8,16,24],"rtilde_f":0.2,"rtilde_b":0.1}'
    )
    recs = confmap.run_sweep(cfg)
    assert [r["N"] for r in recs] == [8, 16, 24]
    errs = [r["err_f"] for r in recs]
    assert errs[0] > errs[1] > errs[2]
    assert recs[0]["err_rho"] is None
    written, warnings = confmap.run(cfg, str(tmp_path), csv=True, json=True)
    assert (tmp_path / "sweep.csv").exists()
    assert (tmp_path / "forward_image.json").exists()
    assert not warnings


def test_hilbert_and_norm():
    coeffs = [0, 0.5, 0, 0.5, 0]
    b = confmap.hilbert_transform([complex(x) for x in coeffs])
    assert cmath.isclose(b[1], 0.5j) and cmath.isclose(b[3], -0.5j)
    t = np.arange(64) / 64
    assert math.isclose(confmap.discrete_hs_norm(list(np.cos(2 * np.pi * t)), 0.0), math.sqrt(0.5), rel_tol=1e-12)
