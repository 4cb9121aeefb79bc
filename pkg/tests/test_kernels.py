import importlib
import subprocess
import sys

import numpy as np
import pytest

from samplers import random_sl2
from wedgecover import _kernels_py, kernels
from wedgecover.lorentz import make_rotation
from wedgecover.minkowski import E3

try:
    compiled = importlib.import_module("wedgecover._kernels")
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


def random_walk(rng, steps):
    """Path of Lorentz maps from the identity built from small random increments."""
    out = [np.eye(4)]
    for _ in range(steps):
        out.append(_kernels_py.spinor_map(random_sl2(rng, 0.02)) @ out[-1])
    return np.array(out)


def rotation_path(total, steps):
    return np.array([make_rotation(E3, t) for t in np.linspace(0, total, steps + 1)])


@pytest.mark.parametrize("impl", [_kernels_py, compiled], ids=["python", "compiled"])
def test_spinor_map_and_local_lift(impl):
    if impl is None:
        pytest.skip("compiled extension not built")
    rng = np.random.default_rng(0)
    for _ in range(100):
        a = random_sl2(rng, 0.2)
        lam = impl.spinor_map(a)
        back = impl.local_lift(lam)
        sign = 1 if np.real(np.trace(a)) >= 0 else -1
        assert np.allclose(back, sign * a, atol=1e-12)


@pytest.mark.parametrize("impl", [_kernels_py, compiled], ids=["python", "compiled"])
def test_full_turn_lifts_to_minus_identity(impl):
    if impl is None:
        pytest.skip("compiled extension not built")
    rep, dist = impl.lift_path(rotation_path(2 * np.pi, 256))
    assert np.allclose(rep, -np.eye(2), atol=1e-12)
    assert dist < 0.02
    rep, _ = impl.lift_path(rotation_path(4 * np.pi, 512))
    assert np.allclose(rep, np.eye(2), atol=1e-12)


@needs_compiled
def test_backends_agree():
    rng = np.random.default_rng(1)
    for _ in range(50):
        a = random_sl2(rng)
        assert np.allclose(compiled.spinor_map(a), _kernels_py.spinor_map(a), atol=1e-12)
        mu = _kernels_py.spinor_map(random_sl2(rng, 0.1))
        assert np.allclose(compiled.local_lift(mu), _kernels_py.local_lift(mu), atol=1e-14)
    lams = random_walk(rng, 100)
    r1, d1 = compiled.lift_path(lams)
    r2, d2 = _kernels_py.lift_path(lams)
    assert np.allclose(r1, r2, atol=1e-12) and d1 == pytest.approx(d2)


def test_python_batch_spinor_map():
    rng = np.random.default_rng(2)
    stack = np.array([random_sl2(rng) for _ in range(5)])
    batch = _kernels_py.spinor_map(stack)
    for a, lam in zip(stack, batch):
        assert np.allclose(lam, _kernels_py.spinor_map(a))


def test_environment_forces_python_backend():
    code = "import wedgecover.kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"WEDGECOVER_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "compiled")
