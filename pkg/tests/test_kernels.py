import os
import random
import subprocess
import sys

import pytest

from uum import kernels
from uum.context import FormalContext
from uum.kernels import available_backends, load_backend

BACKENDS = available_backends()
needs_both = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")


def _random_context(rng, n, m, density):
    rows = [sum(1 << a for a in range(m) if rng.random() < density) for _ in range(n)]
    return FormalContext([f"g{i}" for i in range(n)], [f"m{i}" for i in range(m)], rows)


def _run(backend, ctx, cap=10**6):
    return load_backend(backend).next_closure(ctx.rows, ctx.cols, ctx.n_objects, ctx.n_attributes, cap)


def test_selected_backend_is_known():
    assert kernels.BACKEND in BACKENDS


def test_python_backend_always_available():
    assert "python" in BACKENDS


@needs_both
@pytest.mark.parametrize(
    "n,m,density",
    [(0, 0, 0.5), (1, 0, 0.5), (0, 3, 0.5), (5, 5, 0.5), (12, 9, 0.3), (70, 6, 0.5), (6, 70, 0.9), (65, 130, 0.03), (130, 65, 0.05)],
)
def test_backends_agree(n, m, density):
    ctx = _random_context(random.Random(n * 1000 + m), n, m, density)
    assert _run("cython", ctx) == _run("python", ctx)


@needs_both
def test_backends_agree_on_many_contexts():
    rng = random.Random(7)
    for _ in range(200):
        ctx = _random_context(rng, rng.randint(0, 9), rng.randint(0, 9), rng.choice([0.2, 0.5, 0.8]))
        assert _run("cython", ctx) == _run("python", ctx)


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("cap", [0, 1, 3, 6])
def test_cap_truncation(backend, cap, table1):
    found, overflow = _run(backend, table1, cap)
    full, _ = _run(backend, table1)
    assert len(full) == 6
    assert overflow == (cap < 6)
    assert found == full[:cap] if cap < 6 else found == full


@pytest.mark.parametrize("backend", BACKENDS)
def test_closure(backend, table1):
    mod = load_backend(backend)
    # {α} -> extent {A}, intent {α, β}
    assert mod.closure(0b001, table1.rows, table1.cols, 3, 3) == (0b001, 0b011)
    assert mod.closure(0, table1.rows, table1.cols, 3, 3) == (0b111, 0)


@pytest.mark.parametrize("value,expected", [("1", "python"), ("0", None)])
def test_environment_forces_python_backend(value, expected):
    env = dict(os.environ, UUM_PURE_PYTHON=value)
    out = subprocess.run(
        [sys.executable, "-c", "from uum import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout.strip()
    assert out == (expected or available_backends()[0])
