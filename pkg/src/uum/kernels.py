"""Backend selection for the enumeration kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise, or
when ``UUM_PURE_PYTHON`` is set to a non-empty value other than ``0``, the
pure-Python ``_pykernels`` module is used.
"""

import importlib
import os

BACKENDS = ("cython", "python")


def load_backend(name):
    """Import a backend module by name (``"cython"`` or ``"python"``)."""
    if name == "cython":
        return importlib.import_module("uum._kernels")
    if name == "python":
        return importlib.import_module("uum._pykernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    found = []
    for name in BACKENDS:
        try:
            load_backend(name)
        except ImportError:
            continue
        found.append(name)
    return found


def _select():
    if os.environ.get("UUM_PURE_PYTHON", "") not in ("", "0"):
        return "python", load_backend("python")
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", load_backend("python")


BACKEND, _impl = _select()
closure = _impl.closure
next_closure = _impl.next_closure
