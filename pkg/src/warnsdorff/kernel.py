"""Hot-loop backend: the compiled extension if it was built, else pure Python.

Set ``WARNSDORFF_KERNEL=python`` to force the fallback.
"""

import importlib
import os

from . import _purekernel

BACKENDS = ("cython", "python")


def load(name):
    if name == "python":
        return _purekernel
    if name == "cython":
        return importlib.import_module("warnsdorff._speedups")
    raise ValueError(f"unknown kernel backend {name!r}; choose from {BACKENDS}")


def available():
    out = []
    for name in BACKENDS:
        try:
            load(name)
        except ImportError:
            continue
        out.append(name)
    return out


def _select():
    forced = os.environ.get("WARNSDORFF_KERNEL")
    if forced:
        return load(forced)
    try:
        return load("cython")
    except ImportError:
        return _purekernel


_backend = _select()
NAME = _backend.NAME
tour_path = _backend.tour_path
failing_starts = _backend.failing_starts
order_failures = _backend.order_failures
failures_many = _backend.failures_many
