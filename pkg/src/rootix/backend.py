"""Kernel backend selection: numba-jitted loops or a pure-numpy fallback.

The three hot kernels (all-pairs BFS distances, distance-weight counting,
batched bisection root solving) exist in two interchangeable flavours:

* ``numba`` -- ``@njit``-compiled scalar loops (default when numba imports);
* ``numpy`` -- vectorised numpy, no compilation step.

The active flavour is picked once at import time from the ``ROOTIX_BACKEND``
environment variable (``numba`` or ``numpy``) and can be switched at runtime
with :func:`set_backend`, which tests and the benchmark use to compare both.
Both flavours perform the same floating-point operations in the same order,
so results are bit-identical; ``benchmarks/bench_backends.py`` checks that
while timing them against each other.
"""

from __future__ import annotations

import os
import warnings

from . import _kernels_numpy

_BACKENDS = {"numpy": _kernels_numpy}
_active_name = "numpy"


def _try_load_numba() -> bool:
    if "numba" in _BACKENDS:
        return True
    try:
        from . import _kernels_numba
    except ImportError:
        return False
    _BACKENDS["numba"] = _kernels_numba
    return True


def available_backends() -> tuple[str, ...]:
    """Names that :func:`set_backend` currently accepts."""
    _try_load_numba()
    return tuple(sorted(_BACKENDS))


def set_backend(name: str) -> None:
    global _active_name
    if name == "numba" and not _try_load_numba():
        raise ValueError("numba backend requested but numba is not importable")
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choose from {available_backends()}")
    _active_name = name


def active_backend() -> str:
    return _active_name


def kernels():
    """Module implementing the kernel API for the active backend."""
    return _BACKENDS[_active_name]


def _init_from_env() -> None:
    requested = os.environ.get("ROOTIX_BACKEND", "").strip().lower()
    if requested == "numpy":
        set_backend("numpy")
        return
    if requested and requested != "numba":
        raise ValueError(f"ROOTIX_BACKEND={requested!r} not understood (use 'numba' or 'numpy')")
    if _try_load_numba():
        set_backend("numba")
    else:
        if requested == "numba":
            raise ValueError("ROOTIX_BACKEND=numba but numba is not importable")
        warnings.warn("numba unavailable; falling back to the pure-numpy kernels", RuntimeWarning)
        set_backend("numpy")


_init_from_env()
