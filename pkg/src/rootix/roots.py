"""Root-indices: the unique root in (0, 1] of 1 - Q(x) for a nonnegative
polynomial Q with coefficient sum >= 1.

Q is strictly increasing on [0, 1] with Q(0) = 0, so 1 - Q has exactly one
sign change there; bisection certifies a bracket and a few Newton steps
polish the final digits.  The root equals 1 exactly iff the coefficient sum
is exactly 1, which is decided in integer arithmetic, never by floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import backend
from .polynomials import Polynomial, max_coefficient


class RootDomainError(ValueError):
    """Polynomial outside the solvable domain (coefficient sum < 1)."""


@dataclass(frozen=True)
class RootResult:
    """A solved root with its certificate.

    ``delta`` lies in ``[bracket lo, bracket hi]`` where the polynomial is
    below 1 at the low end and at or above 1 at the high end;
    ``bracket_width`` is that interval's width (0.0 for the exact
    coefficient-sum-one case).  ``lower_bound`` is ``1/(M+1)`` for M the
    largest coefficient; the root of any connected graph's polynomial on at
    least three vertices strictly exceeds it.
    """

    delta: float
    bracket_width: float
    lower_bound: float
    is_exactly_one: bool


def lower_bound(p: Polynomial) -> float:
    """``1/(M+1)`` for M the largest coefficient."""
    return 1.0 / (max_coefficient(p) + 1)


def _coefficient_matrix(polys: Sequence[Polynomial]) -> np.ndarray:
    width = max(p.degree for p in polys)
    mat = np.zeros((len(polys), width), np.float64)
    for i, p in enumerate(polys):
        mat[i, : p.degree] = p.coefficients
    return mat


def root_index(p: Polynomial) -> RootResult:
    return root_indices([p])[0]


def root_indices(polys: Sequence[Polynomial]) -> list[RootResult]:
    """Solve many polynomials in one batched kernel call.

    Packing the coefficients into one zero-padded matrix does not change any
    result: leading zeros are inert in Horner evaluation, so each root comes
    out bit-identical to a one-polynomial call.
    """
    if not polys:
        return []
    for p in polys:
        if p.coefficient_sum() < 1:
            raise RootDomainError(
                f"coefficient sum {p.coefficient_sum()} < 1; no root in (0, 1]"
            )
    solved = backend.kernels().bisect_root_batch(_coefficient_matrix(polys))
    out = []
    for p, (delta, lo, hi) in zip(polys, solved):
        if p.coefficient_sum() == 1:
            out.append(RootResult(1.0, 0.0, lower_bound(p), True))
        else:
            out.append(RootResult(float(delta), float(hi - lo), lower_bound(p), False))
    return out


_COMPLETE_ROOT_FORMS = {
    "hosoya": lambda n: 2.0 / (n * (n - 1)),
    "schultz": lambda n: 1.0 / (n * (n - 1) ** 2),
    "gutman": lambda n: 2.0 / (n * (n - 1) ** 3),
}


def complete_graph_root(kind: str, n: int) -> float:
    """Exact closed-form root-index of the complete graph on ``n`` vertices.

    Only the three vertex-pair kinds have closed forms; edge-hosoya is
    rejected.
    """
    if kind not in _COMPLETE_ROOT_FORMS:
        raise RootDomainError(f"no closed-form complete-graph root for kind {kind!r}")
    if n < 2:
        raise RootDomainError(f"complete-graph root needs n >= 2, got {n}")
    return _COMPLETE_ROOT_FORMS[kind](n)
