"""Distance polynomials built from spectra, plus closed forms for the five
standard families (complete, cycle, star, wheel, path) used as oracles.

Coefficients are exact integers throughout; floats appear only inside the
root solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    KINDS,
    complete_graph,
    cycle_graph,
    path_graph,
    spectrum,
    star_graph,
    wheel_graph,
)


class PolynomialError(ValueError):
    """Coefficients outside the representable domain (negative, or all zero)."""


@dataclass(frozen=True)
class Polynomial:
    """Dense nonnegative integer coefficients ``c_1..c_d`` of ``sum c_k x^k``.

    There is no constant term, and the trailing coefficient is positive
    (normalized degree).  The zero polynomial is unrepresentable.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise PolynomialError("the zero polynomial is not representable")
        for k, c in enumerate(self.coefficients, start=1):
            if not isinstance(c, int) or isinstance(c, bool):
                raise PolynomialError(f"coefficient of x^{k} must be an int, got {c!r}")
            if c < 0:
                raise PolynomialError(f"coefficient of x^{k} is negative: {c}")
        if self.coefficients[-1] == 0:
            raise PolynomialError("trailing coefficient must be positive")

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def coefficient(self, k: int) -> int:
        """Coefficient of ``x^k`` (zero outside ``1..degree``)."""
        if 1 <= k <= self.degree:
            return self.coefficients[k - 1]
        return 0

    def coefficient_sum(self) -> int:
        return sum(self.coefficients)

    def evaluate(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc * x

    def pretty(self) -> str:
        """Human-readable form, highest power first, e.g. ``4x^3 + x``."""
        terms = []
        for k in range(self.degree, 0, -1):
            c = self.coefficient(k)
            if c == 0:
                continue
            coef = "" if c == 1 else str(c)
            power = "x" if k == 1 else f"x^{k}"
            terms.append(coef + power)
        return " + ".join(terms)


def polynomial(coefficients) -> Polynomial:
    """Build a :class:`Polynomial`, trimming trailing zero coefficients."""
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return Polynomial(tuple(int(c) for c in coeffs))


def build(g: Graph, kind: str) -> Polynomial:
    """Polynomial of ``g`` for one of the four kinds in :data:`KINDS`."""
    spec = spectrum(g, kind)
    if not spec.weights:
        raise GraphError(f"{kind} polynomial of this graph is identically zero")
    d = spec.diameter
    return Polynomial(tuple(spec.weights.get(k, 0) for k in range(1, d + 1)))


def classic_index(p: Polynomial) -> int:
    """First derivative at 1: the Wiener-style index of the polynomial's kind."""
    return sum(k * c for k, c in enumerate(p.coefficients, start=1))


def max_coefficient(p: Polynomial) -> int:
    return max(p.coefficients)


# ---------------------------------------------------------------------------
# closed forms

FAMILY_NAMES = ("complete", "cycle", "star", "wheel", "path")


@dataclass(frozen=True)
class GraphFamily:
    """One member of a parametric family.

    ``n`` follows the usual conventions: vertex count for complete/cycle/path,
    leaf count for the star (n+1 vertices), rim size for the wheel (n+1
    vertices).
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise GraphError(f"unknown family {self.family!r}; choose from {FAMILY_NAMES}")
        if self.n < 1:
            raise GraphError(f"family parameter must be at least 1, got {self.n}")


def family_graph(fam: GraphFamily) -> Graph:
    builders = {
        "complete": complete_graph,
        "cycle": cycle_graph,
        "star": star_graph,
        "wheel": wheel_graph,
        "path": path_graph,
    }
    return builders[fam.family](fam.n)


def _require(cond: bool, fam: GraphFamily, kind: str, floor: int) -> None:
    if not cond:
        raise GraphError(
            f"no validated {kind} closed form for {fam.family} with n={fam.n}"
            f" (needs n >= {floor})"
        )


def closed_form(fam: GraphFamily, kind: str) -> Polynomial:
    """Literal closed-form polynomial for a family member.

    Domains are the ranges where the formulas are proven or verified; in
    particular the wheel edge-hosoya form is only valid for rim size >= 5
    (direct computation contradicts it at 3 and 4), so smaller wheels are
    rejected and must go through :func:`build`.
    """
    if kind not in KINDS:
        raise GraphError(f"unknown polynomial kind {kind!r}; choose from {KINDS}")
    n = fam.n
    if fam.family == "complete":
        if kind == "hosoya":
            _require(n >= 2, fam, kind, 2)
            return polynomial([n * (n - 1) // 2])
        if kind == "schultz":
            _require(n >= 2, fam, kind, 2)
            return polynomial([n * (n - 1) ** 2])
        if kind == "gutman":
            _require(n >= 2, fam, kind, 2)
            return polynomial([n * (n - 1) ** 3 // 2])
        _require(n >= 3, fam, kind, 3)
        return polynomial(
            [(n**3 - 3 * n**2 + 2 * n) // 2, (n**4 - 6 * n**3 + 11 * n**2 - 6 * n) // 8]
        )
    if fam.family == "cycle":
        _require(n >= 3, fam, kind, 3)
        unit = 4 if kind in ("schultz", "gutman") else 1
        if n % 2 == 0:
            coeffs = [unit * n] * (n // 2 - 1) + [unit * n // 2]
        else:
            coeffs = [unit * n] * ((n - 1) // 2)
        return polynomial(coeffs)
    if fam.family == "star":
        if kind == "hosoya":
            _require(n >= 1, fam, kind, 1)
            return polynomial([n, n * (n - 1) // 2])
        if kind == "schultz":
            _require(n >= 1, fam, kind, 1)
            return polynomial([n * (n + 1), n * (n - 1)])
        if kind == "gutman":
            _require(n >= 1, fam, kind, 1)
            return polynomial([n**2, n * (n - 1) // 2])
        _require(n >= 2, fam, kind, 2)
        return polynomial([n * (n - 1) // 2])
    if fam.family == "wheel":
        if kind == "hosoya":
            _require(n >= 3, fam, kind, 3)
            return polynomial([2 * n, n * (n - 3) // 2])
        if kind == "schultz":
            _require(n >= 3, fam, kind, 3)
            return polynomial([n * (n + 9), 3 * n * (n - 3)])
        if kind == "gutman":
            _require(n >= 3, fam, kind, 3)
            return polynomial([3 * n * (n + 3), 9 * n * (n - 3) // 2])
        _require(n >= 5, fam, kind, 5)
        return polynomial([n * (n + 5) // 2, n * (n - 1), n * (n - 5) // 2])
    # path
    _require(n >= 3, fam, kind, 3)
    if kind == "hosoya":
        return polynomial([n - i for i in range(1, n)])
    if kind == "schultz":
        return polynomial([4 * n - 2 - 4 * i for i in range(1, n - 1)] + [2])
    if kind == "gutman":
        return polynomial([4 * (n - 1 - i) for i in range(1, n - 1)] + [1])
    return polynomial([n - 1 - i for i in range(1, n - 1)])
