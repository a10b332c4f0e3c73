"""Analytic test functions and an independent interpolation oracle.

The barycentric Lagrange evaluator here shares no code with the
linear-solve path in :mod:`taylorinterp.stencil`, so agreement between the
two is meaningful evidence that the fitted model is the unique
degree-``N-1`` interpolant.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InvalidPointCount, InvalidRange, NonFiniteInput
from .model import TaylorModel, evaluate
from .stencil import MAX_POINTS, SampleSet

__all__ = [
    "FunctionKind",
    "TestFunction",
    "ErrorRow",
    "eval_test_function",
    "eval_test_derivative",
    "lagrange_eval",
    "build_error_table",
    "generate_samples",
]


class FunctionKind(str, enum.Enum):
    CUBIC = "cubic"
    QUARTIC = "quartic"
    SINE = "sine"


_ARITY = {FunctionKind.CUBIC: 4, FunctionKind.QUARTIC: 5, FunctionKind.SINE: 0}


@dataclass(frozen=True)
class TestFunction:
    """One of the reference functions, coefficients highest power first.

    ``TestFunction.cubic(3, 2, 1, 4)`` is ``3x^3 + 2x^2 + x + 4``.
    """

    __test__ = False  # not a pytest class

    kind: FunctionKind
    coefficients: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        kind = FunctionKind(self.kind)
        coefficients = tuple(float(c) for c in self.coefficients)
        if len(coefficients) != _ARITY[kind]:
            raise ValueError(
                f"{kind.value} takes {_ARITY[kind]} coefficients, got {len(coefficients)}"
            )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def cubic(cls, a: float, b: float, c: float, d: float) -> TestFunction:
        return cls(FunctionKind.CUBIC, (a, b, c, d))

    @classmethod
    def quartic(cls, a: float, b: float, c: float, d: float, f: float) -> TestFunction:
        return cls(FunctionKind.QUARTIC, (a, b, c, d, f))

    @classmethod
    def sine(cls) -> TestFunction:
        return cls(FunctionKind.SINE)

    def __call__(self, x: float) -> float:
        return eval_test_function(self, x)

    def describe(self) -> str:
        if self.kind is FunctionKind.SINE:
            return "sin(x)"
        deg = len(self.coefficients) - 1
        terms = []
        for i, c in enumerate(self.coefficients):
            p = deg - i
            terms.append(f"{c:g}" + ("" if p == 0 else "x" if p == 1 else f"x^{p}"))
        return " + ".join(terms)


@dataclass(frozen=True)
class ErrorRow:
    x: float
    analytic: float
    model_value: float
    err: float


def _horner(coeffs: Iterable[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _finite(x) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteInput(f"x must be finite, got {x!r}")
    return x


def eval_test_function(f: TestFunction, x: float) -> float:
    x = _finite(x)
    if f.kind is FunctionKind.SINE:
        return math.sin(x)
    return _horner(f.coefficients, x)


def eval_test_derivative(f: TestFunction, x: float, order: int) -> float:
    """Exact ``order``-th derivative of ``f`` at ``x``."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    x = _finite(x)
    if f.kind is FunctionKind.SINE:
        return (math.sin, math.cos, lambda t: -math.sin(t), lambda t: -math.cos(t))[order % 4](x)
    coeffs = list(f.coefficients)
    for _ in range(order):
        deg = len(coeffs) - 1
        if deg <= 0:
            return 0.0
        coeffs = [c * (deg - i) for i, c in enumerate(coeffs[:-1])]
    return _horner(coeffs, x)


def lagrange_eval(samples: SampleSet, x: float) -> float:
    """Barycentric (second form) Lagrange interpolation through ``samples``.

    Weights are ``w_j = 1 / prod_{i != j} (x_j - x_i)``. A query landing
    exactly on a node returns that node's stored value.
    """
    x = _finite(x)
    nodes = samples.xs
    values = samples.ys
    hit = np.nonzero(nodes == x)[0]
    if hit.size:
        return float(values[hit[0]])
    diff = nodes[:, None] - nodes[None, :]
    np.fill_diagonal(diff, 1.0)
    weights = 1.0 / np.prod(diff, axis=1)
    with np.errstate(divide="ignore", over="ignore"):
        terms = weights / (x - nodes)
    if not np.all(np.isfinite(terms)):
        # x within round-off of a node: the interpolant is that node's value
        return float(values[np.argmin(np.abs(x - nodes))])
    return float(np.dot(terms, values) / np.sum(terms))


def build_error_table(f: TestFunction, model: TaylorModel, xs: Iterable[float]) -> list[ErrorRow]:
    rows = []
    for x in xs:
        x = _finite(x)
        analytic = eval_test_function(f, x)
        value = evaluate(model, x)
        rows.append(ErrorRow(x=x, analytic=analytic, model_value=value, err=analytic - value))
    return rows


def generate_samples(f: TestFunction, x_lo: float, x_hi: float, n: int) -> SampleSet:
    """Sample ``f`` on ``n`` equidistant nodes spanning ``[x_lo, x_hi]``."""
    x_lo = _finite(x_lo)
    x_hi = _finite(x_hi)
    if not x_lo < x_hi:
        raise InvalidRange(f"need x_lo < x_hi, got [{x_lo}, {x_hi}]")
    if isinstance(n, bool) or int(n) != n or n < 3 or n % 2 == 0 or n > MAX_POINTS:
        raise InvalidPointCount(f"point count must be odd and in [3, {MAX_POINTS}], got {n}")
    xs = np.linspace(x_lo, x_hi, int(n))
    ys = [eval_test_function(f, x) for x in xs]
    return SampleSet(xs, ys)
