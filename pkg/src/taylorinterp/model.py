"""The Taylor interpolation/extrapolation model.

A single polynomial ``sum_n a_n (x - x0)**n`` with ``a_n = D[n] / n!`` is
fitted once at the middle sample and used everywhere, inside the sampled
range and arbitrarily far outside it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import InvalidOrder, NonFiniteInput
from .stencil import SampleSet, estimate_derivatives

__all__ = [
    "EvaluationKind",
    "TaylorModel",
    "fit",
    "evaluate",
    "evaluate_many",
    "classify",
    "derivative_at",
]


class EvaluationKind(str, enum.Enum):
    INTERPOLATION = "interpolation"
    EXTRAPOLATION = "extrapolation"


@dataclass(frozen=True)
class TaylorModel:
    """Fitted model: expansion point, Taylor coefficients and fit range."""

    x0: float
    coeffs: tuple[float, ...]
    n_points: int
    dx: float
    range_lo: float
    range_hi: float

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != self.n_points:
            raise ValueError(
                f"expected {self.n_points} coefficients, got {len(coeffs)}"
            )
        if not all(math.isfinite(c) for c in coeffs):
            raise NonFiniteInput("model coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    def __call__(self, x):
        if np.ndim(x) == 0:
            return evaluate(self, x)
        return evaluate_many(self, x)


def fit(samples: SampleSet) -> TaylorModel:
    """Fit the Taylor model to ``samples``, expanding about the middle node."""
    est = estimate_derivatives(samples)
    coeffs = []
    fact = 1.0
    for n, d in enumerate(est.d):
        if n:
            fact *= n
        coeffs.append(float(d) / fact)
    return TaylorModel(
        x0=est.x0,
        coeffs=tuple(coeffs),
        n_points=samples.n,
        dx=samples.dx,
        range_lo=float(samples.xs[0]),
        range_hi=float(samples.xs[-1]),
    )


def _finite_scalar(x) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteInput(f"x must be finite, got {x!r}")
    return x


def evaluate(model: TaylorModel, x: float) -> float:
    """Evaluate the model at ``x`` by Horner's scheme in ``x - x0``."""
    t = _finite_scalar(x) - model.x0
    acc = 0.0
    for c in reversed(model.coeffs):
        acc = acc * t + c
    return acc


def evaluate_many(model: TaylorModel, xs: ArrayLike) -> NDArray[np.float64]:
    """Vectorised :func:`evaluate`; results match it bit for bit."""
    xs = np.asarray(xs, dtype=np.float64)
    if not np.all(np.isfinite(xs)):
        raise NonFiniteInput("all x values must be finite")
    t = xs - model.x0
    acc = np.zeros_like(t)
    for c in reversed(model.coeffs):
        acc = acc * t + c
    return acc


def classify(model: TaylorModel, x: float) -> EvaluationKind:
    """Interpolation inside the closed fit range, extrapolation outside."""
    x = _finite_scalar(x)
    if model.range_lo <= x <= model.range_hi:
        return EvaluationKind.INTERPOLATION
    return EvaluationKind.EXTRAPOLATION


def derivative_at(model: TaylorModel, x: float, order: int) -> float:
    """The ``order``-th derivative of the model polynomial at ``x``.

    At ``x == model.x0`` this is ``order! * coeffs[order]``, i.e. the
    derivative estimate the model was built from.
    """
    if isinstance(order, bool) or int(order) != order or not 0 <= order < model.n_points:
        raise InvalidOrder(
            f"order must be an integer in [0, {model.n_points - 1}], got {order!r}"
        )
    order = int(order)
    t = _finite_scalar(x) - model.x0
    # coefficient of t**j in the differentiated series: a_{j+order} * (j+order)! / j!
    scaled: list[float] = []
    for n in range(order, model.n_points):
        falling = 1.0
        for j in range(n - order + 1, n + 1):
            falling *= j
        scaled.append(model.coeffs[n] * falling)
    acc = 0.0
    for c in reversed(scaled):
        acc = acc * t + c
    return acc

