"""Centered Taylor coefficient matrices and midpoint derivative estimates.

For ``N`` odd, equidistant nodes ``x_k = x0 + k*dx`` with
``k = -alpha .. alpha`` and ``alpha = (N - 1) / 2``, truncating the Taylor
expansion of ``f`` about ``x0`` after ``N`` terms gives ``Y = C @ D`` where

    C[k, m] = (k*dx)**m / m!

and ``D[m]`` estimates ``f^(m)(x0)``. Rows of ``C^-1`` are the classical
centered finite-difference weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import InvalidOrder, InvalidPointCount, InvalidSampleSet, InvalidStep
from .linalg import solve_dense

__all__ = [
    "MAX_POINTS",
    "EQUIDISTANCE_RTOL",
    "SampleSet",
    "DerivativeEstimates",
    "build_taylor_matrix",
    "estimate_derivatives",
    "stencil_weights",
]

#: 21! is the first factorial past exact double-precision integers.
MAX_POINTS = 21
EQUIDISTANCE_RTOL = 1e-9


def _readonly(values: ArrayLike) -> NDArray[np.float64]:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SampleSet:
    """Odd-length, strictly increasing, equidistant samples ``y_k = f(x_k)``.

    Construction validates every invariant and raises ``InvalidSampleSet``
    with a human-readable reason on failure.
    """

    xs: NDArray[np.float64]
    ys: NDArray[np.float64]
    dx: float = field(init=False)

    def __post_init__(self) -> None:
        xs = _readonly(self.xs)
        ys = _readonly(self.ys)
        if xs.ndim != 1 or ys.ndim != 1:
            raise InvalidSampleSet("xs and ys must be one-dimensional")
        if xs.shape != ys.shape:
            raise InvalidSampleSet(
                f"xs has {xs.size} values but ys has {ys.size}"
            )
        n = xs.size
        if n < 3:
            raise InvalidSampleSet(f"need at least 3 points, got {n}")
        if n % 2 == 0:
            raise InvalidSampleSet(f"point count must be odd, got {n}")
        if n > MAX_POINTS:
            raise InvalidSampleSet(f"at most {MAX_POINTS} points supported, got {n}")
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise InvalidSampleSet("samples must be finite")
        gaps = np.diff(xs)
        if np.any(gaps <= 0):
            raise InvalidSampleSet("x values must be strictly increasing")
        dx = float((xs[-1] - xs[0]) / (n - 1))
        worst = float(np.max(np.abs(gaps - dx)))
        if worst > EQUIDISTANCE_RTOL * max(1.0, abs(dx)):
            raise InvalidSampleSet(
                f"non-equidistant x values (gap deviates from step {dx!r} by {worst:.3g})"
            )
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "dx", dx)

    @property
    def n(self) -> int:
        return int(self.xs.size)

    @property
    def alpha(self) -> int:
        return (self.n - 1) // 2

    @property
    def x0(self) -> float:
        return float(self.xs[self.alpha])

    @property
    def y0(self) -> float:
        return float(self.ys[self.alpha])


@dataclass(frozen=True, eq=False)
class DerivativeEstimates:
    """Estimated derivatives ``d[m] ~ f^(m)(x0)``, ``m = 0 .. N-1``."""

    d: NDArray[np.float64]
    x0: float
    dx: float

    def __len__(self) -> int:
        return int(self.d.size)


def _check_count(n: int) -> None:
    if isinstance(n, bool) or int(n) != n:
        raise InvalidPointCount(f"point count must be an integer, got {n!r}")
    if n < 3 or n % 2 == 0 or n > MAX_POINTS:
        raise InvalidPointCount(
            f"point count must be odd and in [3, {MAX_POINTS}], got {n}"
        )


def _check_step(dx: float) -> None:
    if not np.isfinite(dx) or dx <= 0:
        raise InvalidStep(f"step must be finite and positive, got {dx!r}")


def build_taylor_matrix(n: int, dx: float) -> NDArray[np.float64]:
    """Return the ``n x n`` centered Taylor matrix for step ``dx``.

    Row ``i`` corresponds to node offset ``k = i - (n - 1) // 2``; column
    ``m`` holds ``(k*dx)**m / m!``, accumulated as a running product
    ``t_m = t_{m-1} * (k*dx) / m`` so no large factorial is ever formed.
    """
    _check_count(n)
    _check_step(dx)
    alpha = (n - 1) // 2
    c = np.empty((n, n))
    for i in range(n):
        h = (i - alpha) * dx
        term = 1.0
        c[i, 0] = term
        for m in range(1, n):
            term = term * h / m
            c[i, m] = term
    return c


def _step_powers(n: int, dx: float) -> NDArray[np.float64]:
    powers = np.empty(n)
    acc = 1.0
    for m in range(n):
        powers[m] = acc
        acc *= dx
    return powers


def estimate_derivatives(samples: SampleSet) -> DerivativeEstimates:
    """Solve ``C @ D = Y`` for the midpoint derivative estimates.

    ``C`` factors as ``K @ diag(dx**m)`` with ``K`` the unit-step matrix, so
    the solve runs on ``K`` and the step powers are divided out afterwards;
    column ``m`` of ``C`` would otherwise shrink like ``dx**m`` and trip the
    singularity threshold on fine grids. The middle row of ``K`` is ``e_0``,
    which pins ``D[0] = y0`` exactly; the rest comes from the reduced system
    over the off-centre rows, with ``y0`` subtracted from the data.
    """
    if not isinstance(samples, SampleSet):
        raise InvalidSampleSet(f"expected a SampleSet, got {type(samples).__name__}")
    n = samples.n
    k = build_taylor_matrix(n, 1.0)
    alpha = samples.alpha
    y0 = samples.y0
    rows = np.r_[0:alpha, alpha + 1:n]
    u = np.empty(n)
    u[0] = y0
    u[1:] = solve_dense(k[np.ix_(rows, np.arange(1, n))], samples.ys[rows] - y0)
    d = u / _step_powers(n, samples.dx)
    d.setflags(write=False)
    return DerivativeEstimates(d=d, x0=samples.x0, dx=samples.dx)


def stencil_weights(n: int, dx: float, order: int) -> NDArray[np.float64]:
    """Centered finite-difference weights for the ``order``-th derivative.

    Row ``order`` of ``C^-1``: the unit-step weights from ``K.T @ w = e_order``
    divided by ``dx**order``.
    Applied to samples ordered by increasing ``x``, ``w @ y`` equals
    ``estimate_derivatives(...).d[order]``.

    Examples
    --------
    >>> stencil_weights(3, 1.0, 2)
    array([ 1., -2.,  1.])
    """
    _check_count(n)
    _check_step(dx)
    if isinstance(order, bool) or int(order) != order or not 0 <= order < n:
        raise InvalidOrder(f"order must be an integer in [0, {n - 1}], got {order!r}")
    k = build_taylor_matrix(n, 1.0)
    rhs = np.zeros(n)
    rhs[int(order)] = 1.0
    return solve_dense(k.T, rhs) / _step_powers(n, dx)[int(order)]
