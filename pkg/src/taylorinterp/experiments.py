"""Scripted reproductions of the three reference experiments.

Each run regenerates full-precision feed data from the analytic function,
fits the model, tabulates probe-point errors and evaluates a dense series
for plotting. Nothing here is random, so repeated runs are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidPointCount, UnknownExperiment
from .model import TaylorModel, evaluate_many, fit
from .stencil import DerivativeEstimates, SampleSet, estimate_derivatives
from .verification import ErrorRow, TestFunction, build_error_table, eval_test_function, generate_samples

__all__ = [
    "DENSE_COUNT",
    "EXPERIMENTS",
    "ExperimentSpec",
    "ExperimentReport",
    "FigureSeries",
    "run_cubic_experiment",
    "run_quartic_experiment",
    "run_sine_experiment",
    "run_experiment",
    "emit_figure_data",
]

DENSE_COUNT = 201


@dataclass(frozen=True)
class ExperimentSpec:
    name: str
    test_function: TestFunction
    feed_lo: float
    feed_hi: float
    n_points: int
    eval_range: tuple[float, float]
    probe_points: tuple[float, ...]
    dense_count: int = DENSE_COUNT
    # optional second window, used by the sine runs to show interpolation close up
    interp_range: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise InvalidPointCount(f"n_points must be odd and >= 3, got {self.n_points}")
        lo, hi = self.eval_range
        inside = lo <= self.feed_lo and self.feed_hi <= hi
        disjoint = self.feed_hi < lo or hi < self.feed_lo
        if not (inside or disjoint):
            raise ValueError("feed range must lie inside eval_range or be disjoint from it")


@dataclass(frozen=True, eq=False)
class ExperimentReport:
    spec: ExperimentSpec
    feed_table: SampleSet
    d_vector: DerivativeEstimates
    model: TaylorModel
    error_table: list[ErrorRow]
    dense_series: np.ndarray  # (dense_count, 3): x, analytic, model
    interp_series: np.ndarray = field(default_factory=lambda: np.empty((0, 3)))

    @property
    def coeffs(self) -> tuple[float, ...]:
        return self.model.coeffs


@dataclass(frozen=True, eq=False)
class FigureSeries:
    """One plottable series; columns a series does not carry are ``None``."""

    name: str
    x: np.ndarray
    analytic: np.ndarray | None
    model: np.ndarray | None


def _dense(f: TestFunction, model: TaylorModel, lo: float, hi: float, count: int) -> np.ndarray:
    xs = np.linspace(lo, hi, count)
    analytic = np.array([eval_test_function(f, x) for x in xs])
    return np.column_stack([xs, analytic, evaluate_many(model, xs)])


def run(spec: ExperimentSpec) -> ExperimentReport:
    samples = generate_samples(spec.test_function, spec.feed_lo, spec.feed_hi, spec.n_points)
    model = fit(samples)
    interp = np.empty((0, 3))
    if spec.interp_range is not None:
        interp = _dense(spec.test_function, model, *spec.interp_range, spec.dense_count)
    return ExperimentReport(
        spec=spec,
        feed_table=samples,
        d_vector=estimate_derivatives(samples),
        model=model,
        error_table=build_error_table(spec.test_function, model, spec.probe_points),
        dense_series=_dense(spec.test_function, model, *spec.eval_range, spec.dense_count),
        interp_series=interp,
    )


def run_cubic_experiment() -> ExperimentReport:
    """``3x^3 + 2x^2 + x + 4`` fed on [-3, -2], probed at 999 and 9999."""
    return run(ExperimentSpec(
        name="cubic",
        test_function=TestFunction.cubic(3, 2, 1, 4),
        feed_lo=-3.0,
        feed_hi=-2.0,
        n_points=5,
        eval_range=(-5.0, 5.0),
        probe_points=(999.0, 9999.0),
    ))


def run_quartic_experiment() -> ExperimentReport:
    """``5x^4 + 3x^3 + x^2 + 4x + 2`` fed on [3, 4], probed at 999 and 9999."""
    return run(ExperimentSpec(
        name="quartic",
        test_function=TestFunction.quartic(5, 3, 1, 4, 2),
        feed_lo=3.0,
        feed_hi=4.0,
        n_points=5,
        eval_range=(-5.0, 5.0),
        probe_points=(999.0, 9999.0),
    ))


def run_sine_experiment(n_points: int) -> ExperimentReport:
    """``sin(x)`` fed with 5 or 9 points on [-pi, pi].

    The dense series covers the extrapolation window [-2pi, 2pi]; the
    interpolation window [-pi, pi] goes into ``interp_series``.
    """
    if n_points not in (5, 9):
        raise InvalidPointCount(f"sine experiment runs with 5 or 9 points, got {n_points}")
    return run(ExperimentSpec(
        name=f"sine{n_points}",
        test_function=TestFunction.sine(),
        feed_lo=-math.pi,
        feed_hi=math.pi,
        n_points=n_points,
        eval_range=(-2 * math.pi, 2 * math.pi),
        probe_points=(2 * math.pi / 3, 5 * math.pi / 6),
        interp_range=(-math.pi, math.pi),
    ))


EXPERIMENTS: dict[str, Callable[[], ExperimentReport]] = {
    "cubic": run_cubic_experiment,
    "quartic": run_quartic_experiment,
    "sine5": lambda: run_sine_experiment(5),
    "sine9": lambda: run_sine_experiment(9),
}


def run_experiment(name: str) -> ExperimentReport:
    try:
        runner = EXPERIMENTS[name]
    except KeyError:
        raise UnknownExperiment(
            f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}"
        ) from None
    return runner()


def emit_figure_data(report: ExperimentReport, window: str = "eval") -> list[FigureSeries]:
    """Feed points, analytic curve and model curve for one plot window.

    ``window`` is ``"eval"`` for the main range or ``"interp"`` for the
    close-up interpolation window (sine runs only).
    """
    if window == "eval":
        dense = report.dense_series
    elif window == "interp":
        dense = report.interp_series
    else:
        raise ValueError(f"window must be 'eval' or 'interp', got {window!r}")
    feed = report.feed_table
    return [
        FigureSeries("feed", feed.xs.copy(), feed.ys.copy(), None),
        FigureSeries("analytic", dense[:, 0].copy(), dense[:, 1].copy(), None),
        FigureSeries("model", dense[:, 0].copy(), None, dense[:, 2].copy()),
    ]
