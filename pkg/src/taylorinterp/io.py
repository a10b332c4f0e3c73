"""Flat-file formats: feed CSV, model documents, reports and figure data.

Floats are written with ``repr`` (shortest round-trip form), so every file
reloads to the exact same doubles.
"""

from __future__ import annotations

import csv
import json
import math
import re
from pathlib import Path
from typing import Any, TextIO

import numpy as np

from .errors import NonFiniteInput, ParseError
from .experiments import ExperimentReport, FigureSeries
from .model import TaylorModel
from .stencil import SampleSet

MODEL_FORMAT_VERSION = 1
MODEL_FIELDS = ("version", "x0", "dx", "n_points", "coeffs", "range_lo", "range_hi")

_PI_RE = re.compile(
    r"^(?P<sign>[+-]?)(?P<mult>\d+(?:\.\d*)?|\.\d+)?\*?pi(?:/(?P<div>\d+(?:\.\d*)?))?$",
    re.IGNORECASE,
)


def parse_number(text: str) -> float:
    """Parse a float literal or a multiple of pi such as ``-pi``, ``2pi/3``."""
    s = text.strip()
    try:
        value = float(s)
    except ValueError:
        m = _PI_RE.match(s.replace(" ", ""))
        if not m:
            raise ParseError(f"not a number: {text!r}") from None
        value = float(m["mult"] or 1) * math.pi / float(m["div"] or 1)
        if m["sign"] == "-":
            value = -value
    if not math.isfinite(value):
        raise NonFiniteInput(f"value must be finite: {text!r}")
    return value


def _fmt(v: float | None) -> str:
    return "" if v is None else repr(float(v))


# feed CSV -----------------------------------------------------------------

def read_samples_csv(path: str | Path) -> SampleSet:
    """Read an ``x,y`` CSV. Raises ``ParseError`` naming the offending line."""
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_samples_csv(fh, source=str(path))


def parse_samples_csv(fh: TextIO, source: str = "<input>") -> SampleSet:
    reader = csv.reader(fh)
    xs: list[float] = []
    ys: list[float] = []
    header_seen = False
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        cells = [cell.strip() for cell in row]
        if not header_seen:
            if [c.lower() for c in cells] != ["x", "y"]:
                raise ParseError(f"{source}:{line}: expected header 'x,y', got {','.join(row)!r}")
            header_seen = True
            continue
        if len(cells) != 2:
            raise ParseError(f"{source}:{line}: expected 2 columns, got {len(cells)}")
        try:
            x, y = float(cells[0]), float(cells[1])
        except ValueError:
            raise ParseError(f"{source}:{line}: non-numeric value in {','.join(row)!r}") from None
        xs.append(x)
        ys.append(y)
    if not header_seen:
        raise ParseError(f"{source}: empty file")
    return SampleSet(xs, ys)


def write_samples_csv(samples: SampleSet, fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["x", "y"])
    for x, y in zip(samples.xs, samples.ys):
        writer.writerow([_fmt(x), _fmt(y)])


# model documents ----------------------------------------------------------

def model_to_document(model: TaylorModel) -> dict[str, Any]:
    return {
        "version": MODEL_FORMAT_VERSION,
        "x0": model.x0,
        "dx": model.dx,
        "n_points": model.n_points,
        "coeffs": list(model.coeffs),
        "range_lo": model.range_lo,
        "range_hi": model.range_hi,
    }


def model_from_document(doc: Any) -> TaylorModel:
    if not isinstance(doc, dict):
        raise ParseError("model document must be a JSON object")
    missing = [k for k in MODEL_FIELDS if k not in doc]
    if missing:
        raise ParseError(f"model document missing fields: {', '.join(missing)}")
    if doc["version"] != MODEL_FORMAT_VERSION:
        raise ParseError(f"unsupported model document version {doc['version']!r}")
    try:
        return TaylorModel(
            x0=float(doc["x0"]),
            coeffs=tuple(float(c) for c in doc["coeffs"]),
            n_points=int(doc["n_points"]),
            dx=float(doc["dx"]),
            range_lo=float(doc["range_lo"]),
            range_hi=float(doc["range_hi"]),
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed model document: {exc}") from None


def dump_model(model: TaylorModel, path: str | Path) -> None:
    Path(path).write_text(json.dumps(model_to_document(model), indent=2) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> TaylorModel:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from None
    return model_from_document(doc)


# reports ------------------------------------------------------------------

def report_to_dict(report: ExperimentReport) -> dict[str, Any]:
    spec = report.spec
    tf = spec.test_function
    return {
        "name": spec.name,
        "function": {"kind": tf.kind.value, "coefficients": list(tf.coefficients)},
        "feed_range": [spec.feed_lo, spec.feed_hi],
        "n_points": spec.n_points,
        "eval_range": list(spec.eval_range),
        "interp_range": None if spec.interp_range is None else list(spec.interp_range),
        "dense_count": spec.dense_count,
        "feed": {"x": report.feed_table.xs.tolist(), "y": report.feed_table.ys.tolist()},
        "d_vector": report.d_vector.d.tolist(),
        "model": model_to_document(report.model),
        "error_table": [
            {"x": r.x, "analytic": r.analytic, "model": r.model_value, "err": r.err}
            for r in report.error_table
        ],
        "dense_series": report.dense_series.tolist(),
        "interp_series": report.interp_series.tolist(),
    }


FIGURE_COLUMNS = ("series", "x", "analytic", "model")


def write_figure_csv(series: list[FigureSeries], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(FIGURE_COLUMNS)
    for s in series:
        for i, x in enumerate(s.x):
            a = None if s.analytic is None else s.analytic[i]
            m = None if s.model is None else s.model[i]
            writer.writerow([s.name, _fmt(x), _fmt(a), _fmt(m)])


def read_figure_csv(fh: TextIO) -> dict[str, dict[str, np.ndarray]]:
    """Inverse of :func:`write_figure_csv`; empty cells come back as NaN."""
    reader = csv.DictReader(fh)
    if tuple(reader.fieldnames or ()) != FIGURE_COLUMNS:
        raise ParseError(f"figure CSV header must be {','.join(FIGURE_COLUMNS)}")
    cols: dict[str, dict[str, list[float]]] = {}
    for row in reader:
        d = cols.setdefault(row["series"], {"x": [], "analytic": [], "model": []})
        for key in ("x", "analytic", "model"):
            d[key].append(float(row[key]) if row[key] else math.nan)
    return {name: {k: np.array(v) for k, v in d.items()} for name, d in cols.items()}


