"""Command-line front end.

    taylorinterp sample --function cubic:3,2,1,4 --range=-3:-2 --n 5 --output feed.csv
    taylorinterp fit --input feed.csv --output model.json
    taylorinterp eval --model model.json --points=-2.4,999
    taylorinterp experiment --name sine9 --outdir out/

Exit status: 0 success, 2 parse/IO error, 3 invalid sample set,
4 singular system, 5 bad arguments.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import io as tio
from .errors import BadArgument, InvalidRange, ParseError, TaylorInterpError
from .experiments import EXPERIMENTS, emit_figure_data, run_experiment
from .model import classify, evaluate_many, fit
from .stencil import estimate_derivatives
from .verification import FunctionKind, TestFunction, generate_samples

log = logging.getLogger("taylorinterp")

EXIT_OK = 0
EXIT_IO = 2
EXIT_BAD_ARGS = 5
#: Above this many points the Taylor matrix is ill-conditioned enough to warn.
CONDITION_WARN_POINTS = 11


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD_ARGS, f"{self.prog}: error: {message}\n")


@contextlib.contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def parse_function(text: str) -> TestFunction:
    """``cubic:a,b,c,d``, ``quartic:a,b,c,d,f`` or ``sine``."""
    kind, _, rest = text.partition(":")
    try:
        kind = FunctionKind(kind.strip().lower())
    except ValueError:
        raise BadArgument(f"unknown function {kind!r}") from None
    coeffs = [tio.parse_number(c) for c in rest.split(",")] if rest.strip() else []
    try:
        return TestFunction(kind, tuple(coeffs))
    except ValueError as exc:
        raise BadArgument(str(exc)) from None


def parse_range(text: str) -> tuple[float, float]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise InvalidRange(f"range must look like lo:hi, got {text!r}")
    return tio.parse_number(lo), tio.parse_number(hi)


def parse_points(text: str) -> list[float]:
    return [tio.parse_number(p) for p in text.split(",") if p.strip()]


def cmd_sample(args: argparse.Namespace) -> int:
    f = parse_function(args.function)
    lo, hi = parse_range(args.range)
    samples = generate_samples(f, lo, hi, args.n)
    with _open_out(args.output) as fh:
        tio.write_samples_csv(samples, fh)
    return EXIT_OK


def cmd_fit(args: argparse.Namespace) -> int:
    samples = tio.read_samples_csv(args.input)
    if samples.n > CONDITION_WARN_POINTS:
        log.warning(
            "%d points: the Taylor matrix is badly conditioned above %d points; "
            "high-order derivative estimates may be inaccurate",
            samples.n, CONDITION_WARN_POINTS,
        )
    model = fit(samples)
    d = estimate_derivatives(samples).d
    print(f"x0 = {model.x0:g}, dx = {model.dx:g}, N = {model.n_points}", file=sys.stderr)
    print("D = [" + " ".join(f"{v:.4f}" for v in d) + "]", file=sys.stderr)
    tio.dump_model(model, args.output)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    model = tio.load_model(args.model)
    xs = parse_points(args.points)
    values = evaluate_many(model, np.array(xs))
    kinds = [classify(model, x).value for x in xs]
    with _open_out(args.output) as fh:
        if args.format == "json":
            rows = [{"x": x, "value": float(v), "kind": k} for x, v, k in zip(xs, values, kinds)]
            json.dump(rows, fh, indent=2)
            fh.write("\n")
        else:
            fh.write("x,value,kind\n")
            for x, v, k in zip(xs, values, kinds):
                fh.write(f"{x!r},{float(v)!r},{k}\n")
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    report = run_experiment(args.name)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / f"{args.name}_report.json").write_text(
        json.dumps(tio.report_to_dict(report), indent=2) + "\n", encoding="utf-8"
    )
    with open(outdir / f"{args.name}_figure.csv", "w", newline="", encoding="utf-8") as fh:
        tio.write_figure_csv(emit_figure_data(report), fh)
    if report.interp_series.size:
        with open(outdir / f"{args.name}_figure_interp.csv", "w", newline="", encoding="utf-8") as fh:
            tio.write_figure_csv(emit_figure_data(report, "interp"), fh)

    print(f"{args.name}: f(x) = {report.spec.test_function.describe()}")
    print("D^T = [" + " ".join(f"{v:.2f}" for v in report.d_vector.d) + "]")
    print(f"{'x':>10} {'f(x)':>22} {'model(x)':>22} {'err':>12}")
    for r in report.error_table:
        print(f"{r.x:>10.4f} {r.analytic:>22.12g} {r.model_value:>22.12g} {r.err:>12.4f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="taylorinterp", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fit", help="fit a model to an x,y CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("eval", help="evaluate a fitted model")
    p.add_argument("--model", required=True)
    p.add_argument("--points", required=True, help="comma-separated; use --points=-1,2 for negatives")
    p.add_argument("--output")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("experiment", help="reproduce a reference experiment")
    p.add_argument("--name", required=True, help=" | ".join(EXPERIMENTS))
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("sample", help="write feed data sampled from a test function")
    p.add_argument("--function", required=True, help="cubic:a,b,c,d | quartic:a,b,c,d,f | sine")
    p.add_argument("--range", required=True, help="lo:hi, e.g. --range=-pi:pi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except TaylorInterpError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
