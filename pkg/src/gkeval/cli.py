"""Command-line front end.

Exit status: 0 success, 1 invalid data or options, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import TextIO

from .datasets import TOLERANCE, builtin_paper_datasets
from .errors import GkevalError, ParseError
from .geometry import METRIC_NAMES, ClusterGeometry, DistanceMetric
from .metrics import evaluate
from .model import GsiWeights, MetricReport
from .records import (
    detect_format,
    diagnose_csv,
    diagnose_json,
    parse_shootouts,
    report_to_dict,
    serialize_reports,
)

EXIT_OK = 0
EXIT_DATA = 1
EXIT_IO = 2

# measure -> True when larger is better
COMPARED = (("ri", True), ("ddi", True), ("mrdi", True), ("sv", True), ("gsi", True), ("gaa", False))
_TIE_TOL = 1e-9


class _IOFailure(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    metric: str = "euclidean"
    minkowski_p: float = 2.0
    cols: int = 3
    rows: int = 3
    goal_width: float = 7.32
    goal_height: float = 2.44
    omega_e: float = 0.3
    omega_d: float = 0.2
    output_format: str = "text"
    out: str | None = None
    input_format: str | None = None

    def geometry(self) -> ClusterGeometry:
        return ClusterGeometry(
            self.cols, self.rows, self.goal_width, self.goal_height,
            DistanceMetric(self.metric, self.minkowski_p),
        )

    def weights(self) -> GsiWeights:
        return GsiWeights(self.omega_e, self.omega_d)


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _emit(text: str, config: CliConfig, stdout: TextIO):
    if config.out is None:
        stdout.write(text)
        return
    try:
        with open(config.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {config.out}: {exc.strerror or exc}") from None


def _load(path: str, config: CliConfig):
    fmt = config.input_format or detect_format(path)
    return parse_shootouts(_read(path), fmt, config.geometry())


def _run(body, stderr: TextIO) -> int:
    try:
        return body()
    except _IOFailure as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_IO
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DATA
    except GkevalError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DATA


def _evaluate_all(records, config: CliConfig) -> list[MetricReport]:
    g, w = config.geometry(), config.weights()
    reports = []
    for r in records:
        try:
            reports.append(evaluate(r, g, w))
        except GkevalError as exc:
            raise type(exc)(f"{r.goalkeeper}: {exc}") from None
    return reports


def cmd_evaluate(input_path: str, config: CliConfig, stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    def body():
        reports = _evaluate_all(_load(input_path, config), config)
        _emit(serialize_reports(reports, config.output_format), config, stdout)
        return EXIT_OK

    return _run(body, stderr)


def _winner(name_a, va, name_b, vb, higher_better):
    if va is None or vb is None:
        return "n/a"
    if abs(va - vb) <= _TIE_TOL:
        return "tie"
    a_wins = va > vb if higher_better else va < vb
    return name_a if a_wins else name_b


def render_comparison(ra: MetricReport, rb: MetricReport, fmt: str) -> str:
    rows = []
    for measure, higher in COMPARED:
        va, vb = getattr(ra, measure), getattr(rb, measure)
        if measure == "gaa" and va is None and vb is None:
            continue
        rows.append((measure, va, vb, _winner(ra.goalkeeper, va, rb.goalkeeper, vb, higher)))

    if fmt == "json":
        doc = {
            "a": report_to_dict(ra),
            "b": report_to_dict(rb),
            "winners": {m: w for m, _, _, w in rows},
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["measure", ra.goalkeeper, rb.goalkeeper, "winner"])
        for m, va, vb, w in rows:
            writer.writerow([m, "" if va is None else repr(va), "" if vb is None else repr(vb), w])
        return buf.getvalue()

    def cell(v):
        return "n/a" if v is None else f"{v:.3f}"

    wa = max(len(ra.goalkeeper), 7)
    wb = max(len(rb.goalkeeper), 7)
    lines = [f"{'measure':<8} {ra.goalkeeper:>{wa}} {rb.goalkeeper:>{wb}}  winner"]
    for m, va, vb, w in rows:
        label = m.upper() + ("*" if m == "gaa" else "")
        lines.append(f"{label:<8} {cell(va):>{wa}} {cell(vb):>{wb}}  {w}")
    if any(m == "gaa" for m, *_ in rows):
        lines.append("* lower is better")
    return "\n".join(lines) + "\n"


def cmd_compare(input_path: str, goalkeeper_a: str, goalkeeper_b: str, config: CliConfig,
                stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    def body():
        records = {r.goalkeeper: r for r in _load(input_path, config)}
        missing = [n for n in (goalkeeper_a, goalkeeper_b) if n not in records]
        if missing:
            print(
                f"error: unknown goalkeeper {', '.join(map(repr, missing))}; "
                f"available: {', '.join(records)}",
                file=stderr,
            )
            return EXIT_DATA
        ra, rb = _evaluate_all([records[goalkeeper_a], records[goalkeeper_b]], config)
        _emit(render_comparison(ra, rb, config.output_format), config, stdout)
        return EXIT_OK

    return _run(body, stderr)


def cmd_validate(input_path: str, config: CliConfig, stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    def body():
        fmt = config.input_format or detect_format(input_path)
        raw = _read(input_path)
        try:
            records, diags = (diagnose_json if fmt == "json" else diagnose_csv)(raw, config.geometry())
        except ParseError as exc:
            records, diags = None, exc.diagnostics or [exc]
        lines = [str(d) for d in diags]
        if records is None:
            errors = sum(getattr(d, "level", "error") == "error" for d in diags)
            lines.append(f"INVALID, {errors} error(s)")
            status = EXIT_DATA
        else:
            kicks = sum(len(r.kicks) for r in records)
            lines.append(f"OK, {len(records)} goalkeepers, {kicks} kicks")
            status = EXIT_OK
        _emit("\n".join(lines) + "\n", config, stdout)
        return status

    return _run(body, stderr)


@dataclass(frozen=True)
class CheckRow:
    dataset: str
    measure: str
    computed: float | None
    paper: float
    reproducible: bool
    note: str

    @property
    def diff(self) -> float:
        return float("inf") if self.computed is None else abs(self.computed - self.paper)

    @property
    def status(self) -> str:
        return "PASS" if self.diff <= TOLERANCE + 1e-12 else "DISCREPANT"


def paper_check_rows(config: CliConfig = CliConfig()) -> list[CheckRow]:
    g, w = config.geometry(), config.weights()
    rows = []
    for name, ds in builtin_paper_datasets().items():
        report = evaluate(ds.shootout, g, w)
        for exp in ds.expectations:
            rows.append(CheckRow(name, exp.measure, getattr(report, exp.measure), exp.paper_value,
                                 exp.reproducible, exp.note))
    return rows


def render_paper_check(rows: list[CheckRow], fmt: str) -> str:
    failing = [r for r in rows if r.reproducible and r.status != "PASS"]
    flagged = [r for r in rows if r.status == "DISCREPANT"]
    if fmt == "json":
        doc = {
            "tolerance": TOLERANCE,
            "rows": [
                {"dataset": r.dataset, "measure": r.measure, "computed": r.computed, "paper": r.paper,
                 "abs_diff": r.diff, "status": r.status,
                 "expected": "reproducible" if r.reproducible else "discrepant", "note": r.note}
                for r in rows
            ],
            "reproducible_failures": len(failing),
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["dataset", "measure", "computed", "paper", "abs_diff", "status", "expected", "note"])
        for r in rows:
            writer.writerow([r.dataset, r.measure, repr(r.computed), repr(r.paper), repr(r.diff), r.status,
                             "reproducible" if r.reproducible else "discrepant", r.note])
        return buf.getvalue()

    out = [f"{'dataset':<20} {'measure':<7} {'computed':>8} {'paper':>7} {'|diff|':>7}  {'status':<10}  expected"]
    for r in rows:
        expected = "reproducible" if r.reproducible else "discrepant"
        line = (f"{r.dataset:<20} {r.measure.upper():<7} {r.computed:>8.3f} {r.paper:>7.3f} "
                f"{r.diff:>7.3f}  {r.status:<10}  {expected}")
        if r.note:
            line += f"  ({r.note})"
        out.append(line)
    out.append(
        f"{len(rows)} values checked at tolerance {TOLERANCE}: {len(rows) - len(flagged)} PASS, "
        f"{len(flagged)} DISCREPANT; {len(failing)} reproducible value(s) failing"
    )
    return "\n".join(out) + "\n"


def cmd_paper_check(config: CliConfig, stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    def body():
        rows = paper_check_rows(config)
        _emit(render_paper_check(rows, config.output_format), config, stdout)
        return EXIT_OK if all(r.status == "PASS" for r in rows if r.reproducible) else EXIT_DATA

    return _run(body, stderr)


# -- argument parsing ------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DATA, f"{self.prog}: error: {message}\n")


def _omega(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 < value < 0.5:
        raise argparse.ArgumentTypeError(f"must lie strictly between 0 and 0.5, got {value}")
    return value


def _positive(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _grid(text):
    try:
        cols, rows = (int(part) for part in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected COLSxROWS such as 3x3, got {text!r}") from None
    if cols < 2 or rows < 2:
        raise argparse.ArgumentTypeError(f"grid must be at least 2x2, got {text!r}")
    return cols, rows


def _add_config_flags(p: argparse.ArgumentParser, with_weights=True):
    p.add_argument("--metric", choices=METRIC_NAMES, default="euclidean")
    p.add_argument("--minkowski-p", type=_positive, default=2.0, metavar="P")
    p.add_argument("--grid", type=_grid, default=(3, 3), metavar="CxR")
    p.add_argument("--goal-width", type=_positive, default=7.32, metavar="M")
    p.add_argument("--goal-height", type=_positive, default=2.44, metavar="M")
    if with_weights:
        p.add_argument("--omega-e", type=_omega, default=0.3, help="reward for reading the kick (default 0.3)")
        p.add_argument("--omega-d", type=_omega, default=0.2, help="penalty for misreading it (default 0.2)")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", metavar="PATH", help="write output here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gkeval", description="Clustering-based goalkeeper penalty evaluation.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("evaluate", help="compute all measures for every goalkeeper in a file")
    p.add_argument("input")
    p.add_argument("--input-format", choices=("csv", "json"))
    _add_config_flags(p)

    p = sub.add_parser("compare", help="compare two goalkeepers side by side")
    p.add_argument("input")
    p.add_argument("goalkeeper_a")
    p.add_argument("goalkeeper_b")
    p.add_argument("--input-format", choices=("csv", "json"))
    _add_config_flags(p)

    p = sub.add_parser("validate", help="check an input file and report per-line diagnostics")
    p.add_argument("input")
    p.add_argument("--input-format", choices=("csv", "json"))
    _add_config_flags(p, with_weights=False)

    p = sub.add_parser("paper-check", help="recompute the published figures and list discrepancies")
    _add_config_flags(p)
    return parser


def config_from_args(args) -> CliConfig:
    cols, rows = args.grid
    return CliConfig(
        metric=args.metric,
        minkowski_p=args.minkowski_p,
        cols=cols,
        rows=rows,
        goal_width=args.goal_width,
        goal_height=args.goal_height,
        omega_e=getattr(args, "omega_e", 0.3),
        omega_d=getattr(args, "omega_d", 0.2),
        output_format=getattr(args, "format", "text"),
        out=args.out,
        input_format=getattr(args, "input_format", None),
    )


def main(argv=None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    if args.command == "evaluate":
        return cmd_evaluate(args.input, config, stdout, stderr)
    if args.command == "compare":
        return cmd_compare(args.input, args.goalkeeper_a, args.goalkeeper_b, config, stdout, stderr)
    if args.command == "validate":
        return cmd_validate(args.input, config, stdout, stderr)
    return cmd_paper_check(config, stdout, stderr)
