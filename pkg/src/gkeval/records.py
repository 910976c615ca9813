"""Reading and writing shootout files and metric reports.

Input schemas
-------------
CSV (header required, UTF-8)::

    goalkeeper,opponent,kick_number,kicker,true_zone,detected_zone,on_target,outcome

An optional trailing ``playing_time_minutes`` column may be added; it must be
constant within a goalkeeper's rows (empty means unknown). Rows for one
goalkeeper are contiguous and ordered by ``kick_number`` starting at 1.

JSON: an array of ``{goalkeeper, opponent, playing_time_minutes?, kicks: [...]}``
where each kick is ``{kick_number, kicker, true_zone, detected_zone,
on_target, outcome}``.

In both formats ``detected_zone`` may be ``none`` for a keeper who did not
move; it is recorded as the zone at the middle of the goal.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .errors import ParseError
from .geometry import DEFAULT_GEOMETRY, ClusterGeometry
from .model import (
    ContingencyTable,
    KickRecord,
    MetricReport,
    Outcome,
    PairCounts,
    SaveBuckets,
    ShootoutRecord,
)

CSV_COLUMNS = (
    "goalkeeper",
    "opponent",
    "kick_number",
    "kicker",
    "true_zone",
    "detected_zone",
    "on_target",
    "outcome",
)
OPTIONAL_CSV_COLUMNS = ("playing_time_minutes",)
NO_MOVEMENT = "none"

REPORT_CSV_COLUMNS = (
    "goalkeeper", "opponent", "n", "ri", "ddi", "mrdi", "sv", "gaa", "gsi",
    "a", "b", "c", "d", "n_s", "n_ie", "n_oe", "n_id", "n_od",
)


@dataclass(frozen=True)
class Diagnostic:
    location: str
    level: str  # "error" or "note"
    message: str

    def __str__(self):
        return f"{self.location}: {self.level}: {self.message}"


class _FieldError(Exception):
    pass


def _decode(text) -> str:
    if isinstance(text, (bytes, bytearray)):
        try:
            return bytes(text).decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"byte {exc.start}", "input is not valid UTF-8") from None
    return text.lstrip("\ufeff")


def _as_int(value, what) -> int:
    if isinstance(value, bool):
        raise _FieldError(f"{what} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise _FieldError(f"{what} must be an integer, got {value!r}")


def _as_zone(value, what, g: ClusterGeometry, notes: list[str]) -> int:
    if isinstance(value, str) and value.strip().lower() == NO_MOVEMENT:
        if what == "true_zone":
            raise _FieldError("true_zone cannot be 'none'")
        notes.append(f"detected_zone 'none' mapped to zone {g.center_zone}")
        return g.center_zone
    zone = _as_int(value, what)
    if not 1 <= zone <= g.k:
        raise _FieldError(f"{what} {zone} out of range 1..{g.k} (zone out of range)")
    return zone


def _as_bool(value, what) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.strip().lower() in ("true", "false"):
        return value.strip().lower() == "true"
    raise _FieldError(f"{what} must be true or false, got {value!r}")


def _as_outcome(value) -> Outcome:
    if isinstance(value, str):
        try:
            return Outcome(value.strip().lower())
        except ValueError:
            pass
    raise _FieldError(f"unknown outcome {value!r}; expected 'saved' or 'allowed'")


def _as_name(value, what) -> str:
    if not isinstance(value, str) or not value.strip():
        raise _FieldError(f"{what} must be a non-empty string")
    return value.strip()


def _as_minutes(value):
    if value is None or (isinstance(value, str) and not value.strip()):
        return None
    if isinstance(value, bool):
        raise _FieldError("playing_time_minutes must be a number")
    try:
        minutes = float(value)
    except (TypeError, ValueError):
        raise _FieldError(f"playing_time_minutes must be a number, got {value!r}") from None
    if not (math.isfinite(minutes) and minutes > 0):
        raise _FieldError(f"playing_time_minutes must be positive, got {value!r}")
    return minutes


def _make_kick(raw, g: ClusterGeometry, notes: list[str]) -> KickRecord:
    kick = dict(
        kick_number=_as_int(raw["kick_number"], "kick_number"),
        kicker=_as_name(raw["kicker"], "kicker"),
        true_zone=_as_zone(raw["true_zone"], "true_zone", g, notes),
        detected_zone=_as_zone(raw["detected_zone"], "detected_zone", g, notes),
        on_target=_as_bool(raw["on_target"], "on_target"),
        outcome=_as_outcome(raw["outcome"]),
    )
    if kick["kick_number"] < 1:
        raise _FieldError(f"kick_number must be >= 1, got {kick['kick_number']}")
    if kick["outcome"] is Outcome.ALLOWED and not kick["on_target"]:
        raise _FieldError("off-target kick cannot be allowed")
    return KickRecord(**kick)


class _Group:
    def __init__(self, goalkeeper, opponent, minutes):
        self.goalkeeper = goalkeeper
        self.opponent = opponent
        self.minutes = minutes
        self.kicks: list[KickRecord] = []

    def add(self, kick: KickRecord):
        expected = len(self.kicks) + 1
        if kick.kick_number != expected:
            if any(k.kick_number == kick.kick_number for k in self.kicks):
                raise _FieldError(f"duplicate kick_number {kick.kick_number} for {self.goalkeeper!r}")
            raise _FieldError(
                f"kick_number {kick.kick_number} out of order for {self.goalkeeper!r} (expected {expected})"
            )
        self.kicks.append(kick)

    def build(self) -> ShootoutRecord:
        return ShootoutRecord(self.goalkeeper, self.opponent, tuple(self.kicks), self.minutes)


def diagnose_csv(text, g: ClusterGeometry = DEFAULT_GEOMETRY):
    """Parse CSV input, returning ``(records, diagnostics)``.

    ``records`` is ``None`` whenever any diagnostic has level ``error``.
    """
    text = _decode(text)
    diags: list[Diagnostic] = []
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        return None, [Diagnostic("line 1", "error", "empty input; a header row is required")]
    except csv.Error as exc:
        return None, [Diagnostic("line 1", "error", f"malformed CSV: {exc}")]
    header = [h.strip() for h in header]
    missing = [c for c in CSV_COLUMNS if c not in header]
    unknown = [c for c in header if c not in CSV_COLUMNS + OPTIONAL_CSV_COLUMNS]
    if missing or unknown or len(set(header)) != len(header):
        parts = []
        if missing:
            parts.append("missing column(s) " + ", ".join(missing))
        if unknown:
            parts.append("unknown column(s) " + ", ".join(unknown))
        if len(set(header)) != len(header):
            parts.append("repeated column name")
        return None, [Diagnostic("line 1", "error", "bad header: " + "; ".join(parts))]

    groups: list[_Group] = []
    seen: set[str] = set()
    line = 1
    while True:
        try:
            row = next(reader)
        except StopIteration:
            break
        except csv.Error as exc:
            diags.append(Diagnostic(f"line {reader.line_num}", "error", f"malformed CSV: {exc}"))
            break
        line = reader.line_num
        loc = f"line {line}"
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            diags.append(Diagnostic(loc, "error", f"malformed row: expected {len(header)} fields, got {len(row)}"))
            continue
        raw = dict(zip(header, (cell.strip() for cell in row)))
        notes: list[str] = []
        try:
            keeper = _as_name(raw["goalkeeper"], "goalkeeper")
            opponent = _as_name(raw["opponent"], "opponent")
            minutes = _as_minutes(raw.get("playing_time_minutes"))
            kick = _make_kick(raw, g, notes)
            if groups and groups[-1].goalkeeper == keeper:
                group = groups[-1]
                if group.opponent != opponent:
                    raise _FieldError(f"opponent changes within {keeper!r}'s rows")
                if group.minutes != minutes:
                    raise _FieldError(f"playing_time_minutes changes within {keeper!r}'s rows")
            else:
                if keeper in seen:
                    raise _FieldError(f"rows for goalkeeper {keeper!r} are not contiguous")
                seen.add(keeper)
                group = _Group(keeper, opponent, minutes)
                groups.append(group)
            group.add(kick)
        except _FieldError as exc:
            diags.append(Diagnostic(loc, "error", str(exc)))
            continue
        diags.extend(Diagnostic(loc, "note", msg) for msg in notes)

    if not groups and not any(d.level == "error" for d in diags):
        diags.append(Diagnostic(f"line {line}", "error", "no kick rows"))
    if any(d.level == "error" for d in diags):
        return None, diags
    return [grp.build() for grp in groups], diags


def diagnose_json(text, g: ClusterGeometry = DEFAULT_GEOMETRY):
    """JSON counterpart of :func:`diagnose_csv`; locations are JSON paths."""
    text = _decode(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        return None, [Diagnostic(f"line {exc.lineno}", "error", f"malformed JSON: {exc.msg}")]
    if not isinstance(doc, list):
        return None, [Diagnostic("$", "error", "top level must be an array of goalkeeper objects")]
    if not doc:
        return None, [Diagnostic("$", "error", "no goalkeepers")]

    diags: list[Diagnostic] = []
    records = []
    seen: set[str] = set()
    for gi, obj in enumerate(doc):
        where = f"[{gi}]"
        if not isinstance(obj, dict):
            diags.append(Diagnostic(where, "error", "goalkeeper entry must be an object"))
            continue
        extra = set(obj) - {"goalkeeper", "opponent", "playing_time_minutes", "kicks"}
        if extra:
            diags.append(Diagnostic(where, "error", f"unknown field(s) {', '.join(sorted(extra))}"))
            continue
        try:
            for key in ("goalkeeper", "opponent", "kicks"):
                if key not in obj:
                    raise _FieldError(f"missing field {key!r}")
            keeper = _as_name(obj["goalkeeper"], "goalkeeper")
            opponent = _as_name(obj["opponent"], "opponent")
            minutes = _as_minutes(obj.get("playing_time_minutes"))
            if keeper in seen:
                raise _FieldError(f"goalkeeper {keeper!r} appears more than once")
            seen.add(keeper)
            kicks = obj["kicks"]
            if not isinstance(kicks, list) or not kicks:
                raise _FieldError(f"goalkeeper {keeper!r} needs a non-empty kicks array")
        except _FieldError as exc:
            diags.append(Diagnostic(where, "error", str(exc)))
            continue

        group = _Group(keeper, opponent, minutes)
        ok = True
        for ki, raw in enumerate(kicks):
            kwhere = f"{where}.kicks[{ki}]"
            notes: list[str] = []
            try:
                if not isinstance(raw, dict):
                    raise _FieldError("kick must be an object")
                fields = ("kick_number", "kicker", "true_zone", "detected_zone", "on_target", "outcome")
                missing = [f for f in fields if f not in raw]
                if missing:
                    raise _FieldError("missing field(s) " + ", ".join(missing))
                if set(raw) - set(fields):
                    raise _FieldError("unknown field(s) " + ", ".join(sorted(set(raw) - set(fields))))
                if not isinstance(raw["on_target"], bool):
                    raise _FieldError(f"on_target must be a JSON boolean, got {raw['on_target']!r}")
                group.add(_make_kick(raw, g, notes))
            except _FieldError as exc:
                diags.append(Diagnostic(kwhere, "error", str(exc)))
                ok = False
                continue
            diags.extend(Diagnostic(kwhere, "note", msg) for msg in notes)
        if ok:
            records.append(group.build())

    if any(d.level == "error" for d in diags):
        return None, diags
    return records, diags


def _raise_first(records, diags):
    if records is None:
        first = next(d for d in diags if d.level == "error")
        raise ParseError(first.location, first.message, diags)
    return records


def parse_shootout_csv(text, g: ClusterGeometry = DEFAULT_GEOMETRY) -> list[ShootoutRecord]:
    return _raise_first(*diagnose_csv(text, g))


def parse_shootout_json(text, g: ClusterGeometry = DEFAULT_GEOMETRY) -> list[ShootoutRecord]:
    return _raise_first(*diagnose_json(text, g))


def detect_format(path: str) -> str:
    return "json" if str(path).lower().endswith(".json") else "csv"


def parse_shootouts(text, fmt: str, g: ClusterGeometry = DEFAULT_GEOMETRY) -> list[ShootoutRecord]:
    if fmt == "json":
        return parse_shootout_json(text, g)
    return parse_shootout_csv(text, g)


# -- writing shootouts -----------------------------------------------------

def _kick_dict(k: KickRecord) -> dict:
    return {
        "kick_number": k.kick_number,
        "kicker": k.kicker,
        "true_zone": k.true_zone,
        "detected_zone": k.detected_zone,
        "on_target": k.on_target,
        "outcome": k.outcome.value,
    }


def dump_shootouts_json(records: Iterable[ShootoutRecord]) -> str:
    doc = []
    for r in records:
        obj = {"goalkeeper": r.goalkeeper, "opponent": r.opponent}
        if r.playing_time_minutes is not None:
            obj["playing_time_minutes"] = r.playing_time_minutes
        obj["kicks"] = [_kick_dict(k) for k in r.kicks]
        doc.append(obj)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump_shootouts_csv(records: Sequence[ShootoutRecord]) -> str:
    with_minutes = any(r.playing_time_minutes is not None for r in records)
    columns = CSV_COLUMNS + (OPTIONAL_CSV_COLUMNS if with_minutes else ())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in records:
        for k in r.kicks:
            row = [r.goalkeeper, r.opponent, k.kick_number, k.kicker, k.true_zone, k.detected_zone,
                   "true" if k.on_target else "false", k.outcome.value]
            if with_minutes:
                row.append("" if r.playing_time_minutes is None else repr(r.playing_time_minutes))
            writer.writerow(row)
    return buf.getvalue()


# -- reports -----------------------------------------------------------------

def report_to_dict(r: MetricReport) -> dict:
    return {
        "goalkeeper": r.goalkeeper,
        "opponent": r.opponent,
        "n": r.n,
        "ri": r.ri,
        "ddi": r.ddi,
        "mrdi": r.mrdi,
        "sv": r.sv,
        "gaa": r.gaa,
        "gsi": r.gsi,
        "pair_counts": None if r.pair_counts is None else asdict(r.pair_counts),
        "save_buckets": asdict(r.save_buckets),
        "contingency": {"k": r.contingency.k, "counts": [list(row) for row in r.contingency.counts]},
    }


def report_from_dict(obj: dict) -> MetricReport:
    def opt_float(key):
        v = obj[key]
        return None if v is None else float(v)

    pc = obj["pair_counts"]
    table = obj["contingency"]
    return MetricReport(
        goalkeeper=obj["goalkeeper"],
        opponent=obj["opponent"],
        ri=opt_float("ri"),
        ddi=float(obj["ddi"]),
        mrdi=opt_float("mrdi"),
        sv=float(obj["sv"]),
        gaa=opt_float("gaa"),
        gsi=float(obj["gsi"]),
        pair_counts=None if pc is None else PairCounts(**pc),
        save_buckets=SaveBuckets(**obj["save_buckets"]),
        contingency=ContingencyTable(int(table["k"]), tuple(tuple(int(v) for v in row) for row in table["counts"])),
    )


def parse_report_json(text) -> MetricReport | list[MetricReport]:
    """Inverse of ``serialize_report(..., "json")`` (and of the list form)."""
    try:
        doc = json.loads(_decode(text))
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}", f"malformed JSON: {exc.msg}") from None
    try:
        if isinstance(doc, list):
            return [report_from_dict(o) for o in doc]
        return report_from_dict(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("$", f"not a metric report: {exc}") from None


def _fmt3(x) -> str:
    return "n/a" if x is None else f"{x:.3f}"


def _text_block(r: MetricReport) -> str:
    head = (
        f"{r.goalkeeper} (vs {r.opponent}, {r.n} kicks): "
        f"RI={_fmt3(r.ri)}, DDI={_fmt3(r.ddi)}, MRDI={_fmt3(r.mrdi)}, SV={_fmt3(r.sv)}, GSI={_fmt3(r.gsi)}"
    )
    if r.gaa is not None:
        head += f", GAA={_fmt3(r.gaa)}"
    b = r.save_buckets
    pc = r.pair_counts
    pairs = "pairs n/a" if pc is None else f"pairs a={pc.a} b={pc.b} c={pc.c} d={pc.d}"
    buckets = f"buckets n={b.n} n_s={b.n_s} n_ie={b.n_ie} n_oe={b.n_oe} n_id={b.n_id} n_od={b.n_od}"
    return f"{head}\n  {pairs}; {buckets}\n"


def _csv_row(r: MetricReport) -> list:
    def num(x):
        return "" if x is None else repr(x)

    pc, b = r.pair_counts, r.save_buckets
    return [
        r.goalkeeper, r.opponent, r.n, num(r.ri), num(r.ddi), num(r.mrdi), num(r.sv), num(r.gaa), num(r.gsi),
        *(("", "", "", "") if pc is None else (pc.a, pc.b, pc.c, pc.d)),
        b.n_s, b.n_ie, b.n_oe, b.n_id, b.n_od,
    ]


def serialize_reports(reports: Sequence[MetricReport], fmt: str = "text") -> str:
    if fmt == "text":
        return "".join(_text_block(r) for r in reports)
    if fmt == "json":
        return json.dumps([report_to_dict(r) for r in reports], indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_CSV_COLUMNS)
        writer.writerows(_csv_row(r) for r in reports)
        return buf.getvalue()
    raise ValueError(f"unknown output format {fmt!r}")


def serialize_report(r: MetricReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_to_dict(r), indent=2, ensure_ascii=False) + "\n"
    return serialize_reports([r], fmt)
