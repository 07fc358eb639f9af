"""Trace file parsing and writing.

Two on-disk formats are supported:

* the six-column common format (source, destination, connection-up time,
  connection-down time, occurrence count, inter-contact time), one
  contact per line, whitespace-delimited, optional header line;
* ONE simulator connectivity reports, lines of the form
  ``<sim_time> CONN <node1> <node2> <up|down>``.

The redundant common-format columns (occurrence count, inter-contact
time) are always re-derived and never trusted; mismatches surface as
warnings. Overlapping intervals for the same pair are merged into one
event spanning their union before analysis, so a pair's airtime is
never double counted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import IO, Iterable, Optional, Union

from .trace_model import AnalysisPeriod, ContactEvent, ContactTrace

TextSource = Union[str, IO[str], Iterable[str]]


class ParseError(ValueError):
    """Malformed input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class ParseWarning:
    """Non-fatal oddity found while parsing (recomputed values win)."""

    line: Optional[int]
    message: str


def _lines(text: TextSource) -> Iterable[str]:
    if isinstance(text, str):
        return text.splitlines()
    return text


def _merge_pair_overlaps(events: list[ContactEvent]) -> list[ContactEvent]:
    """Merge strictly overlapping intervals of the same pair into their union."""
    by_pair: dict[tuple[int, int], list[ContactEvent]] = {}
    for ev in events:
        by_pair.setdefault(ev.pair, []).append(ev)
    merged: list[ContactEvent] = []
    for pair, evs in by_pair.items():
        evs.sort(key=lambda e: (e.start, e.end))
        cur = evs[0]
        for ev in evs[1:]:
            if ev.start < cur.end:
                cur = ContactEvent(cur.a, cur.b, cur.start, max(cur.end, ev.end))
            else:
                merged.append(cur)
                cur = ev
        merged.append(cur)
    merged.sort(key=ContactEvent.sort_key)
    return merged


def _looks_numeric(token: str) -> bool:
    try:
        float(token)
        return True
    except ValueError:
        return False


def parse_common_format(
    text: TextSource, warnings: Optional[list[ParseWarning]] = None
) -> ContactTrace:
    """Parse the six-column common format into a ContactTrace.

    One ContactEvent per row with start = connection-up time and
    end = connection-down time. The occurrence-count and inter-contact
    columns are checked against recomputation; mismatches produce
    warnings and the recomputed values win.
    """
    events: list[ContactEvent] = []
    last_up: dict[tuple[int, int], float] = {}
    occ_seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(_lines(text), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if lineno == 1 and not _looks_numeric(fields[0]):
            continue  # header
        if len(fields) != 6:
            raise ParseError(f"expected 6 columns, got {len(fields)}", lineno)
        try:
            src = int(fields[0])
            dst = int(fields[1])
            up = float(fields[2])
            down = float(fields[3])
            occ = int(fields[4])
            inter = float(fields[5])
        except ValueError as exc:
            raise ParseError(f"non-numeric field: {exc}", lineno) from None
        if up > down:
            raise ParseError(f"connection up {up} after down {down}", lineno)
        pair = (src, dst) if src < dst else (dst, src)
        expected_occ = occ_seen.get(pair, 0) + 1
        occ_seen[pair] = expected_occ
        if occ != expected_occ:
            _warn(warnings, lineno, f"occurrence count {occ} != recomputed {expected_occ}")
        expected_inter = up - last_up[pair] if pair in last_up else 0.0
        last_up[pair] = up
        if abs(inter - expected_inter) > 1e-9:
            _warn(
                warnings,
                lineno,
                f"inter-contact time {inter} != recomputed {expected_inter}",
            )
        events.append(ContactEvent(src, dst, up, down))
    if not events:
        raise ParseError("no events")
    return ContactTrace.from_events(_merge_pair_overlaps(events))


_NODE_ID = re.compile(r"^[A-Za-z]*(\d+)$")


def _node_id(token: str, lineno: int) -> int:
    m = _NODE_ID.match(token)
    if not m:
        raise ParseError(f"bad node id {token!r}", lineno)
    return int(m.group(1))


def parse_one_report(
    text: TextSource, warnings: Optional[list[ParseWarning]] = None
) -> ContactTrace:
    """Parse a ONE simulator connectivity report into a ContactTrace.

    Up/down rows are paired per unordered node pair (FIFO on unclosed
    ups; the report may name the pair in either order on the down row).
    An up with no down by end of stream is closed at the last simulation
    time observed, with a warning.
    """
    open_ups: dict[tuple[int, int], list[tuple[float, int]]] = {}
    events: list[ContactEvent] = []
    last_time = 0.0
    saw_rows = False
    for lineno, raw in enumerate(_lines(text), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if lineno == 1 and not _looks_numeric(fields[0]):
            continue  # header
        if len(fields) != 5:
            raise ParseError(f"expected 5 columns, got {len(fields)}", lineno)
        try:
            sim_time = float(fields[0])
        except ValueError:
            raise ParseError(f"non-numeric simulation time {fields[0]!r}", lineno) from None
        saw_rows = True
        last_time = max(last_time, sim_time)
        if fields[1].upper() != "CONN":
            _warn(warnings, lineno, f"skipping non-CONN operation {fields[1]!r}")
            continue
        n1 = _node_id(fields[2], lineno)
        n2 = _node_id(fields[3], lineno)
        action = fields[4].lower()
        pair = (n1, n2) if n1 < n2 else (n2, n1)
        if action == "up":
            open_ups.setdefault(pair, []).append((sim_time, lineno))
        elif action == "down":
            stack = open_ups.get(pair)
            if not stack:
                raise ParseError(f"down for pair {pair} with no open up", lineno)
            start, _ = stack.pop(0)
            events.append(ContactEvent(pair[0], pair[1], start, sim_time))
        else:
            raise ParseError(f"unknown action {fields[4]!r}", lineno)
    for pair, stack in open_ups.items():
        for start, lineno in stack:
            _warn(
                warnings,
                lineno,
                f"up for pair {pair} never closed; truncating at {last_time}",
            )
            events.append(ContactEvent(pair[0], pair[1], start, last_time))
    if not events:
        raise ParseError("no events" if saw_rows else "empty input, no events")
    return ContactTrace.from_events(_merge_pair_overlaps(events))


def _warn(sink: Optional[list[ParseWarning]], line: Optional[int], message: str) -> None:
    if sink is not None:
        sink.append(ParseWarning(line, message))


def clip_to_period(trace: ContactTrace, period: AnalysisPeriod) -> ContactTrace:
    """Restrict a trace to one analysis period.

    Events wholly outside [t_min, t_max] are dropped; straddling events
    are truncated to the boundary. The node set is recomputed from the
    surviving events.
    """
    clipped = []
    for ev in trace.events:
        if ev.end < period.t_min or ev.start > period.t_max:
            continue
        clipped.append(
            ContactEvent(
                ev.a, ev.b, max(ev.start, period.t_min), min(ev.end, period.t_max)
            )
        )
    return ContactTrace.from_events(clipped, span=(period.t_min, period.t_max))


def _fmt_time(t: float) -> str:
    if t == int(t):
        return str(int(t))
    return repr(float(t))


COMMON_FORMAT_HEADER = (
    "source destination conn_up conn_down occurrence_count intercontact_time"
)


def write_common_format(trace: ContactTrace) -> str:
    """Emit the common format, one row per contact, sorted by (pair, start).

    Occurrence counts and inter-contact times are freshly derived;
    parse_common_format(write_common_format(t)) reproduces t's events.
    """
    rows = [COMMON_FORMAT_HEADER]
    by_pair: dict[tuple[int, int], list[ContactEvent]] = {}
    for ev in trace.events:
        by_pair.setdefault(ev.pair, []).append(ev)
    for pair in sorted(by_pair):
        evs = sorted(by_pair[pair], key=lambda e: (e.start, e.end))
        prev_up: Optional[float] = None
        for occ, ev in enumerate(evs, start=1):
            inter = 0.0 if prev_up is None else ev.start - prev_up
            prev_up = ev.start
            rows.append(
                f"{ev.a} {ev.b} {_fmt_time(ev.start)} {_fmt_time(ev.end)} "
                f"{occ} {_fmt_time(inter)}"
            )
    return "\n".join(rows) + "\n"


def write_one_report(trace: ContactTrace) -> str:
    """Emit a ONE-style connectivity report (up/down rows sorted by time)."""
    rows: list[tuple[float, int, str]] = []
    for ev in trace.events:
        rows.append((ev.start, 0, f"{_fmt_time(ev.start)} CONN {ev.a} {ev.b} up"))
        rows.append((ev.end, 1, f"{_fmt_time(ev.end)} CONN {ev.a} {ev.b} down"))
    rows.sort(key=lambda r: (r[0], r[1]))
    return "\n".join(r[2] for r in rows) + "\n"
