"""Time-window sizing and snapshot construction.

The optimal window width is driven by the average meeting time per
contact: total contact time over all pairs divided by total contact
occurrences. The trace is then materialized as a sequence of W =
ceil((t_max - t_min)/w) snapshots; window k covers the half-open
interval [t_min + k*w, t_min + (k+1)*w), with the final window closed
at t_max so every instant maps to exactly one window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .trace_model import AnalysisPeriod, ContactTrace, WindowConfig


@dataclass(frozen=True)
class PairAggregate:
    """Total contact time and occurrence count for one node pair."""

    pair: tuple[int, int]
    total_contact_time: float
    occurrence_count: int


@dataclass(frozen=True)
class Snapshot:
    """One time window: the pairs in contact and the nodes occurring."""

    edges: frozenset[tuple[int, int]]
    occupants: frozenset[int]


@dataclass(frozen=True)
class SnapshotSequence:
    """The temporal graph: W fixed-width snapshots over one period."""

    window_width: float
    window_count: int
    windows: tuple[Snapshot, ...]
    nodes: tuple[int, ...]
    t_min: float

    def occurrence_windows(self, node: int) -> tuple[int, ...]:
        """Window indices in which the node occurs, ascending."""
        return tuple(
            k for k, snap in enumerate(self.windows) if node in snap.occupants
        )


def pair_aggregates(
    trace: ContactTrace, period: AnalysisPeriod | None = None
) -> list[PairAggregate]:
    """One aggregate per pair with at least one contact in the period.

    Instantaneous contacts contribute zero duration but one occurrence.
    The trace is expected to be clipped already; a period may be passed
    to clip here instead.
    """
    if period is not None:
        from .ingestion import clip_to_period

        trace = clip_to_period(trace, period)
    totals: dict[tuple[int, int], list[float]] = {}
    for ev in trace.events:
        acc = totals.setdefault(ev.pair, [0.0, 0])
        acc[0] += ev.duration
        acc[1] += 1
    return [
        PairAggregate(pair, acc[0], int(acc[1])) for pair, acc in sorted(totals.items())
    ]


def average_meeting_time(aggregates: list[PairAggregate]) -> float:
    """Sum of contact time over sum of occurrences, across all pairs."""
    if not aggregates:
        raise ValueError("no contacts in period")
    total_time = sum(a.total_contact_time for a in aggregates)
    total_occ = sum(a.occurrence_count for a in aggregates)
    return total_time / total_occ


def recommend_window(aggregates: list[PairAggregate]) -> float:
    """Smallest positive multiple of 60 strictly greater than the average
    meeting time."""
    avg = average_meeting_time(aggregates)
    return float((math.floor(avg / 60) + 1) * 60)


def window_count(period: AnalysisPeriod, w: float) -> int:
    """Number of windows W = ceil((t_max - t_min)/w), at least 1."""
    if not w > 0:
        raise ValueError(f"window width must be positive, got {w}")
    ratio = period.span / w
    nearest = round(ratio)
    if abs(ratio - nearest) < 1e-9 and nearest >= 1:
        return int(nearest)
    return max(1, math.ceil(ratio))


def build_snapshots(
    trace: ContactTrace, period: AnalysisPeriod, cfg: WindowConfig
) -> SnapshotSequence:
    """Materialize the trace as a snapshot sequence.

    An event appears as an edge in every window its interval intersects;
    a window's occupant set is the union of its edges' endpoints. Empty
    windows are retained so indices line up with time.
    """
    w = cfg.w
    count = window_count(period, w)
    edge_sets: list[set[tuple[int, int]]] = [set() for _ in range(count)]
    for ev in trace.events:
        if ev.end < period.t_min or ev.start > period.t_max:
            continue
        start = max(ev.start, period.t_min)
        end = min(ev.end, period.t_max)
        k0 = int(math.floor((start - period.t_min) / w + 1e-9))
        k1 = int(math.floor((end - period.t_min) / w + 1e-9))
        k0 = min(max(k0, 0), count - 1)
        k1 = min(max(k1, 0), count - 1)
        for k in range(k0, k1 + 1):
            edge_sets[k].add(ev.pair)
    snaps = []
    for es in edge_sets:
        occupants = frozenset(n for pair in es for n in pair)
        snaps.append(Snapshot(frozenset(es), occupants))
    return SnapshotSequence(
        window_width=float(w),
        window_count=count,
        windows=tuple(snaps),
        nodes=tuple(sorted(trace.nodes)),
        t_min=period.t_min,
    )
