"""Command-line interface: window sizing, analysis reports, matrices,
format conversion and synthetic trace generation.

Exit codes: 0 success, 1 internal error, 2 input/usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields

from . import ingestion, rwp_gen, static_metrics, temporal_metrics, windowing
from .trace_model import AnalysisPeriod, ContactTrace, WindowConfig

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


class InputError(Exception):
    """User-facing input problem; maps to exit code 2."""


@dataclass(frozen=True)
class MetricsReport:
    """One analysis period's full row of computed metrics.

    The first thirteen fields mirror the evaluation table layout; the
    trailing fields add the reachable-pair count, the temporal diameter
    variant and the temporal centrality family.
    """

    dataset_name: str
    t_min: float
    t_max: float
    total_nodes: int
    total_connections: int
    total_timestamps: int
    time_window: float
    static_distance: float
    average_temporal_distance: float
    diameter: int
    top_degree: tuple[int, float]
    top_betweenness: tuple[int, float]
    top_closeness: tuple[int, float]
    reachable_pairs: int
    temporal_diameter_hops: int
    temporal_diameter_seconds: float
    top_temporal_closeness: tuple[int, float]
    top_temporal_betweenness: tuple[int, float]


def build_report(
    trace: ContactTrace,
    period: AnalysisPeriod,
    w: float | None = None,
    horizon: int | None = None,
    dataset_name: str = "trace",
) -> MetricsReport:
    """Run the full pipeline for one period and assemble the report row."""
    clipped = ingestion.clip_to_period(trace, period)
    aggs = windowing.pair_aggregates(clipped)
    if not aggs:
        raise InputError("no contacts in period")
    if w is None:
        w = windowing.recommend_window(aggs)
    if not w > 0:
        raise InputError(f"window width must be positive, got {w}")
    n = len(clipped.nodes)
    if n < 2:
        raise InputError("analysis needs at least 2 nodes in the period")
    cfg = WindowConfig(w=w, horizon=horizon)
    snapshots = windowing.build_snapshots(clipped, period, cfg)
    matrix = temporal_metrics.temporal_distance_matrix(snapshots)
    avg_td = temporal_metrics.average_temporal_distance(matrix, w)
    tdia = temporal_metrics.temporal_diameter(matrix, w)
    reach = temporal_metrics.reachable_pair_count(matrix)

    graph = static_metrics.aggregate(clipped)
    static_dist = static_metrics.static_average_distance(graph)
    sdia = static_metrics.static_diameter(graph)
    top_deg = temporal_metrics.rank_nodes(static_metrics.degree_centrality_all(graph))[0]
    top_clo = temporal_metrics.rank_nodes(
        static_metrics.closeness_centrality_all(graph)
    )[0]
    if n >= 3:
        top_bet = temporal_metrics.rank_nodes(
            static_metrics.betweenness_centrality_all(graph)
        )[0]
        top_tbet = temporal_metrics.rank_nodes(
            temporal_metrics.temporal_betweenness_all(snapshots)
        )[0]
    else:
        top_bet = temporal_metrics.CentralityScore(top_deg.node, 0.0)
        top_tbet = temporal_metrics.CentralityScore(top_deg.node, 0.0)
    top_tclo = temporal_metrics.rank_nodes(
        temporal_metrics.temporal_closeness_all(matrix, snapshots.window_count)
    )[0]
    return MetricsReport(
        dataset_name=dataset_name,
        t_min=period.t_min,
        t_max=period.t_max,
        total_nodes=n,
        total_connections=len(clipped.events),
        total_timestamps=snapshots.window_count,
        time_window=w,
        static_distance=static_dist,
        average_temporal_distance=avg_td,
        diameter=sdia,
        top_degree=(top_deg.node, top_deg.value),
        top_betweenness=(top_bet.node, top_bet.value),
        top_closeness=(top_clo.node, top_clo.value),
        reachable_pairs=reach,
        temporal_diameter_hops=tdia.hops,
        temporal_diameter_seconds=tdia.seconds,
        top_temporal_closeness=(top_tclo.node, top_tclo.value),
        top_temporal_betweenness=(top_tbet.node, top_tbet.value),
    )


def _fmt_cell(value) -> str:
    if isinstance(value, tuple):
        return f"({value[0]}, {value[1]:.4g})"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def format_reports(reports: list[MetricsReport], style: str) -> str:
    """Render rows as an aligned table or a tab-delimited block."""
    names = [f.name for f in fields(MetricsReport)]
    rows = [[_fmt_cell(getattr(r, n)) for n in names] for r in reports]
    if style == "delimited":
        lines = ["\t".join(names)]
        lines.extend("\t".join(row) for row in rows)
        return "\n".join(lines) + "\n"
    widths = [
        max(len(names[c]), max(len(row[c]) for row in rows)) for c in range(len(names))
    ]
    lines = ["  ".join(names[c].ljust(widths[c]) for c in range(len(names)))]
    for row in rows:
        lines.append("  ".join(row[c].ljust(widths[c]) for c in range(len(names))))
    return "\n".join(lines) + "\n"


def _load_trace(path: str, fmt: str) -> ContactTrace:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        if fmt == "one":
            return ingestion.parse_one_report(text)
        return ingestion.parse_common_format(text)
    except ingestion.ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_period_flag(value: str) -> tuple[float, float]:
    try:
        lo, hi = value.split(":")
        return float(lo), float(hi)
    except ValueError:
        raise InputError(f"bad --period {value!r}, expected TMIN:TMAX") from None


def _resolve_periods(args, trace: ContactTrace) -> list[AnalysisPeriod]:
    periods = []
    if getattr(args, "period", None):
        for p in args.period:
            lo, hi = _parse_period_flag(p)
            periods.append(_make_period(lo, hi))
    else:
        lo = args.tmin if args.tmin is not None else trace.span_min
        hi = args.tmax if args.tmax is not None else trace.span_max
        periods.append(_make_period(lo, hi))
    return periods


def _make_period(lo: float, hi: float) -> AnalysisPeriod:
    try:
        return AnalysisPeriod(lo, hi)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_window(args) -> int:
    trace = _load_trace(args.input, args.format)
    period = _resolve_periods(args, trace)[0]
    aggs = windowing.pair_aggregates(trace, period)
    if not aggs:
        raise InputError("no contacts in period")
    avg = windowing.average_meeting_time(aggs)
    rec = windowing.recommend_window(aggs)
    count = windowing.window_count(period, rec)
    print(f"avg={avg:.2f} recommended={rec:g} windows={count}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    trace = _load_trace(args.input, args.format)
    periods = _resolve_periods(args, trace)
    reports = []
    for period in periods:
        reports.append(
            build_report(
                trace,
                period,
                w=args.window,
                horizon=args.horizon,
                dataset_name=args.input,
            )
        )
    _write_output(format_reports(reports, args.report_format), args.output)
    return EXIT_OK


def cmd_matrix(args) -> int:
    trace = _load_trace(args.input, args.format)
    period = _resolve_periods(args, trace)[0]
    clipped = ingestion.clip_to_period(trace, period)
    w = args.window
    if w is None:
        aggs = windowing.pair_aggregates(clipped)
        if not aggs:
            raise InputError("no contacts in period")
        w = windowing.recommend_window(aggs)
    snapshots = windowing.build_snapshots(clipped, period, WindowConfig(w=w))
    matrix = temporal_metrics.temporal_distance_matrix(snapshots)
    _write_output(matrix.to_text() + "\n", args.output)
    return EXIT_OK


def cmd_convert(args) -> int:
    trace = _load_trace(args.input, getattr(args, "from"))
    if args.to == "one":
        text = ingestion.write_one_report(trace)
    else:
        text = ingestion.write_common_format(trace)
    _write_output(text, args.output)
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        params = rwp_gen.RwpParams(
            node_count=args.nodes,
            duration=args.duration,
            range=args.range,
            area_width=args.area_width,
            area_height=args.area_height,
            speed_min=args.speed_min,
            speed_max=args.speed_max,
            pause_max=args.pause_max,
            seed=args.seed,
            tick=args.tick,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    trace = rwp_gen.generate(params)
    if args.format == "one":
        text = ingestion.write_one_report(trace)
    else:
        text = ingestion.write_common_format(trace)
    _write_output(text, args.output)
    return EXIT_OK


def _add_io_flags(p, with_period=True):
    p.add_argument("--input", required=True, help="trace file to read")
    p.add_argument(
        "--format", choices=("common", "one"), default="common", help="input format"
    )
    p.add_argument("--output", default=None, help="output path (default stdout)")
    if with_period:
        p.add_argument("--tmin", type=float, default=None)
        p.add_argument("--tmax", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtnmetrics",
        description="Temporal-graph metrics for DTN contact traces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("window", help="recommend a time-window size")
    _add_io_flags(p)
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("analyze", help="full metrics report for one or more periods")
    _add_io_flags(p)
    p.add_argument(
        "--period",
        action="append",
        metavar="TMIN:TMAX",
        help="analysis period; repeat for one report row per period",
    )
    p.add_argument("--window", type=float, default=None, help="window width override")
    p.add_argument(
        "--horizon", type=int, default=None, help="max intra-window hops (default unlimited)"
    )
    p.add_argument(
        "--report-format", choices=("table", "delimited"), default="table"
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("matrix", help="print the temporal distance matrix")
    _add_io_flags(p)
    p.add_argument("--window", type=float, default=None, help="window width override")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("convert", help="convert between trace formats")
    p.add_argument("--input", required=True)
    p.add_argument("--from", dest="from", choices=("common", "one"), required=True)
    p.add_argument("--to", choices=("common", "one"), required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("generate", help="synthesize a random-waypoint trace")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--duration", type=float, required=True)
    p.add_argument("--range", type=float, default=100.0)
    p.add_argument("--area-width", type=float, default=1000.0)
    p.add_argument("--area-height", type=float, default=1000.0)
    p.add_argument("--speed-min", type=float, default=0.5)
    p.add_argument("--speed-max", type=float, default=1.5)
    p.add_argument("--pause-max", type=float, default=120.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tick", type=float, default=0.1)
    p.add_argument("--format", choices=("common", "one"), default="common")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
