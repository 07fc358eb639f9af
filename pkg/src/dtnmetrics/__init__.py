"""Temporal-graph metrics for DTN contact traces."""

from .trace_model import (
    AnalysisPeriod,
    ContactEvent,
    ContactTrace,
    UNLIMITED,
    Violation,
    WindowConfig,
    validate_trace,
)
from .ingestion import (
    ParseError,
    ParseWarning,
    clip_to_period,
    parse_common_format,
    parse_one_report,
    write_common_format,
    write_one_report,
)
from .windowing import (
    PairAggregate,
    Snapshot,
    SnapshotSequence,
    average_meeting_time,
    build_snapshots,
    pair_aggregates,
    recommend_window,
    window_count,
)
from .temporal_metrics import (
    CentralityScore,
    TemporalDiameter,
    TemporalDistanceMatrix,
    UNREACHABLE_SENTINEL,
    average_temporal_distance,
    rank_nodes,
    reachable_pair_count,
    temporal_betweenness,
    temporal_betweenness_all,
    temporal_closeness,
    temporal_closeness_all,
    temporal_diameter,
    temporal_distance_exact,
    temporal_distance_matrix,
    temporal_distance_paper,
)
from .static_metrics import (
    AggregatedGraph,
    aggregate,
    betweenness_centrality,
    betweenness_centrality_all,
    closeness_centrality,
    closeness_centrality_all,
    degree,
    degree_centrality,
    degree_centrality_all,
    static_average_distance,
    static_diameter,
)
from .rwp_gen import RwpParams, generate

__all__ = [
    "AggregatedGraph",
    "AnalysisPeriod",
    "CentralityScore",
    "ContactEvent",
    "ContactTrace",
    "PairAggregate",
    "ParseError",
    "ParseWarning",
    "RwpParams",
    "Snapshot",
    "SnapshotSequence",
    "TemporalDiameter",
    "TemporalDistanceMatrix",
    "UNLIMITED",
    "UNREACHABLE_SENTINEL",
    "Violation",
    "WindowConfig",
    "aggregate",
    "average_meeting_time",
    "average_temporal_distance",
    "betweenness_centrality",
    "betweenness_centrality_all",
    "build_snapshots",
    "clip_to_period",
    "closeness_centrality",
    "closeness_centrality_all",
    "degree",
    "degree_centrality",
    "degree_centrality_all",
    "generate",
    "pair_aggregates",
    "parse_common_format",
    "parse_one_report",
    "rank_nodes",
    "reachable_pair_count",
    "recommend_window",
    "static_average_distance",
    "static_diameter",
    "temporal_betweenness",
    "temporal_betweenness_all",
    "temporal_closeness",
    "temporal_closeness_all",
    "temporal_diameter",
    "temporal_distance_exact",
    "temporal_distance_matrix",
    "temporal_distance_paper",
    "validate_trace",
    "window_count",
    "write_common_format",
    "write_one_report",
]

__version__ = "0.1.0"
