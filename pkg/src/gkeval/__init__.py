"""Goalkeeper penalty-kick evaluation with clustering-based measures."""

from .datasets import PaperDataset, builtin_paper_datasets
from .errors import GeometryError, GkevalError, MetricError, ParseError, ZoneError
from .geometry import (
    DEFAULT_GEOMETRY,
    ClusterGeometry,
    DistanceMetric,
    Point,
    assign_zone,
    build_geometry,
    center_distance,
    max_distance_from,
)
from .metrics import (
    build_contingency,
    classify_buckets,
    ddi,
    evaluate,
    gaa,
    gsi,
    mrdi,
    pair_counts,
    rand_index,
    sv,
)
from .model import (
    ContingencyTable,
    GsiWeights,
    KickRecord,
    MetricReport,
    Outcome,
    PairCounts,
    SaveBuckets,
    ShootoutRecord,
)
from .records import (
    parse_report_json,
    parse_shootout_csv,
    parse_shootout_json,
    parse_shootouts,
    serialize_report,
    serialize_reports,
)

__version__ = "0.1.0"
