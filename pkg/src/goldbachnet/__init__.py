"""Prime-pair networks from even-number decompositions.

Every even number n >= 8 contributes one edge between a prime pair
p + q = n, the pair drawn with probability proportional to (q - p)**alpha.
The package builds these networks, measures the usual small-world
statistics against a matched G(N, M) baseline, and averages seeded
ensembles over alpha sweeps and node-count snapshots.
"""

from . import errors
from .baseline import GnmGraph, NullModelConfig, baseline_report, sample_gnm
from .ensemble import (
    AggregateStats,
    EnsembleResult,
    GrowthCurves,
    SweepCell,
    SweepSpec,
    aggregate,
    baseline_seed,
    growth_curves,
    realization_seed,
    run_sweep,
)
from .goldbach import (
    Decomposition,
    GoldbachPair,
    decompose,
    mean_delta_literal,
    mean_delta_weighted,
)
from .metrics import (
    MetricsReport,
    assortativity,
    clustering,
    compute_report,
    degree_stats,
    shortest_distance_stats,
)
from .netbuild import (
    BuildConfig,
    PrimeGraph,
    build,
    build_many,
    select_pair,
    snapshots,
)
from .primes import PrimeTable, build_table, is_prime

__version__ = "0.1.0"

__all__ = [
    "AggregateStats",
    "BuildConfig",
    "Decomposition",
    "EnsembleResult",
    "GnmGraph",
    "GoldbachPair",
    "GrowthCurves",
    "MetricsReport",
    "NullModelConfig",
    "PrimeGraph",
    "PrimeTable",
    "SweepCell",
    "SweepSpec",
    "aggregate",
    "assortativity",
    "baseline_report",
    "baseline_seed",
    "build",
    "build_many",
    "build_table",
    "clustering",
    "compute_report",
    "decompose",
    "degree_stats",
    "errors",
    "growth_curves",
    "is_prime",
    "mean_delta_literal",
    "mean_delta_weighted",
    "realization_seed",
    "run_sweep",
    "sample_gnm",
    "select_pair",
    "shortest_distance_stats",
    "snapshots",
]
