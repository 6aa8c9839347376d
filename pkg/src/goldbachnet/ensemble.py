"""Seeded ensembles: many realizations per alpha, aggregated per snapshot.

Seed derivation is random-access so that any realization can be rebuilt in
isolation: realization i of a sweep uses
``SeedSequence(master_seed, spawn_key=(0, i))`` collapsed to one 64-bit
value, and the matched null-model sample for (alpha index a, realization i,
snapshot index s) uses ``spawn_key=(1, a, i, s)``.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .baseline import NullModelConfig, baseline_report
from .metrics import MetricsReport, compute_report
from .netbuild import build_many
from .primes import build_table

SEED_RULE = (
    "uint64 from SeedSequence(master_seed, spawn_key): builds (0, realization); "
    "null models (1, alpha_index, realization, snapshot_index)"
)


def _derive_seed(master_seed, spawn_key):
    seq = np.random.SeedSequence(int(master_seed), spawn_key=spawn_key)
    return int(seq.generate_state(1, np.uint64)[0])


def realization_seed(master_seed, realization):
    """Build seed for one realization of a sweep."""
    return _derive_seed(master_seed, (0, int(realization)))


def baseline_seed(master_seed, alpha_index, realization, snapshot_index):
    """Null-model seed matched to one (alpha, realization, snapshot) cell."""
    return _derive_seed(
        master_seed, (1, int(alpha_index), int(realization), int(snapshot_index))
    )


@dataclass(frozen=True)
class SweepSpec:
    """One ensemble run: alpha grid, node-count checkpoints, realizations."""

    alphas: tuple
    snapshot_nodes: tuple
    realizations: int = 20
    master_seed: int = 1
    max_even_cap: int = 1_000_000
    clustering: str = "standard"

    def __post_init__(self):
        alphas = tuple(float(a) for a in self.alphas)
        if not alphas:
            raise ValueError("alphas must be nonempty")
        if any(math.isnan(a) for a in alphas):
            raise ValueError("alpha must not be NaN")
        object.__setattr__(self, "alphas", alphas)
        snaps = tuple(int(s) for s in self.snapshot_nodes)
        if not snaps or any(b <= a for a, b in zip(snaps, snaps[1:])):
            raise ValueError("snapshot_nodes must be nonempty, strictly increasing")
        object.__setattr__(self, "snapshot_nodes", snaps)
        if self.realizations < 1:
            raise ValueError("realizations must be >= 1")
        if self.max_even_cap < 8 or self.max_even_cap % 2:
            raise ValueError("max_even_cap must be even and >= 8")
        if not 0 <= int(self.master_seed) < 2**64:
            raise ValueError("master_seed must fit in 64 unsigned bits")


@dataclass
class ScalarStat:
    """Mean / sample std over the realizations where the value was defined."""

    mean: float | None
    std: float | None
    count: int


@dataclass
class BinStat:
    """Per-bin mean over the realizations containing the bin."""

    mean: float
    count: int


@dataclass
class AggregateStats:
    scalars: dict
    distributions: dict

    def to_json_dict(self):
        return {
            "scalars": {
                name: {"mean": st.mean, "std": st.std, "count": st.count}
                for name, st in self.scalars.items()
            },
            "distributions": {
                name: {
                    str(k): {"mean": b.mean, "count": b.count}
                    for k, b in sorted(bins.items())
                }
                for name, bins in self.distributions.items()
            },
        }


def _scalar_stat(values):
    present = [float(v) for v in values if v is not None]
    if not present:
        return ScalarStat(mean=None, std=None, count=0)
    arr = np.asarray(present)
    std = float(np.std(arr, ddof=1)) if arr.size > 1 else 0.0
    return ScalarStat(mean=float(arr.mean()), std=std, count=int(arr.size))


def aggregate(reports):
    """Fold MetricsReports into per-field means and sample standard deviations.

    Distribution bins are averaged pointwise over the realizations that
    contain the bin, with the occupancy count kept so occupancy-weighted
    (zero-filled) averages remain reconstructable.
    """
    reports = list(reports)
    if not reports:
        raise ValueError("aggregate needs at least one report")
    scalars = {
        name: _scalar_stat([getattr(rep, name) for rep in reports])
        for name in MetricsReport.SCALAR_FIELDS
    }
    distributions = {}
    for name in MetricsReport.DISTRIBUTION_FIELDS:
        bins = {}
        for rep in reports:
            for k, v in getattr(rep, name).items():
                bins.setdefault(int(k), []).append(float(v))
        distributions[name] = {
            k: BinStat(mean=float(np.mean(vals)), count=len(vals))
            for k, vals in sorted(bins.items())
        }
    return AggregateStats(scalars=scalars, distributions=distributions)


@dataclass
class SweepCell:
    """Aggregates for one (alpha, snapshot) cell; empty cells mark absence."""

    alpha: float
    snapshot: int
    n_realizations: int
    network: AggregateStats | None
    baseline: AggregateStats | None

    def to_json_dict(self):
        return {
            "alpha": self.alpha,
            "snapshot": self.snapshot,
            "n_realizations": self.n_realizations,
            "network": self.network.to_json_dict() if self.network else None,
            "baseline": self.baseline.to_json_dict() if self.baseline else None,
        }


@dataclass
class EnsembleResult:
    """All cells of one sweep plus full seed provenance."""

    spec: SweepSpec
    seed_rule: str
    cells: list
    warnings: list = field(default_factory=list)

    def cell(self, alpha, snapshot):
        alpha = float(alpha)
        snapshot = int(snapshot)
        for c in self.cells:
            if c.alpha == alpha and c.snapshot == snapshot:
                return c
        raise KeyError(f"no cell for alpha={alpha!r}, snapshot={snapshot}")

    def to_json_dict(self):
        return {
            "master_seed": self.spec.master_seed,
            "seed_rule": self.seed_rule,
            "alphas": [repr(a) for a in self.spec.alphas],
            "snapshot_nodes": list(self.spec.snapshot_nodes),
            "realizations": self.spec.realizations,
            "max_even_cap": self.spec.max_even_cap,
            "clustering": self.spec.clustering,
            "warnings": list(self.warnings),
            "cells": [c.to_json_dict() for c in self.cells],
        }


def _run_alpha_cell(spec, alpha_index, table=None):
    """All realizations and snapshot aggregates for one alpha value."""
    if table is None:
        table = build_table(spec.max_even_cap)
    alpha = spec.alphas[alpha_index]
    seeds = [realization_seed(spec.master_seed, i) for i in range(spec.realizations)]
    graphs = build_many(
        table,
        alpha,
        seeds,
        target_nodes=max(spec.snapshot_nodes),
        max_even_cap=spec.max_even_cap,
        on_exhaust="partial",
    )
    warnings = []
    per_snapshot = {si: ([], []) for si in range(len(spec.snapshot_nodes))}
    for i, g in enumerate(graphs):
        if g.exhausted:
            warnings.append(
                f"alpha={alpha!r}: realization {i} exhausted even numbers at "
                f"cap {spec.max_even_cap} with N={g.num_nodes}, M={g.num_edges}"
            )
        for si, n_star in enumerate(spec.snapshot_nodes):
            sub = g.snapshot_at(n_star)
            if sub is None:
                continue
            rep = compute_report(sub, spec.clustering)
            brep = baseline_report(
                NullModelConfig(
                    sub.num_nodes,
                    sub.num_edges,
                    baseline_seed(spec.master_seed, alpha_index, i, si),
                ),
                spec.clustering,
            )
            per_snapshot[si][0].append(rep)
            per_snapshot[si][1].append(brep)

    cells = []
    for si, n_star in enumerate(spec.snapshot_nodes):
        reps, breps = per_snapshot[si]
        if reps:
            cell = SweepCell(alpha, n_star, len(reps), aggregate(reps), aggregate(breps))
        else:
            cell = SweepCell(alpha, n_star, 0, None, None)
        cells.append(cell)
    return cells, warnings


def run_sweep(spec, workers=1):
    """Execute every (alpha, realization) build and aggregate per snapshot.

    The result is a deterministic function of ``spec`` alone: cells are
    folded in (alpha, snapshot) order whatever the execution order, and
    ``workers`` > 1 only spreads alpha cells over processes.
    """
    if workers > 1 and len(spec.alphas) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_alpha_cell, spec, ai)
                for ai in range(len(spec.alphas))
            ]
            outcomes = [f.result() for f in futures]
    else:
        table = build_table(spec.max_even_cap)
        outcomes = [
            _run_alpha_cell(spec, ai, table) for ai in range(len(spec.alphas))
        ]
    cells = []
    warnings = []
    for cell_list, warn_list in outcomes:
        cells.extend(cell_list)
        warnings.extend(warn_list)
    return EnsembleResult(spec=spec, seed_rule=SEED_RULE, cells=cells,
                          warnings=warnings)


@dataclass
class GrowthCurves:
    """Ensemble mean of the node count as a function of the link count."""

    alpha: float
    realizations: int
    master_seed: int
    m: np.ndarray
    n_mean: np.ndarray
    n_std: np.ndarray


def growth_curves(alpha, max_even, realizations, master_seed, table=None):
    """Average N(M) growth trajectories over seeded realizations.

    Driving the build by ``max_even`` gives every realization the identical
    link-count axis M = 1..(max_even - 8)/2 + 1.
    """
    if table is None:
        table = build_table(max(int(max_even), 8))
    seeds = [realization_seed(master_seed, i) for i in range(realizations)]
    graphs = build_many(table, alpha, seeds, max_even=int(max_even))
    hist = np.vstack([g.node_count_history for g in graphs]).astype(np.float64)
    n_std = (
        np.std(hist, axis=0, ddof=1) if realizations > 1
        else np.zeros(hist.shape[1])
    )
    return GrowthCurves(
        alpha=float(alpha),
        realizations=realizations,
        master_seed=int(master_seed),
        m=np.arange(1, hist.shape[1] + 1, dtype=np.int64),
        n_mean=hist.mean(axis=0),
        n_std=n_std,
    )
