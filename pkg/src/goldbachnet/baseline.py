"""Uniform G(N, M) null model matched to a measured graph."""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InfeasibleNullModel
from .metrics import compute_report


@dataclass(frozen=True)
class NullModelConfig:
    """Node count, edge count and seed of one null-model sample."""

    n_nodes: int
    m_edges: int
    seed: int

    def __post_init__(self):
        if self.n_nodes < 2:
            raise ValueError(f"need at least 2 nodes, got {self.n_nodes}")
        max_edges = self.n_nodes * (self.n_nodes - 1) // 2
        if not 0 <= self.m_edges <= max_edges:
            raise InfeasibleNullModel(
                f"m_edges={self.m_edges} outside [0, {max_edges}] "
                f"for {self.n_nodes} nodes"
            )
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


class GnmGraph:
    """Uniform simple graph on nodes 0..n-1; isolated nodes are kept."""

    __slots__ = ("n_nodes_", "edge_u", "edge_v", "seed", "_labels")

    def __init__(self, n_nodes, edge_u, edge_v, seed):
        self.n_nodes_ = int(n_nodes)
        self.edge_u = edge_u
        self.edge_v = edge_v
        self.seed = int(seed)
        self._labels = None

    def __repr__(self):
        return f"GnmGraph(N={self.num_nodes}, M={self.num_edges}, seed={self.seed})"

    @property
    def num_nodes(self):
        return self.n_nodes_

    @property
    def num_edges(self):
        return int(self.edge_u.size)

    @property
    def node_labels(self):
        if self._labels is None:
            self._labels = np.arange(self.n_nodes_, dtype=np.int64)
        return self._labels

    def edge_endpoints(self):
        return self.edge_u, self.edge_v

    def write_edge_list(self, path):
        """Same plain-text layout as the prime network, tagged "gnm".

        Null-model edges have no originating even number, so lines carry
        the two endpoints only.
        """
        lines = [f"# gnm seed={self.seed} M={self.num_edges} N={self.num_nodes}"]
        lines.extend(
            f"{u} {v}" for u, v in zip(self.edge_u.tolist(), self.edge_v.tolist())
        )
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def sample_gnm(cfg):
    """Draw a uniform simple graph with exactly the configured counts.

    Rejection sampling over unordered pairs: candidate pairs stream from
    the seeded generator and the first m distinct ones are kept, which is
    exactly uniform over M-edge simple graphs. M is far below N**2/2 in
    every use here, so rejection stays cheap.
    """
    n, m = cfg.n_nodes, cfg.m_edges
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(cfg.seed))))
    seen = set()
    us = []
    vs = []
    while len(us) < m:
        k = max(256, 4 * (m - len(us)))
        a = rng.integers(0, n, size=k)
        b = rng.integers(0, n, size=k)
        for x, y in zip(a.tolist(), b.tolist()):
            if x == y:
                continue
            if x > y:
                x, y = y, x
            key = x * n + y
            if key in seen:
                continue
            seen.add(key)
            us.append(x)
            vs.append(y)
            if len(us) == m:
                break
    return GnmGraph(n, np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64),
                    cfg.seed)


def baseline_report(cfg, clustering_convention="standard"):
    """Metrics of one sampled null graph, in the same report type."""
    return compute_report(sample_gnm(cfg), clustering_convention)
