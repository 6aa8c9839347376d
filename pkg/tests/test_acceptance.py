"""Acceptance suite: one test per criterion, at the stated tolerances.

The statistical criteria run 20-realization ensembles at their stated node
counts; session fixtures share the heavy sweeps between criteria. The
terminal summary prints one PASS/FAIL line per criterion (conftest hook).
"""

import json
import math

import numpy as np
import pytest

from goldbachnet import (
    BuildConfig,
    build,
    build_many,
    decompose,
    degree_stats,
    growth_curves,
    realization_seed,
    run_sweep,
    select_pair,
    shortest_distance_stats,
    clustering,
    SweepSpec,
)
from goldbachnet.cli import main as cli_main

from oracles import (
    TinyGraph,
    brute_force_pairs,
    floyd_warshall_stats,
    newman_r,
    per_node_clustering,
    random_small_graph,
    trial_division_primes,
)

MASTER_SEED = 20260808
SNAPSHOTS = (250, 500, 1000, 2000, 4000)
ALPHA_GRID = (0.0, -1.0, -1.4, -1.8, -2.1, -2.5)


def _r_squared(x, y):
    coeffs = np.polyfit(x, y, 1)
    resid = y - np.polyval(coeffs, x)
    return 1 - np.sum(resid**2) / np.sum((y - np.mean(y)) ** 2)


@pytest.fixture(scope="session")
def grid_sweep():
    spec = SweepSpec(alphas=ALPHA_GRID, snapshot_nodes=SNAPSHOTS,
                     realizations=20, master_seed=MASTER_SEED,
                     max_even_cap=1_000_000)
    return run_sweep(spec, workers=2)


@pytest.fixture(scope="session")
def pm1_sweep():
    spec = SweepSpec(alphas=(-1.0, 1.0), snapshot_nodes=(5000,),
                     realizations=20, master_seed=MASTER_SEED,
                     max_even_cap=1_000_000)
    return run_sweep(spec, workers=2)


@pytest.fixture(scope="session")
def alpha2_sweep():
    spec = SweepSpec(alphas=(2.0,), snapshot_nodes=(1000, 4000),
                     realizations=20, master_seed=MASTER_SEED,
                     max_even_cap=1_000_000)
    return run_sweep(spec)


def test_criterion_01_exactness(table_30k):
    g = build(BuildConfig(alpha=0.0, seed=MASTER_SEED, max_even=10_000),
              table_30k)
    assert g.num_edges == 4997  # one link per even number in [8, 10^4]
    assert np.array_equal(g.edge_even, np.arange(8, 10_001, 2))
    assert (g.edge_p + g.edge_q == g.edge_even).all()
    assert (g.edge_p < g.edge_q).all()
    assert table_30k.is_prime_array(g.edge_p).all()
    assert table_30k.is_prime_array(g.edge_q).all()
    keys = g.edge_p * 10**9 + g.edge_q
    assert np.unique(keys).size == g.num_edges  # simple graph


def test_criterion_02_oracle_equivalence(table_30k):
    prime_set = set(trial_division_primes(10_000))
    for n in range(8, 10_001, 2):
        d = decompose(table_30k, n)
        assert (
            list(zip(d.p.tolist(), d.q.tolist(), d.delta.tolist()))
            == brute_force_pairs(n, prime_set)
        ), f"decomposition mismatch at n={n}"

    rng = np.random.default_rng(MASTER_SEED)
    for _ in range(1000):
        n, edges = random_small_graph(rng)
        g = TinyGraph(n, edges)
        d, p_of_j, rf, giant = shortest_distance_stats(g)
        d_o, p_o, rf_o, giant_o = floyd_warshall_stats(n, edges)
        assert d == pytest.approx(d_o, abs=1e-12)
        assert set(p_of_j) == set(p_o)
        for j in p_o:
            assert p_of_j[j] == pytest.approx(p_o[j], abs=1e-12)
        assert (rf, giant) == (pytest.approx(rf_o), giant_o)
        c, _ = clustering(g)
        assert c == pytest.approx(per_node_clustering(n, edges).mean(),
                                  abs=1e-12)


def test_criterion_03_selection_law(table_2k):
    d = decompose(table_2k, 24)
    rng = np.random.default_rng(MASTER_SEED)
    trials = 100_000
    counts = {5: 0, 7: 0, 11: 0}
    for u in rng.random(trials):
        counts[select_pair(d, 1.0, float(u)).p] += 1
    for p, prob in ((5, 14 / 26), (7, 10 / 26), (11, 2 / 26)):
        sigma = math.sqrt(prob * (1 - prob) / trials)
        observed = counts[p] / trials
        assert abs(observed - prob) < 3 * sigma, (
            f"pair starting at {p}: observed {observed:.5f}, "
            f"expected {prob:.5f} +- {3 * sigma:.5f}"
        )


def test_criterion_04_small_world_scaling(grid_sweep):
    d_means = np.array(
        [grid_sweep.cell(0.0, s).network.scalars["d"].mean for s in SNAPSHOTS]
    )
    r2_log = _r_squared(np.log(SNAPSHOTS), d_means)
    assert r2_log >= 0.97, f"R^2(d vs ln N) = {r2_log:.4f}"
    for s in SNAPSHOTS:
        cell = grid_sweep.cell(0.0, s)
        c = cell.network.scalars["C"].mean
        c_prime = cell.baseline.scalars["C"].mean
        assert c > c_prime, f"N={s}: C={c:.5f} <= C'={c_prime:.5f}"


def test_criterion_05_regular_regime_scaling(grid_sweep):
    d_means = np.array(
        [grid_sweep.cell(-2.5, s).network.scalars["d"].mean for s in SNAPSHOTS]
    )
    r2_linear = _r_squared(np.array(SNAPSHOTS, dtype=float), d_means)
    r2_log = _r_squared(np.log(SNAPSHOTS), d_means)
    assert r2_linear > r2_log, (
        f"d(-2.5) vs N: R^2(linear)={r2_linear:.4f} <= R^2(log)={r2_log:.4f}; "
        f"d={d_means.round(3).tolist()}"
    )
    d_reg = grid_sweep.cell(-2.5, 4000).network.scalars["d"].mean
    d_sw = grid_sweep.cell(0.0, 4000).network.scalars["d"].mean
    assert d_reg >= 3 * d_sw, (
        f"d(-2.5, 4000)={d_reg:.3f} < 3 * d(0, 4000)={3 * d_sw:.3f}"
    )


def test_criterion_06_transition_location(grid_sweep):
    order = (-2.5, -2.1, -1.8, -1.4, -1.0, 0.0)
    d_values = [grid_sweep.cell(a, 4000).network.scalars["d"].mean
                for a in order]
    for (a1, d1), (a2, d2) in zip(zip(order, d_values),
                                  zip(order[1:], d_values[1:])):
        assert d1 >= d2, f"d({a1})={d1:.3f} < d({a2})={d2:.3f}: not monotone"
    jumps = {
        (order[i], order[i + 1]): d_values[i] - d_values[i + 1]
        for i in range(len(order) - 1)
    }
    largest = max(jumps, key=jumps.get)
    assert largest in {(-2.1, -1.8), (-1.8, -1.4)}, (
        f"largest jump {jumps[largest]:.3f} at {largest}, "
        f"outside the (-2.1, -1.4) bracket; jumps="
        + ", ".join(f"{k}: {v:.3f}" for k, v in jumps.items())
    )


def test_criterion_07_assortativity_sign_flip(pm1_sweep):
    r_neg = pm1_sweep.cell(-1.0, 5000).network.scalars["r"]
    r_pos = pm1_sweep.cell(1.0, 5000).network.scalars["r"]
    assert r_neg.mean > r_neg.std, (
        f"r(alpha=-1) = {r_neg.mean:+.4f} +- {r_neg.std:.4f}: "
        "not positive by more than one std-dev"
    )
    assert r_pos.mean < -r_pos.std, (
        f"r(alpha=+1) = {r_pos.mean:+.4f} +- {r_pos.std:.4f}: "
        "not negative by more than one std-dev"
    )


def test_criterion_08_hub_growth(alpha2_sweep, grid_sweep):
    km_1000 = alpha2_sweep.cell(2.0, 1000).network.scalars["k_max"].mean
    km_4000 = alpha2_sweep.cell(2.0, 4000).network.scalars["k_max"].mean
    assert km_4000 / km_1000 >= 2, (
        f"alpha=2: k_m(4000)={km_4000:.1f} / k_m(1000)={km_1000:.1f} "
        f"= {km_4000 / km_1000:.2f} < 2"
    )
    cell = grid_sweep.cell(-2.5, 4000)
    km = cell.network.scalars["k_max"].mean
    mean_k = cell.network.scalars["mean_k"].mean
    assert km <= 3 * mean_k, (
        f"alpha=-2.5: k_m={km:.1f} > 3 * <k>={3 * mean_k:.1f}"
    )


def test_criterion_09_growth_curves():
    fast = growth_curves(2.0, 10_000, realizations=20, master_seed=MASTER_SEED)
    slow = growth_curves(-2.0, 10_000, realizations=20, master_seed=MASTER_SEED)
    mask = fast.m >= 100
    below = int(np.sum(fast.n_mean[mask] < slow.n_mean[mask]))
    assert below == 0, f"N(M | alpha=2) < N(M | alpha=-2) at {below} points"


def test_criterion_10_connectivity_discontinuity(table_1m):
    stats = {}
    for alpha in (-2.5, 0.0):
        seeds = [realization_seed(MASTER_SEED, i) for i in range(20)]
        graphs = build_many(table_1m, alpha, seeds, target_nodes=5000,
                            max_even_cap=1_000_000, on_exhaust="partial")
        per = [degree_stats(g.snapshot_at(5000)) for g in graphs]
        stats[alpha] = (
            float(np.mean([s[1] for s in per])),
            float(np.mean([s[2] for s in per])),
        )
    mean_k_reg, f_k_reg = stats[-2.5]
    mean_k_sw, f_k_sw = stats[0.0]
    assert mean_k_reg > mean_k_sw, (
        f"<k>(-2.5)={mean_k_reg:.2f} <= <k>(0)={mean_k_sw:.2f}"
    )
    assert f_k_sw > f_k_reg, (
        f"f(k)(0)={f_k_sw:.2f} <= f(k)(-2.5)={f_k_reg:.2f}"
    )


def _artifact_digests(out_dir):
    manifest = json.loads((out_dir / "manifest.json").read_text())
    return {a["path"]: a["sha256"] for a in manifest["artifacts"]}


def test_criterion_11_reproducibility(tmp_path):
    commands = {
        "build": ["build", "--alpha", "1.5", "--target-nodes", "150",
                  "--seed", "42"],
        "sweep": ["sweep", "--alphas", "0,-1.8", "--snapshots", "60,90",
                  "--realizations", "3", "--seed", "42",
                  "--max-even-cap", "20000", "--format", "csv"],
        "figure": ["figure", "6", "--alphas", "2,-2", "--max-even", "600",
                   "--realizations", "3", "--seed", "42"],
    }
    for name, argv in commands.items():
        digests = []
        contents = []
        for run in ("a", "b"):
            out = tmp_path / name / run
            rc = cli_main(argv + ["--out", str(out)])
            assert rc == 0
            digests.append(_artifact_digests(out))
            contents.append(
                {
                    path: (out / path).read_bytes()
                    for path in digests[-1]
                }
            )
        assert digests[0] == digests[1], f"{name}: digests differ between reruns"
        assert contents[0] == contents[1], f"{name}: artifact bytes differ"
