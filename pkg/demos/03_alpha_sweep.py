#!/usr/bin/env python3
# Seeded ensemble sweep: several alphas, several node checkpoints,
# mean +- std over realizations, with a matched null model per cell.

from goldbachnet import SweepSpec, run_sweep

spec = SweepSpec(
    alphas=(1.0, 0.0, -1.8, -2.5),
    snapshot_nodes=(300, 600, 1200),
    realizations=5,
    master_seed=99,
    max_even_cap=200_000,
)
result = run_sweep(spec)

print("seed rule:", result.seed_rule)
print(f"\n{'alpha':>6} {'N*':>5} {'runs':>4} {'d':>14} {'C':>16} {'d_rand':>8}")
for cell in result.cells:
    net = cell.network.scalars
    base = cell.baseline.scalars
    print(f"{cell.alpha:>6g} {cell.snapshot:>5} {cell.n_realizations:>4} "
          f"{net['d'].mean:>8.3f} +-{net['d'].std:<4.2f} "
          f"{net['C'].mean:>10.5f} +-{net['C'].std:<7.5f}"
          f"{base['d'].mean:>8.3f}")

# Every cell also carries full distributions: p(j), P(k), C(k).
cell = result.cell(0.0, 1200)
p_of_j = cell.network.distributions["p_of_j"]
print("\ndistance distribution at alpha=0, N*=1200:")
for j, stat in sorted(p_of_j.items()):
    print(f"  j={j}: p={stat.mean:.4f}  (in {stat.count} runs)")
