"""Command-line front end.

Three subcommands: ``build`` constructs one network and reports its
statistics, ``sweep`` runs a seeded ensemble over an alpha grid, and
``figure`` emits the CSV dataset of one numbered preset. Every run writes
a manifest listing each artifact with its SHA-256 digest; identical
invocations with the same seed produce byte-identical artifacts.

Exit codes: 0 success, 2 flag or configuration error, 3 runtime error
(for example an unreachable node-count target).
"""

import argparse
import hashlib
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from .errors import GoldbachNetError
from .ensemble import SweepSpec, run_sweep
from .figures import DEFAULT_MAX_EVEN_CAP, figure_tables
from .metrics import compute_report
from .netbuild import BuildConfig, build
from .primes import build_table


def _parse_alpha(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if math.isnan(value):
        raise argparse.ArgumentTypeError("alpha must not be NaN")
    return value


def _parse_alpha_list(text):
    return tuple(_parse_alpha(part) for part in text.split(",") if part)


def _parse_int_list(text):
    try:
        return tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _fmt_cell(value):
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))  # shortest round-trip decimal form


def write_csv(path, header, rows):
    lines = [",".join(str(h) for h in header)]
    lines.extend(",".join(_fmt_cell(c) for c in row) for row in rows)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _write_json(path, doc):
    Path(path).write_text(
        json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def _sha256(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _write_manifest(out_dir, argv, config, master_seed, artifacts, started):
    doc = {
        "command": ["goldbachnet"] + list(argv),
        "config": config,
        "master_seed": int(master_seed),
        "artifacts": [
            {
                "path": str(rel),
                "sha256": _sha256(out_dir / rel),
                "bytes": (out_dir / rel).stat().st_size,
            }
            for rel in sorted(artifacts)
        ],
        "duration_seconds": round(time.time() - started, 3),
    }
    _write_json(out_dir / "manifest.json", doc)


def _cmd_build(args, argv):
    started = time.time()
    if (args.max_even is None) == (args.target_nodes is None):
        raise ValueError("set exactly one of --max-even / --target-nodes")
    cfg = BuildConfig(
        alpha=args.alpha,
        seed=args.seed,
        max_even=args.max_even,
        target_nodes=args.target_nodes,
    )
    limit = args.max_even if args.max_even is not None else args.max_even_cap
    table = build_table(limit)
    graph = build(cfg, table)
    report = compute_report(graph, args.clustering)

    out = Path(args.out)
    (out / "edges").mkdir(parents=True, exist_ok=True)
    (out / "distributions").mkdir(exist_ok=True)
    artifacts = []

    graph.write_edge_list(out / "edges" / "graph.txt")
    artifacts.append(Path("edges") / "graph.txt")

    doc = {"alpha": repr(cfg.alpha), "seed": cfg.seed}
    doc.update(report.to_dict())
    _write_json(out / "report.json", doc)
    artifacts.append(Path("report.json"))

    for name, x_name in (("p_of_j", "j"), ("P_of_k", "k"), ("C_by_degree", "k")):
        rel = Path("distributions") / f"{name}.csv"
        write_csv(out / rel, [x_name, name], report.distribution_csv_rows(name))
        artifacts.append(rel)

    config = {
        "alpha": repr(cfg.alpha),
        "max_even": args.max_even,
        "target_nodes": args.target_nodes,
        "max_even_cap": args.max_even_cap,
        "seed": args.seed,
        "clustering": args.clustering,
        "distance_scope": args.distance_scope,
        "out": str(out),
    }
    _write_manifest(out, argv, config, args.seed, artifacts, started)
    r_text = "undefined" if report.r is None else f"{report.r:.6g}"
    print(
        f"N={report.n_nodes} M={report.n_edges} d={report.d:.6g} "
        f"C={report.C:.6g} r={r_text}"
    )
    return 0


def _sweep_spec(args):
    return SweepSpec(
        alphas=args.alphas,
        snapshot_nodes=args.snapshots,
        realizations=args.realizations,
        master_seed=args.seed,
        max_even_cap=args.max_even_cap,
        clustering=args.clustering,
    )


def _cells_csv_rows(result):
    rows = []
    for cell in result.cells:
        for side in ("network", "baseline"):
            agg = getattr(cell, side)
            if agg is None:
                continue
            for field, st in agg.scalars.items():
                rows.append(
                    [
                        f"{cell.alpha:g}",
                        cell.snapshot,
                        side,
                        field,
                        st.mean,
                        st.std,
                        st.count,
                    ]
                )
    return rows


def _cmd_sweep(args, argv):
    started = time.time()
    spec = _sweep_spec(args)
    result = run_sweep(spec, workers=args.workers)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    artifacts = [Path("sweep.json")]
    _write_json(out / "sweep.json", result.to_json_dict())
    if args.format == "csv":
        write_csv(
            out / "cells.csv",
            ["alpha", "snapshot", "side", "field", "mean", "std", "count"],
            _cells_csv_rows(result),
        )
        artifacts.append(Path("cells.csv"))

    config = {
        "alphas": [repr(a) for a in spec.alphas],
        "snapshots": list(spec.snapshot_nodes),
        "realizations": spec.realizations,
        "max_even_cap": spec.max_even_cap,
        "seed": spec.master_seed,
        "clustering": spec.clustering,
        "distance_scope": args.distance_scope,
        "format": args.format,
        "out": str(out),
    }
    _write_manifest(out, argv, config, spec.master_seed, artifacts, started)
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(f"cells={len(result.cells)} warnings={len(result.warnings)}")
    return 0


def _cmd_figure(args, argv):
    started = time.time()
    tables = figure_tables(
        args.figure_id,
        alphas=args.alphas,
        snapshots=args.snapshots,
        realizations=args.realizations,
        master_seed=args.seed,
        max_even=args.max_even,
        max_even_cap=args.max_even_cap,
        clustering=args.clustering,
        workers=args.workers,
    )
    out = Path(args.out)
    fig_dir = out / f"fig{args.figure_id}"
    fig_dir.mkdir(parents=True, exist_ok=True)
    artifacts = []
    for stem, table in sorted(tables.items()):
        rel = Path(f"fig{args.figure_id}") / f"{stem}.csv"
        write_csv(out / rel, table.header, table.rows)
        artifacts.append(rel)

    config = {
        "figure": args.figure_id,
        "alphas": None if args.alphas is None else [repr(a) for a in args.alphas],
        "snapshots": None if args.snapshots is None else list(args.snapshots),
        "realizations": args.realizations,
        "max_even": args.max_even,
        "max_even_cap": args.max_even_cap,
        "seed": args.seed,
        "clustering": args.clustering,
        "out": str(out),
    }
    _write_manifest(out, argv, config, args.seed, artifacts, started)
    print(f"fig{args.figure_id}: " + ", ".join(sorted(tables)))
    return 0


def _add_common(parser):
    parser.add_argument("--seed", type=int, default=1,
                        help="master seed (default 1)")
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument("--clustering", choices=["standard", "paper"],
                        default="standard",
                        help="neighbor-pair denominator: k(k-1)/2 or k(k+1)/2")
    parser.add_argument("--distance-scope", choices=["reachable"],
                        default="reachable",
                        help="distance averages cover reachable pairs only")
    parser.add_argument("--max-even-cap", type=int, default=DEFAULT_MAX_EVEN_CAP,
                        help="largest even number a build may consume")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="goldbachnet",
        description="Prime-pair networks: build, measure, sweep, export.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_build = sub.add_parser("build", help="build one network and report it")
    p_build.add_argument("--alpha", type=_parse_alpha, required=True,
                         help="spread exponent (float, +inf or -inf)")
    p_build.add_argument("--max-even", type=int)
    p_build.add_argument("--target-nodes", type=int)
    _add_common(p_build)
    p_build.set_defaults(handler=_cmd_build)

    p_sweep = sub.add_parser("sweep", help="seeded ensemble over an alpha grid")
    p_sweep.add_argument("--alphas", type=_parse_alpha_list, required=True,
                         help="comma-separated alphas, e.g. 0,-1.8,+inf")
    p_sweep.add_argument("--snapshots", type=_parse_int_list, required=True,
                         help="comma-separated node-count checkpoints")
    p_sweep.add_argument("--realizations", type=int, default=20)
    p_sweep.add_argument("--format", choices=["json", "csv"], default="json")
    p_sweep.add_argument("--workers", type=int, default=1)
    _add_common(p_sweep)
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_fig = sub.add_parser("figure", help="emit the dataset of one preset (1-10)")
    p_fig.add_argument("figure_id", type=int, choices=range(1, 11),
                       metavar="figure_id")
    p_fig.add_argument("--alphas", type=_parse_alpha_list)
    p_fig.add_argument("--snapshots", type=_parse_int_list)
    p_fig.add_argument("--realizations", type=int)
    p_fig.add_argument("--max-even", type=int,
                       help="growth preset only: evens consumed per build")
    p_fig.add_argument("--workers", type=int, default=1)
    _add_common(p_fig)
    p_fig.set_defaults(handler=_cmd_figure)
    return parser


_NEGATIVE_VALUE_FLAGS = ("--alpha", "--alphas")


def _merge_negative_values(argv):
    """Rewrite ["--alpha", "-inf"] as ["--alpha=-inf"].

    argparse would otherwise read a leading "-" value as an option name.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok in _NEGATIVE_VALUE_FLAGS and i + 1 < len(argv)
                and argv[i + 1].startswith("-")):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = make_parser()
    args = parser.parse_args(_merge_negative_values(argv))
    try:
        return args.handler(args, argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GoldbachNetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
