"""Command-line front end: curve, turning, sweep, and profile reports.

Exit codes: 0 success, 2 invalid configuration, 3 output I/O failure,
4 dense-oracle resource limit.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from .curve import ab_profile, gme_curve, scale_invariance_sweep
from .gme import turning_summary
from .marked import MarkedSet, dicke_set, ghz_set, product_set, w_set
from .oracle import ResourceLimitError, grover_step, oracle_gme, parse_bitstrings, uniform_state
from .schedule import make_schedule

CURVE_HEADER = ["k", "ratio", "theta_k", "gme_exact", "gme_asymptotic", "alpha_star"]
SWEEP_HEADER = ["n", "b_max", "turning_theta", "final_gme"]
PROFILE_HEADER = ["alpha", "A", "B", "g"]


def _fmt(x: float | None) -> str:
    return "" if x is None else format(x, ".17g")


def _preset_marked(name: str, n: int) -> MarkedSet:
    if name == "product":
        return product_set(n)
    if name == "ghz":
        return ghz_set(n)
    if name == "w":
        return w_set(n)
    if name.startswith("dicke:"):
        return dicke_set(n, int(name.split(":", 1)[1]))
    raise ValueError(f"unknown preset {name!r}")


def _preset_family(name: str):
    return lambda n: _preset_marked(name, n)


def _parse_weights(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise ValueError(f"bad weights list {text!r}") from exc


def _parse_n_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"bad n range {text!r}; expected a..b")
    try:
        a, b = int(lo), int(hi)
    except ValueError as exc:
        raise ValueError(f"bad n range {text!r}") from exc
    if b < a:
        raise ValueError(f"empty n range {text!r}")
    return range(a, b + 1)


def _marked_from_args(args: argparse.Namespace) -> MarkedSet:
    if args.preset:
        return _preset_marked(args.preset, args.n)
    if args.weights:
        return MarkedSet.from_weights(args.n, _parse_weights(args.weights))
    raise ValueError("need --preset or --weights for this command")


def _weights_json(marked: MarkedSet) -> dict[str, int]:
    return {str(w): m for w, m in marked.weights}


def _write_rows(path: Path, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _sidecar_path(out: Path) -> Path:
    if out.suffix == ".json":
        raise ValueError(
            "delimited output should not use .json; the JSON sidecar takes that name"
        )
    return out.with_suffix(".json")


def _write_sidecar(path: Path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _oracle_curve_rows(args: argparse.Namespace) -> tuple[MarkedSet, list[list[str]], float]:
    n = args.n
    if args.bits:
        indices = parse_bitstrings(n, args.bits.split(","))
    else:
        indices = _marked_from_args(args).basis_indices()
    marked = MarkedSet.from_weights(n, [bin(i).count("1") for i in indices])
    sched = make_schedule(marked)
    rows = []
    peak = 0.0
    state = uniform_state(n)
    for k in range(sched.k_opt + 1):
        if k > 0:
            state = grover_step(state, indices)
        result = oracle_gme(state, seed=args.seed)
        peak = max(peak, result.gme)
        rows.append(
            [
                str(k),
                _fmt(sched.ratio(k)),
                _fmt(sched.theta_k(k)),
                _fmt(result.gme),
                "",
                "",
            ]
        )
    return marked, rows, peak


def cmd_curve(args: argparse.Namespace) -> int:
    out = Path(args.out)
    sidecar = _sidecar_path(out) if args.format == "json" else None
    if args.mode == "oracle":
        marked, rows, peak = _oracle_curve_rows(args)
        sched = make_schedule(marked)
    else:
        if args.bits:
            raise ValueError("explicit bitstrings need --mode oracle")
        marked = _marked_from_args(args)
        curve = gme_curve(marked, args.mode)
        sched = curve.schedule
        peak = curve.peak_gme
        rows = [
            [
                str(p.k),
                _fmt(p.ratio),
                _fmt(p.theta_k),
                _fmt(p.gme_exact),
                _fmt(p.gme_asymptotic),
                _fmt(p.alpha_star),
            ]
            for p in curve.points
        ]
    _write_rows(out, CURVE_HEADER, rows)
    if sidecar is not None:
        turning = turning_summary(marked)
        _write_sidecar(
            sidecar,
            {
                "n": marked.n,
                "weights": _weights_json(marked),
                "k_opt": sched.k_opt,
                "theta": sched.theta,
                "turning_theta": turning.theta,
                "turning_k_ratio": turning.ratio,
                "peak_gme": peak,
                "mode": args.mode,
            },
        )
    return 0


def cmd_turning(args: argparse.Namespace) -> int:
    marked = _marked_from_args(args)
    turning = turning_summary(marked)
    print(f"n: {marked.n}")
    print(f"weights: {dict(marked.weights)}")
    print(f"b_max: {_fmt(turning.b_max)}")
    print(f"alpha_star: {_fmt(turning.alpha_star)}")
    print(f"turning_theta: {_fmt(turning.theta)}")
    print(f"turning_k_ratio: {_fmt(turning.ratio)}")
    print(f"peak_gme_asymptotic: {_fmt(turning.peak_gme)}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    out = Path(args.out)
    sidecar = _sidecar_path(out) if args.format == "json" else None
    ns = _parse_n_range(args.n_range)
    if args.preset:
        family = _preset_family(args.preset)
    elif args.weights:
        weights = _parse_weights(args.weights)
        family = lambda n: MarkedSet.from_weights(n, weights)
    else:
        raise ValueError("need --preset or --weights for sweep")
    report = scale_invariance_sweep(family, ns)
    rows = [
        [str(r.n), _fmt(r.b_max), _fmt(r.turning_theta), _fmt(r.final_gme)]
        for r in report.rows
    ]
    _write_rows(out, SWEEP_HEADER, rows)
    verdict = "true" if report.scale_invariant else "false"
    print(f"scale_invariant: {verdict}")
    if sidecar is not None:
        _write_sidecar(
            sidecar,
            {
                "n_range": [ns.start, ns.stop - 1],
                "preset": args.preset,
                "weights": args.weights,
                "tolerance": report.tolerance,
                "b_max_spread": report.b_max_spread,
                "final_gme_spread": report.final_gme_spread,
                "scale_invariant": report.scale_invariant,
            },
        )
    return 0


def cmd_profile(args: argparse.Namespace) -> int:
    out = Path(args.out)
    marked = _marked_from_args(args)
    table = ab_profile(marked, args.grid)
    rows = [
        [_fmt(a), _fmt(va), _fmt(vb), _fmt(vg)]
        for a, va, vb, vg in zip(table.alpha, table.a, table.b, table.g)
    ]
    _write_rows(out, PROFILE_HEADER, rows)
    return 0


def _add_marked_options(parser: argparse.ArgumentParser, bits: bool = False) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of qubits")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--preset", help="marked-set preset: product | ghz | w | dicke:<w>"
    )
    group.add_argument("--weights", help="explicit weight multiset, e.g. 0,3,3")
    if bits:
        group.add_argument(
            "--bits", help="explicit marked bitstrings (oracle mode), e.g. 0001,0010"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grover-gme",
        description="Entanglement dynamics of Grover-search iterates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_curve = sub.add_parser("curve", help="entanglement at every iterate")
    _add_marked_options(p_curve, bits=True)
    p_curve.add_argument(
        "--mode",
        choices=["exact", "asymptotic", "both", "oracle"],
        default="both",
    )
    p_curve.add_argument("--out", required=True, help="output CSV path")
    p_curve.add_argument("--format", choices=["csv", "json"], default="csv")
    p_curve.add_argument("--seed", type=int, default=0, help="oracle start seed")
    p_curve.set_defaults(func=cmd_curve)

    p_turn = sub.add_parser("turning", help="turning point summary on stdout")
    _add_marked_options(p_turn)
    p_turn.set_defaults(func=cmd_turning)

    p_sweep = sub.add_parser("sweep", help="scale-invariance sweep over n")
    p_sweep.add_argument("--n-range", required=True, help="inclusive range a..b")
    group = p_sweep.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset")
    group.add_argument("--weights")
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_prof = sub.add_parser("profile", help="A/B/g profile over alpha")
    _add_marked_options(p_prof)
    # odd count keeps alpha = pi/2 on the grid exactly
    p_prof.add_argument("--grid", type=int, default=2049)
    p_prof.add_argument("--out", required=True)
    p_prof.set_defaults(func=cmd_profile)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())
