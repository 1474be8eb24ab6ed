"""Entry point: gme-plots --kind <kind> --in <csv...> --out <img>."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .figures import KINDS, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gme-plots",
        description="Render figures from grover-gme CSV/JSON output files",
    )
    parser.add_argument("--kind", choices=KINDS, required=True)
    parser.add_argument(
        "--in", dest="inputs", nargs="+", required=True, metavar="CSV",
        help="input CSV files written by grover-gme",
    )
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument(
        "--labels", nargs="*", default=None, help="one legend label per input"
    )
    parser.add_argument("--title", default="")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        kind=args.kind,
        inputs=tuple(Path(p) for p in args.inputs),
        out=Path(args.out),
        labels=tuple(args.labels) if args.labels else (),
        title=args.title,
    )
    try:
        render(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def entry() -> None:
    sys.exit(main())
