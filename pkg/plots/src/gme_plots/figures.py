"""Figure builders over the grover-gme CLI's CSV and JSON files.

Every plotted number is read from the files; nothing is recomputed here, so a
figure is an audit of the artifact that produced it, not a second opinion.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure

CURVE_HEADER = ["k", "ratio", "theta_k", "gme_exact", "gme_asymptotic", "alpha_star"]
PROFILE_HEADER = ["alpha", "A", "B", "g"]
KINDS = ("profile", "curve-overlay", "exact-vs-asymptotic")

PI = 3.141592653589793


class InputError(ValueError):
    """An input file is missing or not in the format its kind expects."""


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    inputs: tuple[Path, ...]
    out: Path
    labels: tuple[str, ...] = ()
    title: str = ""


@dataclass(frozen=True)
class CurveSeries:
    label: str
    ratio: list[float]
    exact: list[float | None]
    asymptotic: list[float | None]
    turning_ratio: float | None

    @property
    def gme(self) -> list[float]:
        out = []
        for e, a in zip(self.exact, self.asymptotic):
            out.append(e if e is not None else a)
        return out


@dataclass(frozen=True)
class ProfileSeries:
    label: str
    alpha: list[float]
    a: list[float]
    b: list[float]
    g: list[float]


def _read_rows(path: Path, header: list[str]) -> list[list[str]]:
    if not path.is_file():
        raise InputError(f"{path}: no such file")
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise InputError(f"{path}: empty file")
    if rows[0] != header:
        raise InputError(f"{path}: unexpected header {rows[0]!r}")
    if len(rows) == 1:
        raise InputError(f"{path}: no data rows")
    return rows[1:]


def _cell(path: Path, row: list[str], idx: int) -> float | None:
    if idx >= len(row) or row[idx] == "":
        return None
    try:
        return float(row[idx])
    except ValueError as exc:
        raise InputError(f"{path}: bad value {row[idx]!r}") from exc


def _need(path: Path, row: list[str], idx: int) -> float:
    v = _cell(path, row, idx)
    if v is None:
        raise InputError(f"{path}: missing value in column {idx}")
    return v


def _sidecar_turning(path: Path) -> float | None:
    side = path.with_suffix(".json")
    if not side.is_file():
        return None
    try:
        payload = json.loads(side.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{side}: malformed JSON") from exc
    value = payload.get("turning_k_ratio") if isinstance(payload, dict) else None
    return float(value) if isinstance(value, (int, float)) else None


def load_curve(path: Path, label: str) -> CurveSeries:
    rows = _read_rows(path, CURVE_HEADER)
    ratio = [_need(path, r, 1) for r in rows]
    exact = [_cell(path, r, 3) for r in rows]
    asym = [_cell(path, r, 4) for r in rows]
    for e, a in zip(exact, asym):
        if e is None and a is None:
            raise InputError(f"{path}: row with neither exact nor asymptotic value")
    return CurveSeries(label, ratio, exact, asym, _sidecar_turning(path))


def load_profile(path: Path, label: str) -> ProfileSeries:
    rows = _read_rows(path, PROFILE_HEADER)
    return ProfileSeries(
        label,
        [_need(path, r, 0) for r in rows],
        [_need(path, r, 1) for r in rows],
        [_need(path, r, 2) for r in rows],
        [_need(path, r, 3) for r in rows],
    )


def _labels(spec: FigureSpec) -> list[str]:
    if spec.labels:
        if len(spec.labels) != len(spec.inputs):
            raise InputError(
                f"{len(spec.labels)} labels for {len(spec.inputs)} input files"
            )
        return list(spec.labels)
    return [p.stem for p in spec.inputs]


def _mark_turnings(ax, ratios: list[float]) -> None:
    seen = []
    for r in ratios:
        if r is not None and r not in seen:
            seen.append(r)
            ax.axvline(r, linestyle="--", linewidth=1.0, color="0.4")


def build_figure(spec: FigureSpec) -> Figure:
    if spec.kind not in KINDS:
        raise InputError(f"unknown figure kind {spec.kind!r}")
    if not spec.inputs:
        raise InputError("no input files")
    labels = _labels(spec)
    fig = Figure(figsize=(6.4, 4.8), dpi=150)
    ax = fig.subplots()

    if spec.kind == "profile":
        for path, label in zip(spec.inputs, labels):
            series = load_profile(path, label)
            suffix = f" {label}" if len(spec.inputs) > 1 else ""
            ax.plot(series.alpha, series.a, label="A" + suffix)
            ax.plot(series.alpha, series.b, label="B" + suffix)
            ax.plot(series.alpha, series.g, label="g" + suffix)
        ax.set_xlim(0.0, PI)
        ax.set_ylim(bottom=0.0)
        ax.set_xlabel("alpha")
        ax.set_ylabel("profile value")
    elif spec.kind == "curve-overlay":
        curves = [load_curve(p, lab) for p, lab in zip(spec.inputs, labels)]
        for series in curves:
            ax.plot(series.ratio, series.gme, label=series.label, linewidth=1.5)
        _mark_turnings(ax, [s.turning_ratio for s in curves])
        ax.set_xlim(0.0, 1.0)
        ax.set_ylim(0.0, 1.0)
        ax.set_xlabel("k / k_opt")
        ax.set_ylabel("GME")
    else:
        if len(spec.inputs) != 1:
            raise InputError("exact-vs-asymptotic takes exactly one input file")
        series = load_curve(spec.inputs[0], labels[0])
        if any(v is None for v in series.exact) or any(
            v is None for v in series.asymptotic
        ):
            raise InputError(
                f"{spec.inputs[0]}: needs both exact and asymptotic columns"
            )
        ax.plot(series.ratio, series.exact, label="exact", linewidth=1.5)
        ax.plot(
            series.ratio, series.asymptotic, label="asymptotic",
            linewidth=1.5, linestyle=":",
        )
        _mark_turnings(ax, [series.turning_ratio])
        ax.set_xlim(0.0, 1.0)
        ax.set_ylim(0.0, 1.0)
        ax.set_xlabel("k / k_opt")
        ax.set_ylabel("GME")

    if spec.title:
        ax.set_title(spec.title)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best")
    return fig


def render(spec: FigureSpec) -> Path:
    fig = build_figure(spec)
    fig.savefig(spec.out)
    return spec.out
