"""Render the three bound-comparison plots from qlrc CSV output.

This package only draws what the CSV already contains: one labeled
curve per non-empty bound column, blank cells breaking the curve.  No
bound is recomputed here.  For the asymptotic figures (ids 2 and 3)
pairwise curve crossings can be annotated, located by linear
interpolation between adjacent grid points.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

# CSV column -> legend label (the bound identifiers)
BOUND_LABELS = {
    "gg": "gg-singleton",
    "singleton": "pure-singleton",
    "griesmer": "pure-griesmer",
    "plotkin": "pure-plotkin",
    "sp": "pure-sphere-packing",
}

FIGURE_AXES = {
    1: ("n", "kappa", "kappa_"),
    2: ("delta", "rate", "r_"),
    3: ("delta", "rate", "r_"),
}


class RenderError(Exception):
    pass


@dataclass
class FigureSpec:
    csv_path: str
    figure_id: int
    out_path: str
    annotate_crossings: bool = False
    title: str | None = None
    x_label: str | None = None
    y_label: str | None = None


@dataclass
class FigureData:
    """Parsed curves: the plot is a pure function of this."""

    x_name: str
    xs: list[float]
    curves: dict[str, list[float | None]] = field(default_factory=dict)

    def non_empty_curves(self) -> dict[str, list[float | None]]:
        return {
            label: ys
            for label, ys in self.curves.items()
            if any(v is not None for v in ys)
        }


def load_figure_data(csv_path: str, figure_id: int) -> FigureData:
    """Parse a qlrc figure CSV; missing columns and short files error."""
    if figure_id not in FIGURE_AXES:
        raise RenderError(f"unknown figure id {figure_id}")
    x_name, _, prefix = FIGURE_AXES[figure_id]
    with open(csv_path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        wanted = [x_name] + [prefix + key for key in BOUND_LABELS]
        for column in wanted:
            if column not in header:
                raise RenderError(f"missing column {column!r} in {csv_path}")
        rows = list(reader)
    if len(rows) < 2:
        raise RenderError(f"{csv_path} has {len(rows)} data rows; need at least 2")
    xs = [float(row[x_name]) for row in rows]
    curves: dict[str, list[float | None]] = {}
    for key, label in BOUND_LABELS.items():
        column = prefix + key
        ys: list[float | None] = []
        for row in rows:
            cell = row[column].strip()
            ys.append(float(cell) if cell else None)
        curves[label] = ys
    return FigureData(x_name, xs, curves)


def crossings(xs, ya, yb) -> list[tuple[float, float]]:
    """Sign-change crossings of two curves, linearly interpolated."""
    points = []
    for i in range(len(xs) - 1):
        if None in (ya[i], ya[i + 1], yb[i], yb[i + 1]):
            continue
        d0 = ya[i] - yb[i]
        d1 = ya[i + 1] - yb[i + 1]
        if d0 == 0.0:
            points.append((xs[i], ya[i]))
        elif d0 * d1 < 0.0:
            t = d0 / (d0 - d1)
            x = xs[i] + t * (xs[i + 1] - xs[i])
            y = ya[i] + t * (ya[i + 1] - ya[i])
            points.append((x, y))
    return points


def all_crossings(data: FigureData) -> list[tuple[float, float]]:
    labels = sorted(data.non_empty_curves())
    points = []
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            points.extend(crossings(data.xs, data.curves[a], data.curves[b]))
    # deduplicate nearby points so stacked annotations stay readable
    unique: list[tuple[float, float]] = []
    for x, y in sorted(points):
        if not any(math.isclose(x, ux, abs_tol=1e-9) and math.isclose(y, uy, abs_tol=1e-9)
                   for ux, uy in unique):
            unique.append((x, y))
    return unique


def render(spec: FigureSpec) -> dict:
    """Draw the figure and return its structure summary."""
    data = load_figure_data(spec.csv_path, spec.figure_id)
    x_name, y_name, _ = FIGURE_AXES[spec.figure_id]
    fig, ax = plt.subplots(figsize=(8, 5))
    drawn = data.non_empty_curves()
    for label in BOUND_LABELS.values():
        if label not in drawn:
            continue
        ys = [math.nan if v is None else v for v in drawn[label]]
        ax.plot(data.xs, ys, label=label, linewidth=1.5)
    annotations = []
    if spec.annotate_crossings and spec.figure_id in (2, 3):
        annotations = all_crossings(data)
        for x, y in annotations:
            ax.plot([x], [y], marker="o", markersize=3, color="black")
            ax.annotate(
                f"({x:.3f}, {y:.3f})",
                (x, y),
                textcoords="offset points",
                xytext=(4, 4),
                fontsize=7,
            )
    ax.set_xlabel(spec.x_label or x_name)
    ax.set_ylabel(spec.y_label or y_name)
    if spec.title:
        ax.set_title(spec.title)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.out_path)
    handles, labels = ax.get_legend_handles_labels()
    plt.close(fig)
    return {
        "curves": len(drawn),
        "legend": labels,
        "points_per_curve": {k: sum(1 for v in vs if v is not None) for k, vs in drawn.items()},
        "annotations": len(annotations),
        "out": spec.out_path,
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Render bound-comparison plots from qlrc CSV output.",
    )
    parser.add_argument("csv_path")
    parser.add_argument("--id", type=int, required=True, choices=(1, 2, 3))
    parser.add_argument("--out", required=True)
    parser.add_argument("--annotate-crossings", action="store_true")
    parser.add_argument("--title")
    args = parser.parse_args(argv)
    spec = FigureSpec(
        csv_path=args.csv_path,
        figure_id=args.id,
        out_path=args.out,
        annotate_crossings=args.annotate_crossings,
        title=args.title,
    )
    try:
        summary = render(spec)
    except (RenderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {summary['out']}: {summary['curves']} curves")
    return 0


if __name__ == "__main__":
    sys.exit(main())
