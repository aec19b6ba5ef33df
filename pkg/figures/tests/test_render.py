"""Secondary acceptance: render the three figures from real primary CSV
output, consuming the primary only through its CLI and CSV interface."""

import subprocess

import pytest

from qlrc_figures.render import (
    FigureSpec,
    RenderError,
    all_crossings,
    load_figure_data,
    render,
)


@pytest.fixture(scope="module")
def csv_paths(tmp_path_factory):
    base = tmp_path_factory.mktemp("csv")
    paths = {}
    for fid in (1, 2, 3):
        out = base / f"fig{fid}.csv"
        subprocess.run(
            ["qlrc", "figure", "--id", str(fid), "--out", str(out)], check=True
        )
        paths[fid] = out
    return paths


def test_renders_three_figures_with_five_curves(csv_paths, tmp_path):
    for fid, csv_path in csv_paths.items():
        out = tmp_path / f"fig{fid}.svg"
        summary = render(FigureSpec(str(csv_path), fid, str(out)))
        assert out.exists() and out.stat().st_size > 0
        assert summary["curves"] == 5
        assert sorted(summary["legend"]) == [
            "gg-singleton",
            "pure-griesmer",
            "pure-plotkin",
            "pure-singleton",
            "pure-sphere-packing",
        ]


def test_figure1_gg_curve_weakly_uppermost(csv_paths):
    data = load_figure_data(str(csv_paths[1]), 1)
    gg = data.curves["gg-singleton"]
    for label, ys in data.curves.items():
        if label == "gg-singleton":
            continue
        for g, y in zip(gg, ys):
            if y is not None:
                assert g is not None and y <= g


def test_rendering_is_a_pure_function_of_the_csv(csv_paths, tmp_path):
    spec_a = FigureSpec(str(csv_paths[2]), 2, str(tmp_path / "a.svg"))
    spec_b = FigureSpec(str(csv_paths[2]), 2, str(tmp_path / "b.svg"))
    a, b = render(spec_a), render(spec_b)
    assert a["curves"] == b["curves"]
    assert a["legend"] == b["legend"]
    assert a["points_per_curve"] == b["points_per_curve"]


def test_crossing_annotations(csv_paths, tmp_path):
    out = tmp_path / "fig2_annotated.png"
    summary = render(
        FigureSpec(str(csv_paths[2]), 2, str(out), annotate_crossings=True)
    )
    # the sphere-packing curve crosses the linear bounds in this regime
    assert summary["annotations"] >= 1
    data = load_figure_data(str(csv_paths[2]), 2)
    for x, _ in all_crossings(data):
        assert data.xs[0] <= x <= data.xs[-1]


def test_blank_cells_break_curves(tmp_path):
    csv_path = tmp_path / "gaps.csv"
    csv_path.write_text(
        "n,kappa_gg,kappa_singleton,kappa_griesmer,kappa_plotkin,kappa_sp\n"
        "10,5,4,,3,2\n"
        "11,6,,4,3,2\n"
        "12,7,5,4,3,2\n"
    )
    out = tmp_path / "gaps.svg"
    summary = render(FigureSpec(str(csv_path), 1, str(out)))
    assert summary["curves"] == 5
    assert summary["points_per_curve"]["pure-singleton"] == 2
    assert summary["points_per_curve"]["pure-griesmer"] == 2


def test_missing_column_is_an_error(tmp_path):
    csv_path = tmp_path / "bad.csv"
    csv_path.write_text("n,kappa_gg\n10,5\n11,6\n")
    with pytest.raises(RenderError, match="kappa_singleton"):
        render(FigureSpec(str(csv_path), 1, str(tmp_path / "x.svg")))


def test_empty_csv_is_an_error(tmp_path):
    csv_path = tmp_path / "empty.csv"
    csv_path.write_text(
        "n,kappa_gg,kappa_singleton,kappa_griesmer,kappa_plotkin,kappa_sp\n"
    )
    with pytest.raises(RenderError, match="need at least 2"):
        render(FigureSpec(str(csv_path), 1, str(tmp_path / "x.svg")))


def test_cli_entry_point(csv_paths, tmp_path):
    out = tmp_path / "cli.svg"
    proc = subprocess.run(
        [
            "render_figures",
            str(csv_paths[3]),
            "--id",
            "3",
            "--out",
            str(out),
            "--annotate-crossings",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and out.exists()
    bad = subprocess.run(
        ["render_figures", str(csv_paths[1]), "--id", "2", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert bad.returncode == 2 and "missing column" in bad.stderr
    assert "delta" in bad.stderr  # the first absent column is named
