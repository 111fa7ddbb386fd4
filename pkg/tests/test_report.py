"""Report rendering: file inventory, golden tables, deterministic bytes."""

import json

from taurigid import bridge, report
from taurigid.cyclic import build_model


def test_report_writes_tables_and_figures(tmp_path):
    model = build_model(2, 3)
    written = report.write_report(model, tmp_path / "out")
    names = sorted(p.name for p in written)
    assert names == [
        "ar_quiver.png",
        "crossing_graph.png",
        "delta_table.json",
        "delta_table.tsv",
        "image_table.json",
        "image_table.tsv",
        "maximal_rigid.tsv",
        "model.json",
        "objects.tsv",
    ]
    for p in written:
        assert p.stat().st_size > 0
    image = (tmp_path / "out" / "image_table.tsv").read_text(encoding="utf-8")
    assert image.splitlines()[:3] == ["object\timage", "1357\tP4", "1358\tP3"]
    assert "2469\t0" in image
    delta = (tmp_path / "out" / "delta_table.tsv").read_text(encoding="utf-8")
    assert "1368+1468+2468+2469\t(P2+P1+I1, P4)" in delta
    doc = json.loads((tmp_path / "out" / "delta_table.json").read_text(encoding="utf-8"))
    assert doc["schema"] == "taurigid.delta"
    assert {"object": "1368+1468+2468+2469", "module_part": ["P2", "P1", "I1"],
            "projective_part": ["P4"]} in doc["rows"]
    assert "2469+2479+2579+3579\t(0, P4+P3+P2+P1)" in delta


def test_report_higher_rank_skips_module_side(tmp_path):
    model = build_model(3, 2)
    written = report.write_report(model, tmp_path / "out")
    names = sorted(p.name for p in written)
    assert "image_table.tsv" not in names
    assert "delta_table.tsv" not in names
    assert "ar_quiver.png" in names and "crossing_graph.png" in names


def test_report_respects_custom_T(tmp_path):
    model = build_model(2, 3)
    T = bridge.canonical_T(model)
    rotated = tuple(sorted({bridge.cyclic.ar_successor(model, t) for t in T}))
    report.write_report(model, tmp_path / "out", T=rotated)
    image = (tmp_path / "out" / "image_table.tsv").read_text(encoding="utf-8")
    assert "1358\tP4" in image


def test_report_deterministic_bytes(tmp_path):
    model = build_model(2, 1)
    report.write_report(model, tmp_path / "a")
    report.write_report(model, tmp_path / "b")
    for name in ("model.json", "objects.tsv", "maximal_rigid.tsv",
                 "image_table.tsv", "image_table.json",
                 "delta_table.tsv", "delta_table.json",
                 "ar_quiver.png", "crossing_graph.png"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
