"""Command-line entry points, driven through main() with explicit argv."""

from __future__ import annotations

import pytest

from netcomplexity.cli import main
from netcomplexity.report import CSV_HEADER


def _analyze_k8s_inputs(tmp_path):
    outdir = tmp_path / "native"
    assert main(["generate", "--topology", "k8s-3", "--out", str(outdir)]) == 0
    return outdir


def test_analyze_prints_a_markdown_table_by_default(tmp_path, capsys):
    outdir = _analyze_k8s_inputs(tmp_path)
    capsys.readouterr()
    assert main(["analyze", "--dialect", "k8s", "--input", str(outdir)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("| Topology |")
    assert "| k8s-3 | 3.08 | 80 | 43 | 2 | 3 | 0 |" in out


def test_analyze_writes_each_requested_format(tmp_path, capsys):
    outdir = _analyze_k8s_inputs(tmp_path)
    base = tmp_path / "report"
    code = main(
        [
            "analyze",
            "--dialect",
            "k8s",
            "--input",
            str(outdir),
            "--format",
            "csv",
            "--format",
            "graphml",
            "--out",
            str(base),
        ]
    )
    assert code == 0
    csv_text = (tmp_path / "report.csv").read_text(encoding="utf-8")
    assert csv_text.splitlines()[0] == CSV_HEADER
    assert csv_text.splitlines()[1].startswith("k8s-3,3.08,")
    assert "<graphml" in (tmp_path / "report.graphml").read_text(encoding="utf-8")


def test_analyze_single_format_writes_the_exact_path(tmp_path, capsys):
    outdir = _analyze_k8s_inputs(tmp_path)
    target = tmp_path / "summary.dot"
    code = main(
        [
            "analyze",
            "--dialect",
            "k8s",
            "--input",
            str(outdir),
            "--format",
            "dot",
            "--out",
            str(target),
        ]
    )
    assert code == 0
    assert target.read_text(encoding="utf-8").startswith("graph type_summary {")


def test_analyze_rejects_empty_input_directories(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["analyze", "--dialect", "aci", "--input", str(empty)]) == 1
    err = capsys.readouterr().err
    assert err.startswith("error: ")
    assert "no resources" in err


def test_analyze_reports_missing_taxonomy_entries(tmp_path, capsys):
    outdir = _analyze_k8s_inputs(tmp_path)
    taxonomy = tmp_path / "tax.txt"
    taxonomy.write_text("k8s namespace infrastructure 0\n", encoding="utf-8")
    code = main(
        [
            "analyze",
            "--dialect",
            "k8s",
            "--input",
            str(outdir),
            "--taxonomy",
            str(taxonomy),
        ]
    )
    assert code == 1
    assert "no taxonomy entry" in capsys.readouterr().err


def test_analyze_rejects_unknown_dialects(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--dialect", "nonesuch", "--input", "x"])
    assert exc.value.code == 2


def test_generate_lists_written_files_on_stderr(tmp_path, capsys):
    outdir = tmp_path / "native"
    assert main(["generate", "--topology", "cli-3", "--out", str(outdir)]) == 0
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "sw1.cfg" in captured.err and "sw2.cfg" in captured.err
    assert sorted(p.name for p in outdir.iterdir()) == ["sw1.cfg", "sw2.cfg"]


def test_compare_merges_rows_in_input_order(tmp_path, capsys):
    for tid, dialect in (("aci-3", "aci"), ("k8s-3", "k8s")):
        outdir = tmp_path / tid
        main(["generate", "--topology", tid, "--out", str(outdir)])
        main(
            [
                "analyze",
                "--dialect",
                dialect,
                "--input",
                str(outdir),
                "--format",
                "csv",
                "--out",
                str(tmp_path / f"{tid}.csv"),
            ]
        )
    capsys.readouterr()
    code = main(
        [
            "compare",
            "--input",
            str(tmp_path / "aci-3.csv"),
            str(tmp_path / "k8s-3.csv"),
            "--format",
            "md",
        ]
    )
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[2].startswith("| aci-3 | 2.00 |")
    assert lines[3].startswith("| k8s-3 | 3.08 |")


def test_compare_requires_existing_row_files(tmp_path, capsys):
    assert main(["compare", "--input", str(tmp_path / "nope.csv")]) == 1
    assert "does not exist" in capsys.readouterr().err


def test_reproduce_checks_every_cell(capsys):
    assert main(["reproduce"]) == 0
    out = capsys.readouterr().out
    assert out.count("check ") == 36
    assert "cells passed: 36/36" in out
    assert out.count("-> pass") == 36
