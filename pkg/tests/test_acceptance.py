"""End-to-end acceptance checks, one test per criterion.

Each test prints a single pass/fail line (visible with `pytest -s` or on
failure) and asserts the criterion at its stated tolerance. Comparisons here
are written out against the recorded reference numbers rather than routed
through the reference.check_* helpers, so the reproduce command and this
module stay two independent readings of the same contract.
"""

from __future__ import annotations

import dataclasses
import random
import time

import pytest

from netcomplexity import (
    EdgeKind,
    Taxonomy,
    VertexCategory,
    build_graph,
    compute_metrics,
    count_edges_by_kind,
    ip_excess_degree,
    load_files,
    summarize_types,
)
from netcomplexity.cli import main
from netcomplexity.reference import DOCUMENTED_DEVIATIONS, REFERENCE_METRICS
from netcomplexity.topologies import TOPOLOGY_IDS, dialect_of, generate, write_native

from _random_graphs import (
    brute_force_excess_degree,
    copy_graph,
    random_graph,
    tally_edge_kinds,
)

SEED = 19840614


def _report(label: str, ok: bool) -> bool:
    print(f"acceptance {label}: {'pass' if ok else 'fail'}")
    return ok


def test_criterion_1_excess_degree_column_is_exact_and_fast(six_topologies):
    expected = {
        "azure-1": 37,
        "azure-2": 6,
        "azure-3": 6,
        "cli-3": 15,
        "k8s-3": 0,
        "aci-3": 0,
    }
    start = time.perf_counter()
    got = {tid: ip_excess_degree(six_topologies[tid][0]) for tid in TOPOLOGY_IDS}
    elapsed = time.perf_counter() - start
    ok = got == expected and elapsed < 1.0
    assert _report("criterion 1 (exact IP-ED column, under 1s)", ok), (got, elapsed)


def test_criterion_2_type_counts_are_exact(six_topologies):
    expected = {
        "azure-1": (8, 8),
        "azure-2": (8, 8),
        "azure-3": (5, 4),
        "cli-3": (4, 1),
        "k8s-3": (2, 3),
        "aci-3": (6, 3),
    }
    got = {
        tid: (six_topologies[tid][1].i_types, six_topologies[tid][1].p_types)
        for tid in TOPOLOGY_IDS
    }
    assert _report("criterion 2 (exact I-type and P-type counts)", got == expected), got


def test_criterion_3_density_ratios_match_within_tolerance(six_topologies):
    ok = True
    got = {}
    for tid in TOPOLOGY_IDS:
        rendered = float(f"{six_topologies[tid][1].nodes_per_endpoint:.2f}")
        got[tid] = rendered
        ok = ok and abs(rendered - REFERENCE_METRICS[tid].nodes_per_endpoint) <= 0.05
    assert _report("criterion 3 (nodes-per-endpoint within 0.05)", ok), got


def test_criterion_4_edge_counts_match_within_ten_percent(six_topologies):
    ok = True
    details = []
    for tid in TOPOLOGY_IDS:
        row = six_topologies[tid][1]
        for field, got in (("l_edges", row.l_edges), ("t_edges", row.t_edges)):
            expected = getattr(REFERENCE_METRICS[tid], field)
            if expected == 0:
                cell_ok = got == 0
            else:
                cell_ok = abs(got - expected) / expected <= 0.10
            if got != expected and (tid, field) not in DOCUMENTED_DEVIATIONS:
                cell_ok = False
            ok = ok and cell_ok
            details.append((tid, field, got, expected, cell_ok))
    assert _report("criterion 4 (L/T edges within 10%, deviations itemized)", ok), details


def test_criterion_5_density_ordering_is_strict(six_topologies):
    ratios = [six_topologies[tid][1].nodes_per_endpoint for tid in TOPOLOGY_IDS]
    ok = all(a > b for a, b in zip(ratios, ratios[1:]))
    assert _report("criterion 5 (strictly decreasing density ordering)", ok), ratios


def test_criterion_6_counters_equal_brute_force_on_random_graphs():
    rng = random.Random(SEED)
    checked = 0
    ok = True
    for _ in range(200):
        g = random_graph(rng)
        ok = ok and g.vertex_count <= 50
        ok = ok and ip_excess_degree(g) == brute_force_excess_degree(g)
        loose, tight, contains = count_edges_by_kind(g)
        ok = ok and (loose, tight, contains) == tally_edge_kinds(g)
        ok = ok and loose + tight + contains == g.edge_count
        checked += 1
    ok = ok and checked == 200
    assert _report("criterion 6 (200 random graphs match brute force)", ok)


def test_criterion_7_metamorphic_relations_hold():
    rng = random.Random(SEED + 1)
    ok = True

    for _ in range(100):
        g = random_graph(rng)
        ids = [v.id for v in g.vertices]
        rng.shuffle(ids)
        rename = {old: f"n{i}" for i, old in enumerate(ids)}
        ok = ok and compute_metrics(copy_graph(g, rename=rename)) == compute_metrics(g)

    deletions = 0
    for _ in range(2000):
        if deletions == 100:
            break
        g = random_graph(rng)
        containment = [e for e in g.edges if e.kind is EdgeKind.CONTAINS]
        if not containment:
            continue
        trimmed = copy_graph(g, drop_key=rng.choice(containment).key())
        before = compute_metrics(g)
        after = compute_metrics(trimmed)
        ok = ok and after.contains_edges == before.contains_edges - 1
        ok = ok and dataclasses.replace(after, contains_edges=before.contains_edges) == before
        deletions += 1
    ok = ok and deletions == 100

    for _ in range(100):
        g = random_graph(rng)
        literal = rng.choice(
            [v.id for v in g.literals() if g.noncontains_degree(v.id) >= 1]
        )
        source = rng.choice(
            [v.id for v in g.vertices if v.category is not VertexCategory.ADDRESS_LITERAL]
        )
        before = ip_excess_degree(g)
        added = g.add_edge(source, literal, EdgeKind.LOOSE, "fresh-citation")
        ok = ok and added is not None and ip_excess_degree(g) == before + 1

    assert _report("criterion 7 (relabel, deletion, citation metamorphics)", ok)


def test_criterion_8_native_files_round_trip_per_dialect(tmp_path, six_topologies):
    taxonomy = Taxonomy.default()
    ok = True
    for tid in ("azure-1", "cli-3", "k8s-3", "aci-3"):
        paths = write_native(tid, tmp_path / tid)
        reparsed = build_graph(load_files(dialect_of(tid), paths), taxonomy, name=tid)
        direct = compute_metrics(six_topologies[tid][0], name=tid)
        ok = ok and compute_metrics(reparsed) == direct
    assert _report("criterion 8 (generate/serialize/parse round trip)", ok)


def test_criterion_9_type_summaries_conserve_totals(six_topologies):
    ok = True
    for tid in TOPOLOGY_IDS:
        graph, _ = six_topologies[tid]
        summary = summarize_types(graph)
        ok = ok and sum(c for _, _, c in summary.type_nodes) == graph.vertex_count
        ok = ok and sum(c for _, _, _, c in summary.type_edges) == graph.edge_count
    azure_summary = summarize_types(six_topologies["azure-1"][0])
    ok = ok and ("ipv4", VertexCategory.ADDRESS_LITERAL, 34) in azure_summary.type_nodes

    rng = random.Random(SEED + 2)
    for _ in range(100):
        g = random_graph(rng)
        summary = summarize_types(g)
        ok = ok and sum(c for _, _, c in summary.type_nodes) == g.vertex_count
        ok = ok and sum(c for _, _, _, c in summary.type_edges) == g.edge_count
    assert _report("criterion 9 (type summary conservation)", ok)


def test_criterion_10_reproduce_is_deterministic_and_fast(capsys):
    runs = []
    ok = True
    for _ in range(2):
        start = time.perf_counter()
        code = main(["reproduce"])
        elapsed = time.perf_counter() - start
        ok = ok and code == 0 and elapsed < 5.0
        runs.append(capsys.readouterr().out)
    ok = ok and runs[0] == runs[1]
    ok = ok and "cells passed: 36/36" in runs[0]
    assert _report("criterion 10 (reproduce deterministic, under 5s)", ok)
