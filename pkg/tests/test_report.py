"""Table rendering, type summaries, and the DOT/GraphML exports."""

from __future__ import annotations

from xml.dom import minidom

import pytest

from netcomplexity import (
    Cidr,
    EdgeKind,
    NetGraph,
    ReportError,
    TableRow,
    Vertex,
    VertexCategory,
    as_table_row,
    compute_metrics,
    export_dot,
    export_graphml,
    read_rows_csv,
    render_comparison,
    summarize_types,
)

_ROWS = [
    TableRow("azure-1", 7.33, 55, 203, 8, 8, 37),
    TableRow("aci-3", 2.0, 0, 99, 6, 3, 0),
]


def _sample_graph() -> NetGraph:
    g = NetGraph("sample")
    for vid, tname, category, endpoint in (
        ("host/a", "host", VertexCategory.INFRASTRUCTURE, True),
        ("host/b", "host", VertexCategory.INFRASTRUCTURE, True),
        ("rule/r", "rule", VertexCategory.POLICY, False),
    ):
        g.add_vertex(Vertex(vid, "test", tname, vid, category, is_endpoint=endpoint))
    cidr = Cidr.parse("10.0.0.0/8")
    g.add_vertex(
        Vertex("ipv4/10.0.0.0/8", "test", "ipv4", cidr.text, VertexCategory.ADDRESS_LITERAL, cidr=cidr)
    )
    g.add_edge("host/a", "rule/r", EdgeKind.TIGHT, "member")
    g.add_edge("host/b", "rule/r", EdgeKind.TIGHT, "member")
    g.add_edge("rule/r", "ipv4/10.0.0.0/8", EdgeKind.LOOSE, "cites")
    return g


def test_markdown_table_golden():
    assert render_comparison(_ROWS, "markdown") == (
        "| Topology | Nodes/N_E | L-Edges | T-Edges | I-Types | P-Types | IP-ED |\n"
        "| --- | ---: | ---: | ---: | ---: | ---: | ---: |\n"
        "| azure-1 | 7.33 | 55 | 203 | 8 | 8 | 37 |\n"
        "| aci-3 | 2.00 | 0 | 99 | 6 | 3 | 0 |\n"
    )
    assert render_comparison(_ROWS, "md") == render_comparison(_ROWS, "markdown")


def test_csv_table_golden():
    assert render_comparison(_ROWS, "csv") == (
        "topology,nodes_per_endpoint,l_edges,t_edges,i_types,p_types,ip_ed\n"
        "azure-1,7.33,55,203,8,8,37\n"
        "aci-3,2.00,0,99,6,3,0\n"
    )


def test_ratio_always_renders_two_decimals():
    text = render_comparison([TableRow("t", 2.0, 0, 0, 0, 0, 0)], "csv")
    assert ",2.00," in text
    assert ",2.0," not in text


def test_rendering_rejects_empty_input_and_unknown_formats():
    with pytest.raises(ReportError, match="no rows"):
        render_comparison([], "md")
    with pytest.raises(ReportError, match="unknown table format 'html'"):
        render_comparison(_ROWS, "html")


def test_csv_rows_round_trip():
    text = render_comparison(_ROWS, "csv")
    assert read_rows_csv(text) == _ROWS
    merged = read_rows_csv(text + "\n" + text)
    assert merged == _ROWS + _ROWS


def test_csv_reader_reports_malformed_lines_with_source():
    with pytest.raises(ReportError, match=r"rows\.csv line 1: expected 7 fields"):
        read_rows_csv("a,b,c\n", source="rows.csv")
    with pytest.raises(ReportError, match="line 1"):
        read_rows_csv("t,not-a-number,0,0,0,0,0\n")


def test_metrics_row_converts_to_table_row():
    row = compute_metrics(_sample_graph())
    table = as_table_row(row)
    assert table.topology_name == "sample"
    assert table.nodes_per_endpoint == 2.0
    assert (table.l_edges, table.t_edges) == (1, 2)


def test_type_summary_counts_nodes_and_edge_bundles():
    summary = summarize_types(_sample_graph())
    assert summary.type_nodes == (
        ("host", VertexCategory.INFRASTRUCTURE, 2),
        ("ipv4", VertexCategory.ADDRESS_LITERAL, 1),
        ("rule", VertexCategory.POLICY, 1),
    )
    assert summary.type_edges == (
        ("host", "rule", EdgeKind.TIGHT, 2),
        ("ipv4", "rule", EdgeKind.LOOSE, 1),
    )


def test_type_summary_conserves_totals_on_a_full_topology(six_topologies):
    graph, _ = six_topologies["azure-1"]
    summary = summarize_types(graph)
    assert sum(count for _, _, count in summary.type_nodes) == graph.vertex_count
    assert sum(count for _, _, _, count in summary.type_edges) == graph.edge_count
    assert ("ipv4", VertexCategory.ADDRESS_LITERAL, 34) in summary.type_nodes


def _dot_node_and_edge_lines(text: str):
    lines = text.splitlines()
    assert lines[0] == "graph type_summary {"
    assert lines[-1] == "}"
    nodes = [l for l in lines if "[label=" in l and " -- " not in l]
    edges = [l for l in lines if " -- " in l]
    return nodes, edges


def test_dot_export_structure_matches_the_summary():
    summary = summarize_types(_sample_graph())
    text = export_dot(summary)
    nodes, edges = _dot_node_and_edge_lines(text)
    assert len(nodes) == len(summary.type_nodes)
    assert len(edges) == len(summary.type_edges)
    for name, _, count in summary.type_nodes:
        assert any(f'"{name}"' in line and f"({count})" in line for line in nodes)
    assert any('color="red"' in line for line in edges)
    assert any('color="grey"' in line for line in edges)
    assert export_dot(summary) == text


def test_dot_export_styles_containment_dashed(six_topologies):
    graph, _ = six_topologies["azure-1"]
    text = export_dot(summarize_types(graph))
    assert 'style="dashed"' in text
    assert '"ipv4" -- "ipv4"' in text


def _graph_from_graphml(text: str) -> NetGraph:
    doc = minidom.parseString(text)
    graph_el = doc.getElementsByTagName("graph")[0]
    g = NetGraph(graph_el.getAttribute("id"))

    def data_of(el):
        pairs = {}
        for d in el.getElementsByTagName("data"):
            pairs[d.getAttribute("key")] = "".join(
                c.data for c in d.childNodes if c.nodeType == c.TEXT_NODE
            )
        return pairs

    for node in graph_el.getElementsByTagName("node"):
        data = data_of(node)
        g.add_vertex(
            Vertex(
                id=node.getAttribute("id"),
                dialect="graphml",
                type_name=data["d0"],
                display_name=node.getAttribute("id"),
                category=VertexCategory(data["d1"]),
                is_endpoint=data["d2"] == "true",
                cidr=Cidr.parse(data["d3"]) if "d3" in data else None,
            )
        )
    for edge in graph_el.getElementsByTagName("edge"):
        data = data_of(edge)
        g.add_edge(
            edge.getAttribute("source"),
            edge.getAttribute("target"),
            EdgeKind(data["d4"]),
            data["d5"],
        )
    return g


def test_graphml_round_trips_to_the_same_metrics(six_topologies):
    for tid in ("cli-3", "k8s-3"):
        graph, row = six_topologies[tid]
        rebuilt = _graph_from_graphml(export_graphml(graph))
        assert compute_metrics(rebuilt, name=row.topology_name) == row
        assert rebuilt.vertex_count == graph.vertex_count
        assert rebuilt.edge_count == graph.edge_count


def test_graphml_export_is_deterministic():
    g = _sample_graph()
    assert export_graphml(g) == export_graphml(g)
    assert export_graphml(g).startswith('<?xml version="1.0" encoding="UTF-8"?>')
