"""Type-level aggregation and text outputs: DOT, GraphML, tables.

Every export is byte-deterministic for a fixed input so that repeated runs
diff clean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .errors import ReportError
from .graph import EdgeKind, NetGraph, VertexCategory
from .metrics import MetricsRow


@dataclass(frozen=True)
class TypeSummaryGraph:
    """Aggregation of a graph by vertex type.

    type_nodes: (type_name, category, vertex count), sorted by type name.
    type_edges: (type_a, type_b, kind, edge count) with type_a <= type_b,
    sorted; at most one entry per unordered type pair and kind.
    """

    type_nodes: "tuple[tuple[str, VertexCategory, int], ...]"
    type_edges: "tuple[tuple[str, str, EdgeKind, int], ...]"


def summarize_types(graph: NetGraph) -> TypeSummaryGraph:
    node_counts: "dict[str, int]" = {}
    node_category: "dict[str, VertexCategory]" = {}
    for v in graph.vertices:
        node_counts[v.type_name] = node_counts.get(v.type_name, 0) + 1
        node_category.setdefault(v.type_name, v.category)
    edge_counts: "dict[tuple[str, str, EdgeKind], int]" = {}
    for e in graph.edges:
        ta = graph.vertex(e.a).type_name
        tb = graph.vertex(e.b).type_name
        if tb < ta:
            ta, tb = tb, ta
        key = (ta, tb, e.kind)
        edge_counts[key] = edge_counts.get(key, 0) + 1
    type_nodes = tuple(
        (name, node_category[name], node_counts[name]) for name in sorted(node_counts)
    )
    type_edges = tuple(
        (a, b, kind, edge_counts[(a, b, kind)])
        for a, b, kind in sorted(edge_counts, key=lambda k: (k[0], k[1], k[2].value))
    )
    return TypeSummaryGraph(type_nodes=type_nodes, type_edges=type_edges)


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(summary: TypeSummaryGraph) -> str:
    """Render a type summary as an undirected DOT graph.

    Node width and edge pen width scale with log(1 + count) so counts spanning
    1 to a few hundred stay readable. Loose bundles are blue, tight bundles
    red, anything touching an address-literal type grey (IP assignments), and
    containment grey dashed.
    """
    category_by_type = {name: category for name, category, _ in summary.type_nodes}
    lines = ["graph type_summary {", "  node [shape=ellipse];"]
    for name, category, count in summary.type_nodes:
        width = 0.8 + math.log1p(count)
        label = f"{name}\\n({count})"
        lines.append(
            f"  {_dot_quote(name)} [label=\"{label}\", width={width:.2f}, "
            f"category=\"{category.value}\"];"
        )
    for a, b, kind, count in summary.type_edges:
        penwidth = 1.0 + math.log1p(count)
        touches_literal = (
            category_by_type.get(a) is VertexCategory.ADDRESS_LITERAL
            or category_by_type.get(b) is VertexCategory.ADDRESS_LITERAL
        )
        if kind is EdgeKind.CONTAINS:
            style = 'color="grey", style="dashed"'
        elif touches_literal:
            style = 'color="grey"'
        elif kind is EdgeKind.LOOSE:
            style = 'color="blue"'
        else:
            style = 'color="red"'
        lines.append(
            f"  {_dot_quote(a)} -- {_dot_quote(b)} [{style}, penwidth={penwidth:.2f}, "
            f"label=\"{count}\"];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


_GRAPHML_KEYS = [
    ("d0", "node", "type_name", "string"),
    ("d1", "node", "category", "string"),
    ("d2", "node", "is_endpoint", "boolean"),
    ("d3", "node", "cidr", "string"),
    ("d4", "edge", "kind", "string"),
    ("d5", "edge", "label", "string"),
]


def export_graphml(graph: NetGraph) -> str:
    """Full-graph GraphML export with typed vertex and edge attributes."""
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    out.append('<graphml xmlns="http://graphml.graphdrawing.org/xmlns">')
    for key_id, domain, name, attr_type in _GRAPHML_KEYS:
        out.append(
            f'  <key id="{key_id}" for="{domain}" attr.name="{name}" attr.type="{attr_type}"/>'
        )
    out.append(f'  <graph id={quoteattr(graph.name)} edgedefault="undirected">')
    for v in sorted(graph.vertices, key=lambda v: v.id):
        out.append(f"    <node id={quoteattr(v.id)}>")
        out.append(f"      <data key=\"d0\">{escape(v.type_name)}</data>")
        out.append(f"      <data key=\"d1\">{escape(v.category.value)}</data>")
        out.append(f"      <data key=\"d2\">{'true' if v.is_endpoint else 'false'}</data>")
        if v.cidr is not None:
            out.append(f"      <data key=\"d3\">{escape(v.cidr.text)}</data>")
        out.append("    </node>")
    for e in sorted(graph.edges, key=lambda e: e.key()):
        out.append(f"    <edge source={quoteattr(e.a)} target={quoteattr(e.b)}>")
        out.append(f"      <data key=\"d4\">{escape(e.kind.value)}</data>")
        out.append(f"      <data key=\"d5\">{escape(e.label)}</data>")
        out.append("    </edge>")
    out.append("  </graph>")
    out.append("</graphml>")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class TableRow:
    """The seven displayed columns of a comparison table row.

    Used when rows are read back from CSV and the full MetricsRow (vertex and
    endpoint counts) is no longer available.
    """

    topology_name: str
    nodes_per_endpoint: float
    l_edges: int
    t_edges: int
    i_types: int
    p_types: int
    ip_excess_degree: int


CSV_HEADER = "topology,nodes_per_endpoint,l_edges,t_edges,i_types,p_types,ip_ed"

_MD_HEADER = "| Topology | Nodes/N_E | L-Edges | T-Edges | I-Types | P-Types | IP-ED |"
_MD_RULE = "| --- | ---: | ---: | ---: | ---: | ---: | ---: |"


def render_comparison(rows, format: str = "markdown") -> str:
    """Render metric rows as a Markdown pipe table or CSV, in input order.

    Accepts MetricsRow or TableRow objects. The ratio column is always
    rendered with two decimals ("2.00", never "2.0").
    """
    rows = list(rows)
    if not rows:
        raise ReportError("no rows to render")
    if format in ("markdown", "md"):
        lines = [_MD_HEADER, _MD_RULE]
        for r in rows:
            lines.append(
                f"| {r.topology_name} | {r.nodes_per_endpoint:.2f} | {r.l_edges} | "
                f"{r.t_edges} | {r.i_types} | {r.p_types} | {r.ip_excess_degree} |"
            )
        return "\n".join(lines) + "\n"
    if format == "csv":
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(
                f"{r.topology_name},{r.nodes_per_endpoint:.2f},{r.l_edges},"
                f"{r.t_edges},{r.i_types},{r.p_types},{r.ip_excess_degree}"
            )
        return "\n".join(lines) + "\n"
    raise ReportError(f"unknown table format {format!r}")


def read_rows_csv(text: str, source: str = "<csv>") -> "list[TableRow]":
    """Parse rows previously written by render_comparison(..., "csv")."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == CSV_HEADER:
            continue
        fields = line.split(",")
        if len(fields) != 7:
            raise ReportError(f"{source} line {lineno}: expected 7 fields, got {len(fields)}")
        try:
            rows.append(
                TableRow(
                    topology_name=fields[0],
                    nodes_per_endpoint=float(fields[1]),
                    l_edges=int(fields[2]),
                    t_edges=int(fields[3]),
                    i_types=int(fields[4]),
                    p_types=int(fields[5]),
                    ip_excess_degree=int(fields[6]),
                )
            )
        except ValueError as exc:
            raise ReportError(f"{source} line {lineno}: {exc}") from None
    return rows


def as_table_row(row: MetricsRow) -> TableRow:
    return TableRow(
        topology_name=row.topology_name,
        nodes_per_endpoint=row.nodes_per_endpoint,
        l_edges=row.l_edges,
        t_edges=row.t_edges,
        i_types=row.i_types,
        p_types=row.p_types,
        ip_excess_degree=row.ip_excess_degree,
    )
