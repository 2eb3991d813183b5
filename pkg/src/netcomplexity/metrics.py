"""The six-column complexity metric row computed from a categorized graph.

All functions are pure and read-only over the graph. The excess-degree metric
deliberately ignores containment edges: containment is derived structure, not
something an operator typed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MetricsError
from .graph import EdgeKind, NetGraph, VertexCategory


@dataclass(frozen=True)
class MetricsRow:
    topology_name: str
    vertex_count: int
    endpoint_count: int
    nodes_per_endpoint: float
    l_edges: int
    t_edges: int
    contains_edges: int
    i_types: int
    p_types: int
    ip_excess_degree: int


def count_endpoints(graph: NetGraph) -> int:
    return sum(1 for v in graph.vertices if v.is_endpoint)


def ip_excess_degree(graph: NetGraph) -> int:
    """Sum over address literals of max(0, non-contains degree - 1).

    Measures how often an operator had to type the same address more than
    once. The clamp keeps degree-zero literals (declared but never cited)
    from reducing the total.
    """
    total = 0
    for v in graph.vertices:
        if v.category is VertexCategory.ADDRESS_LITERAL:
            total += max(0, graph.noncontains_degree(v.id) - 1)
    return total


def count_edges_by_kind(graph: NetGraph) -> "tuple[int, int, int]":
    return (
        graph.edges_by_kind(EdgeKind.LOOSE),
        graph.edges_by_kind(EdgeKind.TIGHT),
        graph.edges_by_kind(EdgeKind.CONTAINS),
    )


def count_types_by_category(graph: NetGraph) -> "tuple[int, int]":
    """Distinct type names present per category (literal types count in neither)."""
    i_types = set()
    p_types = set()
    for v in graph.vertices:
        if v.category is VertexCategory.INFRASTRUCTURE:
            i_types.add(v.type_name)
        elif v.category is VertexCategory.POLICY:
            p_types.add(v.type_name)
    return len(i_types), len(p_types)


def compute_metrics(graph: NetGraph, name: "str | None" = None) -> MetricsRow:
    topology_name = name if name is not None else graph.name
    endpoints = count_endpoints(graph)
    if endpoints == 0:
        raise MetricsError(
            f"no endpoints in {topology_name!r}: nodes-per-endpoint is undefined"
        )
    loose, tight, contains = count_edges_by_kind(graph)
    i_types, p_types = count_types_by_category(graph)
    return MetricsRow(
        topology_name=topology_name,
        vertex_count=graph.vertex_count,
        endpoint_count=endpoints,
        nodes_per_endpoint=graph.vertex_count / endpoints,
        l_edges=loose,
        t_edges=tight,
        contains_edges=contains,
        i_types=i_types,
        p_types=p_types,
        ip_excess_degree=ip_excess_degree(graph),
    )
