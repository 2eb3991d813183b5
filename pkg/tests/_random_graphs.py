"""Seeded random graph construction shared by property and acceptance tests.

Graphs respect the model invariants by construction: contains edges join two
literals, tight edges never touch a literal, every literal carries its parsed
prefix. Every graph also includes one endpoint and one cited literal so the
metamorphic checks always have material to work with.
"""

from __future__ import annotations

import random

from netcomplexity import Cidr, EdgeKind, NetGraph, Vertex, VertexCategory


def _format_prefix(net: int, plen: int) -> str:
    return f"{net >> 24 & 255}.{net >> 16 & 255}.{net >> 8 & 255}.{net & 255}/{plen}"


def random_prefix(rng: random.Random, min_plen: int = 0) -> str:
    plen = rng.randint(min_plen, 32)
    mask = (0xFFFFFFFF << (32 - plen)) & 0xFFFFFFFF if plen else 0
    return _format_prefix(rng.getrandbits(32) & mask, plen)


def _add_literal(graph: NetGraph, rng: random.Random) -> str:
    while True:
        cidr = Cidr.parse(random_prefix(rng, min_plen=4))
        vid = f"ipv4/{cidr.text}"
        if graph.has_vertex(vid):
            continue
        graph.add_vertex(
            Vertex(
                id=vid,
                dialect="test",
                type_name="ipv4",
                display_name=cidr.text,
                category=VertexCategory.ADDRESS_LITERAL,
                cidr=cidr,
            )
        )
        return vid


def random_graph(rng: random.Random, max_vertices: int = 50) -> NetGraph:
    graph = NetGraph(f"random-{rng.randrange(10 ** 6)}")
    graph.add_vertex(
        Vertex(
            id="host/anchor",
            dialect="test",
            type_name="host",
            display_name="anchor",
            category=VertexCategory.INFRASTRUCTURE,
            is_endpoint=True,
        )
    )
    graph.add_vertex(
        Vertex(
            id="rule/seed",
            dialect="test",
            type_name="rule",
            display_name="seed",
            category=VertexCategory.POLICY,
        )
    )
    seed_literal = _add_literal(graph, rng)
    graph.add_edge("rule/seed", seed_literal, EdgeKind.LOOSE, "seed-cite")

    for i in range(rng.randint(0, max_vertices - 3)):
        roll = rng.random()
        if roll < 0.3:
            _add_literal(graph, rng)
        elif roll < 0.7:
            graph.add_vertex(
                Vertex(
                    id=f"host/h{i}",
                    dialect="test",
                    type_name="host",
                    display_name=f"h{i}",
                    category=VertexCategory.INFRASTRUCTURE,
                    is_endpoint=rng.random() < 0.4,
                )
            )
        else:
            graph.add_vertex(
                Vertex(
                    id=f"rule/r{i}",
                    dialect="test",
                    type_name="rule",
                    display_name=f"r{i}",
                    category=VertexCategory.POLICY,
                )
            )

    ids = [v.id for v in graph.vertices]
    for j in range(rng.randint(0, 3 * len(ids))):
        a, b = rng.sample(ids, 2)
        literal_ends = sum(
            1
            for vid in (a, b)
            if graph.vertex(vid).category is VertexCategory.ADDRESS_LITERAL
        )
        if literal_ends == 2:
            kind = EdgeKind.CONTAINS if rng.random() < 0.5 else EdgeKind.LOOSE
        elif literal_ends == 1:
            kind = EdgeKind.LOOSE
        else:
            kind = EdgeKind.TIGHT if rng.random() < 0.5 else EdgeKind.LOOSE
        if kind is EdgeKind.CONTAINS:
            label = "contains"
        elif rng.random() < 0.15:
            label = "shared"
        else:
            label = f"e{j}"
        graph.add_edge(a, b, kind, label)
    return graph


def copy_graph(graph: NetGraph, drop_key=None, rename=None) -> NetGraph:
    """Rebuild a graph, optionally dropping one edge or renaming vertex ids.

    The graph type is append-only, so metamorphic edits work on copies.
    """
    rename = rename or {}
    out = NetGraph(graph.name)
    for v in graph.vertices:
        out.add_vertex(
            Vertex(
                id=rename.get(v.id, v.id),
                dialect=v.dialect,
                type_name=v.type_name,
                display_name=v.display_name,
                category=v.category,
                is_endpoint=v.is_endpoint,
                cidr=v.cidr,
            )
        )
    for e in graph.edges:
        if drop_key is not None and e.key() == drop_key:
            continue
        out.add_edge(rename.get(e.a, e.a), rename.get(e.b, e.b), e.kind, e.label)
    return out


def brute_force_excess_degree(graph: NetGraph) -> int:
    """Per-literal tally over the raw edge list, independent of the counters."""
    total = 0
    for v in graph.vertices:
        if v.category is not VertexCategory.ADDRESS_LITERAL:
            continue
        degree = sum(
            1
            for e in graph.edges
            if e.kind is not EdgeKind.CONTAINS and v.id in (e.a, e.b)
        )
        total += max(0, degree - 1)
    return total


def tally_edge_kinds(graph: NetGraph) -> "tuple[int, int, int]":
    counts = {kind: 0 for kind in EdgeKind}
    for e in graph.edges:
        counts[e.kind] += 1
    return counts[EdgeKind.LOOSE], counts[EdgeKind.TIGHT], counts[EdgeKind.CONTAINS]
