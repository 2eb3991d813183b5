"""Typed undirected property multigraph for network configurations.

Vertices carry a dialect-local type name resolved to one of three categories
(policy, infrastructure, address literal); edges carry a coupling kind and a
relationship label. Parallel edges are allowed as long as their labels differ.
Graphs are append-only: there is no deletion API because the library analyses
configurations, it does not edit them.
"""

from __future__ import annotations

import ipaddress
from dataclasses import dataclass
from enum import Enum

from .errors import CidrError, GraphError


class VertexCategory(Enum):
    POLICY = "policy"
    INFRASTRUCTURE = "infrastructure"
    ADDRESS_LITERAL = "address_literal"


class EdgeKind(Enum):
    LOOSE = "loose"
    TIGHT = "tight"
    CONTAINS = "contains"


@dataclass(frozen=True)
class Cidr:
    """A validated IPv4 prefix.

    Wraps the stdlib network type so parsing and containment reuse its
    validation. A bare address parses as a /32. Host bits below the mask must
    be zero; ``10.0.0.1/24`` is rejected rather than silently truncated,
    because a typo in a typed literal is exactly what the analysis is after.
    """

    network: ipaddress.IPv4Network

    @classmethod
    def parse(cls, text: str) -> "Cidr":
        if not isinstance(text, str) or not text.strip():
            raise CidrError(f"invalid IPv4 prefix {text!r}: empty or not a string")
        value = text.strip()
        if "/" not in value:
            value += "/32"
        try:
            return cls(ipaddress.IPv4Network(value, strict=True))
        except (ipaddress.AddressValueError, ipaddress.NetmaskValueError, ValueError) as exc:
            raise CidrError(f"invalid IPv4 prefix {text!r}: {exc}") from None

    @property
    def prefixlen(self) -> int:
        return self.network.prefixlen

    @property
    def text(self) -> str:
        return str(self.network)

    def contains(self, other: "Cidr") -> bool:
        """Strict containment: equal prefixes do not contain each other."""
        return self.network != other.network and other.network.subnet_of(self.network)

    def __str__(self) -> str:
        return self.text


def cidr_contains(outer: "Cidr | str", inner: "Cidr | str") -> bool:
    """True iff inner's address range is a strict subset of outer's."""
    if not isinstance(outer, Cidr):
        outer = Cidr.parse(outer)
    if not isinstance(inner, Cidr):
        inner = Cidr.parse(inner)
    return outer.contains(inner)


@dataclass
class Vertex:
    id: str
    dialect: str
    type_name: str
    display_name: str
    category: VertexCategory
    is_endpoint: bool = False
    cidr: "Cidr | None" = None


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    kind: EdgeKind
    label: str

    def key(self) -> tuple:
        """Identity of an undirected edge: sorted endpoint pair, kind, label."""
        lo, hi = (self.a, self.b) if self.a <= self.b else (self.b, self.a)
        return (lo, hi, self.kind.value, self.label)


class NetGraph:
    """An undirected multigraph of one parsed or generated configuration.

    Uniqueness rules enforced at insert time: vertex ids are unique, an edge
    with an already-present (pair, kind, label) identity is silently skipped,
    and self-loops are rejected. Category invariants (literals never touch
    tight edges, and so on) are checked by validate_graph instead, so that
    malformed graphs can be represented and reported on.
    """

    def __init__(self, name: str):
        self.name = name
        self._vertices: "dict[str, Vertex]" = {}
        self._edges: "list[Edge]" = []
        self._edge_keys: set = set()
        self._kind_counts = {kind: 0 for kind in EdgeKind}
        self._noncontains_degree: "dict[str, int]" = {}
        self.warnings: "list[str]" = []

    def add_vertex(self, vertex: Vertex) -> Vertex:
        if vertex.id in self._vertices:
            raise GraphError(f"duplicate vertex id {vertex.id!r} in graph {self.name!r}")
        self._vertices[vertex.id] = vertex
        self._noncontains_degree[vertex.id] = 0
        return vertex

    def add_edge(self, a: str, b: str, kind: EdgeKind, label: str) -> "Edge | None":
        """Insert an edge, returning it, or None when it already exists."""
        for end in (a, b):
            if end not in self._vertices:
                raise GraphError(f"edge endpoint {end!r} is not a vertex of graph {self.name!r}")
        if a == b:
            raise GraphError(f"self-loop on {a!r} is not allowed")
        edge = Edge(a, b, kind, label)
        key = edge.key()
        if key in self._edge_keys:
            return None
        self._edge_keys.add(key)
        self._edges.append(edge)
        self._kind_counts[kind] += 1
        if kind is not EdgeKind.CONTAINS:
            self._noncontains_degree[a] += 1
            self._noncontains_degree[b] += 1
        return edge

    def has_vertex(self, vertex_id: str) -> bool:
        return vertex_id in self._vertices

    def vertex(self, vertex_id: str) -> Vertex:
        try:
            return self._vertices[vertex_id]
        except KeyError:
            raise GraphError(f"no vertex {vertex_id!r} in graph {self.name!r}") from None

    @property
    def vertices(self) -> "list[Vertex]":
        return list(self._vertices.values())

    @property
    def edges(self) -> "list[Edge]":
        return list(self._edges)

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edges_by_kind(self, kind: EdgeKind) -> int:
        return self._kind_counts[kind]

    def noncontains_degree(self, vertex_id: str) -> int:
        """Degree of a vertex counting loose and tight edges only."""
        if vertex_id not in self._vertices:
            raise GraphError(f"no vertex {vertex_id!r} in graph {self.name!r}")
        return self._noncontains_degree[vertex_id]

    def literals(self) -> "list[Vertex]":
        return [v for v in self._vertices.values() if v.category is VertexCategory.ADDRESS_LITERAL]


def derive_contains_edges(graph: NetGraph) -> NetGraph:
    """Link every address literal to its immediate covering prefix(es).

    Only immediate parents are linked (transitive reduction), keeping the
    containment relation a forest. Idempotent: re-running adds nothing because
    edge identities already exist.
    """
    lits = graph.literals()
    for v in lits:
        if v.cidr is None:
            raise GraphError(f"address literal {v.id!r} has no cidr payload")
    for child in lits:
        parents = [u for u in lits if u.cidr.contains(child.cidr)]
        if not parents:
            continue
        closest = max(u.cidr.prefixlen for u in parents)
        for u in sorted((u for u in parents if u.cidr.prefixlen == closest), key=lambda u: u.id):
            graph.add_edge(u.id, child.id, EdgeKind.CONTAINS, "contains")
    return graph


def validate_graph(graph: NetGraph, taxonomy) -> "list[str]":
    """Return a list of invariant violations; empty means well-formed.

    Violations are data rather than exceptions so a caller can report all of
    them at once.
    """
    violations = []
    for v in graph.vertices:
        entry = taxonomy.get(v.dialect, v.type_name)
        if entry is None:
            violations.append(f"vertex {v.id!r}: unmapped type ({v.dialect}, {v.type_name})")
        else:
            category, endpoint = entry
            if category is not v.category:
                violations.append(
                    f"vertex {v.id!r}: category {v.category.value} disagrees with "
                    f"taxonomy ({category.value})"
                )
            if endpoint != v.is_endpoint:
                violations.append(f"vertex {v.id!r}: endpoint flag disagrees with taxonomy")
        if (v.cidr is not None) != (v.category is VertexCategory.ADDRESS_LITERAL):
            violations.append(
                f"vertex {v.id!r}: cidr payload must be present exactly for address literals"
            )
        if v.is_endpoint and v.category is not VertexCategory.INFRASTRUCTURE:
            violations.append(f"vertex {v.id!r}: endpoint flag on a {v.category.value} vertex")
    for e in graph.edges:
        ends = []
        for end in (e.a, e.b):
            if not graph.has_vertex(end):
                violations.append(f"edge {e.a!r}--{e.b!r} ({e.label}): missing endpoint {end!r}")
            else:
                ends.append(graph.vertex(end))
        if len(ends) != 2:
            continue
        literal_ends = [v for v in ends if v.category is VertexCategory.ADDRESS_LITERAL]
        if e.kind is EdgeKind.CONTAINS and len(literal_ends) != 2:
            violations.append(
                f"edge {e.a!r}--{e.b!r} ({e.label}): contains edge between non-literals"
            )
        if e.kind is EdgeKind.TIGHT and literal_ends:
            violations.append(
                f"edge {e.a!r}--{e.b!r} ({e.label}): tight edge incident to an address literal"
            )
    return violations
