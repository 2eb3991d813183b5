"""Dialect-neutral intermediate representation between parsers and graphs.

Parsers and generators emit Resource objects; build_graph turns a ResourceSet
into a categorized NetGraph. Address literals get one shared vertex per
distinct prefix string: declared prefixes (a vnet address space, a subnet
prefix) create the vertex without any edge, while typed citations create
loose edges to it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import BuildError
from .graph import Cidr, EdgeKind, NetGraph, Vertex, VertexCategory, derive_contains_edges

LITERAL_TYPE = "ipv4"


@dataclass
class ResourceRef:
    """One reference from a resource to another object or to a literal.

    target_type is a dialect type name; "ipv4" targets an address literal and
    target_key is then the prefix string as the operator typed it. Tight refs
    must resolve to an existing resource at build time, loose refs may dangle.
    """

    target_type: str
    target_key: str
    coupling: EdgeKind
    relationship: str


@dataclass
class Resource:
    dialect: str
    type_name: str
    key: str
    attributes: "dict[str, str]" = field(default_factory=dict)
    refs: "list[ResourceRef]" = field(default_factory=list)
    cidrs: "list[str]" = field(default_factory=list)

    def add_ref(self, target_type: str, target_key: str, coupling: EdgeKind, relationship: str):
        self.refs.append(ResourceRef(target_type, target_key, coupling, relationship))

    def cite_ip(self, prefix: str, relationship: str):
        """Record a loose reference to a typed IPv4 literal."""
        self.add_ref(LITERAL_TYPE, prefix, EdgeKind.LOOSE, relationship)


class ResourceSet:
    def __init__(self, dialect: str):
        self.dialect = dialect
        self._resources: "list[Resource]" = []
        self._index: "dict[tuple[str, str], Resource]" = {}
        self.warnings: "list[str]" = []

    def add(self, resource: Resource) -> Resource:
        if resource.dialect != self.dialect:
            raise BuildError(
                f"resource dialect {resource.dialect!r} does not match set dialect {self.dialect!r}"
            )
        key = (resource.type_name, resource.key)
        if key in self._index:
            raise BuildError(f"duplicate resource {resource.type_name}/{resource.key}")
        self._index[key] = resource
        self._resources.append(resource)
        return resource

    def new(self, type_name: str, key: str, **kwargs) -> Resource:
        return self.add(Resource(self.dialect, type_name, key, **kwargs))

    def get(self, type_name: str, key: str) -> "Resource | None":
        return self._index.get((type_name, key))

    def has(self, type_name: str, key: str) -> bool:
        return (type_name, key) in self._index

    def __iter__(self):
        return iter(self._resources)

    def __len__(self) -> int:
        return len(self._resources)

    def to_json(self) -> str:
        """Serialize to a neutral JSON form (stable field and key order)."""
        payload = {
            "dialect": self.dialect,
            "resources": [
                {
                    "type_name": r.type_name,
                    "key": r.key,
                    "attributes": r.attributes,
                    "cidrs": r.cidrs,
                    "refs": [
                        {
                            "target_type": ref.target_type,
                            "target_key": ref.target_key,
                            "coupling": ref.coupling.value,
                            "relationship": ref.relationship,
                        }
                        for ref in r.refs
                    ],
                }
                for r in self._resources
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def merge_resource_sets(sets: "list[ResourceSet]") -> ResourceSet:
    """Merge several sets of one dialect, uniting duplicate-keyed resources.

    The CLI dialect needs this: two switches may define the same VLAN or the
    same named ACL, and those must land on a single vertex. The first
    occurrence wins for attributes; refs and declared prefixes accumulate
    (duplicate citations collapse later via edge identity).
    """
    if not sets:
        raise BuildError("nothing to merge: no resource sets given")
    dialects = {rs.dialect for rs in sets}
    if len(dialects) != 1:
        raise BuildError(f"cannot merge resource sets of mixed dialects {sorted(dialects)}")
    merged = ResourceSet(sets[0].dialect)
    for rs in sets:
        merged.warnings.extend(rs.warnings)
        for resource in rs:
            existing = merged.get(resource.type_name, resource.key)
            if existing is None:
                merged.new(
                    resource.type_name,
                    resource.key,
                    attributes=dict(resource.attributes),
                    refs=list(resource.refs),
                    cidrs=list(resource.cidrs),
                )
            else:
                existing.refs.extend(resource.refs)
                existing.cidrs.extend(resource.cidrs)
                for k, v in resource.attributes.items():
                    existing.attributes.setdefault(k, v)
    return merged


def build_graph(rs: ResourceSet, taxonomy, name: "str | None" = None) -> NetGraph:
    """Build a categorized graph: one vertex per resource, one per distinct
    literal, one edge per reference, then derive containment edges.

    Raises TaxonomyError for unmapped types, BuildError for unresolved tight
    refs, CidrError for malformed prefixes. Dangling loose references get a
    placeholder vertex plus a warning on the returned graph.
    """
    graph = NetGraph(name if name is not None else rs.dialect)
    graph.warnings.extend(rs.warnings)

    for r in rs:
        if r.type_name == LITERAL_TYPE:
            raise BuildError(
                f"resource {r.key!r} is typed {LITERAL_TYPE!r}; literals arise only from "
                "declared prefixes and citations"
            )
        category, endpoint = taxonomy.resolve(rs.dialect, r.type_name)
        if category is VertexCategory.ADDRESS_LITERAL:
            raise BuildError(
                f"taxonomy maps resource type {r.type_name!r} to address_literal; "
                "only ipv4 literals may carry that category"
            )
        graph.add_vertex(
            Vertex(
                id=f"{r.type_name}/{r.key}",
                dialect=rs.dialect,
                type_name=r.type_name,
                display_name=r.key,
                category=category,
                is_endpoint=endpoint,
            )
        )

    def literal_vertex(text: str) -> str:
        cidr = Cidr.parse(text)
        vid = f"{LITERAL_TYPE}/{cidr.text}"
        if not graph.has_vertex(vid):
            category, endpoint = taxonomy.resolve(rs.dialect, LITERAL_TYPE)
            graph.add_vertex(
                Vertex(
                    id=vid,
                    dialect=rs.dialect,
                    type_name=LITERAL_TYPE,
                    display_name=cidr.text,
                    category=category,
                    is_endpoint=endpoint,
                    cidr=cidr,
                )
            )
        return vid

    for r in rs:
        for declared in r.cidrs:
            literal_vertex(declared)

    for r in rs:
        source_id = f"{r.type_name}/{r.key}"
        for ref in r.refs:
            if ref.coupling not in (EdgeKind.LOOSE, EdgeKind.TIGHT):
                raise BuildError(
                    f"{source_id}: ref coupling must be loose or tight, got {ref.coupling.value}"
                )
            if ref.target_type == LITERAL_TYPE:
                if ref.coupling is EdgeKind.TIGHT:
                    raise BuildError(
                        f"{source_id}: tight ref to address literal {ref.target_key!r}; "
                        "literal references are by-value and must be loose"
                    )
                target_id = literal_vertex(ref.target_key)
            else:
                target_id = f"{ref.target_type}/{ref.target_key}"
                if not graph.has_vertex(target_id):
                    if ref.coupling is EdgeKind.TIGHT:
                        raise BuildError(
                            f"unresolved tight ref: {source_id} -> {target_id} "
                            f"({ref.relationship})"
                        )
                    category, endpoint = taxonomy.resolve(rs.dialect, ref.target_type)
                    graph.add_vertex(
                        Vertex(
                            id=target_id,
                            dialect=rs.dialect,
                            type_name=ref.target_type,
                            display_name=ref.target_key,
                            category=category,
                            is_endpoint=endpoint,
                        )
                    )
                    graph.warnings.append(
                        f"dangling loose reference: {source_id} -> {ref.target_type} "
                        f"{ref.target_key!r} ({ref.relationship})"
                    )
            graph.add_edge(source_id, target_id, ref.coupling, ref.relationship)

    return derive_contains_edges(graph)
