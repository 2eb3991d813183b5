"""Registry mapping (dialect, type name) to category and endpoint flag.

The built-in default covers every type the bundled parsers and generators can
emit. A taxonomy file replaces the default wholesale (no merging) so that the
provenance of each classification stays unambiguous.

File format: plain text, one entry per line, four whitespace-separated
columns: dialect, type_name, category, endpoint flag (0 or 1). '#' starts a
comment.
"""

from __future__ import annotations

from .errors import TaxonomyError
from .graph import VertexCategory

DEFAULT_TAXONOMY_TEXT = """\
# Built-in vertex-type taxonomy.
# Columns: dialect  type_name  category  endpoint_flag
# category: infrastructure | policy | address_literal
# endpoint_flag: 1 when vertices of this type are workload endpoints, else 0.

azure  vnet            infrastructure   0
azure  subnet          infrastructure   0
azure  vm              infrastructure   1
azure  nic             infrastructure   0
azure  ipconfig        infrastructure   0
azure  publicIp        infrastructure   0
azure  routeTable      infrastructure   0
azure  firewall        infrastructure   0
azure  peering         policy           0
azure  route           policy           0
azure  nsg             policy           0
azure  nsgRule         policy           0
azure  firewallPolicy  policy           0
azure  ruleCollection  policy           0
azure  fwRule          policy           0
azure  ipGroup         policy           0
azure  asg             policy           0
azure  ipv4            address_literal  0

k8s    namespace       infrastructure   0
k8s    pod             infrastructure   1
k8s    service         policy           0
k8s    networkPolicy   policy           0
k8s    label           policy           0
k8s    ipv4            address_literal  0

cli    switch          infrastructure   0
cli    port            infrastructure   1
cli    svi             infrastructure   0
cli    vlan            infrastructure   0
cli    acl             policy           0
cli    ipv4            address_literal  0

aci    tenant          infrastructure   0
aci    vrf             infrastructure   0
aci    bridgeDomain    infrastructure   0
aci    l3out           infrastructure   0
aci    leaf            infrastructure   0
aci    port            infrastructure   1
aci    epg             policy           0
aci    contract        policy           0
aci    filter          policy           0
aci    ipv4            address_literal  0
"""

_CATEGORIES = {c.value: c for c in VertexCategory}


class Taxonomy:
    def __init__(self, entries: "dict[tuple[str, str], tuple[VertexCategory, bool]]"):
        self._entries = dict(entries)

    @classmethod
    def from_text(cls, text: str, source: str = "<text>") -> "Taxonomy":
        entries = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 4:
                raise TaxonomyError(
                    f"{source} line {lineno}: expected 4 columns "
                    f"(dialect type_name category endpoint_flag), got {len(fields)}"
                )
            dialect, type_name, category_token, flag_token = fields
            category = _CATEGORIES.get(category_token)
            if category is None:
                raise TaxonomyError(
                    f"{source} line {lineno}: unknown category {category_token!r}"
                )
            if flag_token not in ("0", "1"):
                raise TaxonomyError(
                    f"{source} line {lineno}: endpoint flag must be 0 or 1, got {flag_token!r}"
                )
            key = (dialect, type_name)
            if key in entries:
                raise TaxonomyError(f"{source} line {lineno}: duplicate entry for {key}")
            entries[key] = (category, flag_token == "1")
        if not entries:
            raise TaxonomyError(f"{source}: no taxonomy entries found")
        return cls(entries)

    @classmethod
    def from_file(cls, path) -> "Taxonomy":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_text(handle.read(), source=str(path))

    @classmethod
    def default(cls) -> "Taxonomy":
        return cls.from_text(DEFAULT_TAXONOMY_TEXT, source="<default>")

    def get(self, dialect: str, type_name: str) -> "tuple[VertexCategory, bool] | None":
        return self._entries.get((dialect, type_name))

    def resolve(self, dialect: str, type_name: str) -> "tuple[VertexCategory, bool]":
        entry = self._entries.get((dialect, type_name))
        if entry is None:
            raise TaxonomyError(f"no taxonomy entry for type {type_name!r} in dialect {dialect!r}")
        return entry

    def __len__(self) -> int:
        return len(self._entries)
