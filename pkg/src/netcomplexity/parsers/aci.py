"""Parser for group-policy fabric exports.

Input is one JSON document with a fabric section (leaves and their ports) and
a tenant section (VRFs, bridge domains, L3Outs, filters, contracts, EPGs).
Everything in this dialect is an explicit object reference, so all refs are
tight; the only literals come from bridge-domain subnet declarations, which
populate the owning resource's cidr list without creating citation edges.
"""

from __future__ import annotations

from ..errors import ParseError
from ..graph import EdgeKind
from ..resources import ResourceSet


def _name_of(obj, where: str) -> str:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    name = obj.get("name")
    if not name:
        raise ParseError(f"{where}: missing 'name'")
    return name


def parse_aci(policy_doc) -> ResourceSet:
    if not isinstance(policy_doc, dict):
        raise ParseError("policy document must be an object")
    rs = ResourceSet("aci")

    fabric = policy_doc.get("fabric") or {}
    for li, leaf in enumerate(fabric.get("leaves") or []):
        leaf_name = _name_of(leaf, f"fabric leaf {li}")
        rs.new("leaf", leaf_name)
        for pi, port_name in enumerate(leaf.get("ports") or []):
            if not isinstance(port_name, str) or not port_name:
                raise ParseError(f"leaf {leaf_name!r} port {pi}: expected a port name")
            port = rs.new("port", f"{leaf_name}/{port_name}")
            port.add_ref("leaf", leaf_name, EdgeKind.TIGHT, "onLeaf")

    tenant_doc = policy_doc.get("tenant")
    if tenant_doc is None:
        raise ParseError("policy document has no 'tenant' section")
    tenant = _name_of(tenant_doc, "tenant")
    rs.new("tenant", tenant)

    def scoped(name: str) -> str:
        return f"{tenant}/{name}"

    for vi, vrf in enumerate(tenant_doc.get("vrfs") or []):
        name = _name_of(vrf, f"vrf {vi}")
        r = rs.new("vrf", scoped(name))
        r.add_ref("tenant", tenant, EdgeKind.TIGHT, "partOf")

    for bi, bd in enumerate(tenant_doc.get("bridgeDomains") or []):
        name = _name_of(bd, f"bridge domain {bi}")
        r = rs.new("bridgeDomain", scoped(name))
        r.add_ref("tenant", tenant, EdgeKind.TIGHT, "partOf")
        if bd.get("vrf"):
            r.add_ref("vrf", scoped(bd["vrf"]), EdgeKind.TIGHT, "vrf")
        r.cidrs.extend(bd.get("subnets") or [])

    for li, l3out in enumerate(tenant_doc.get("l3outs") or []):
        name = _name_of(l3out, f"l3out {li}")
        r = rs.new("l3out", scoped(name))
        r.add_ref("tenant", tenant, EdgeKind.TIGHT, "partOf")
        if l3out.get("vrf"):
            r.add_ref("vrf", scoped(l3out["vrf"]), EdgeKind.TIGHT, "vrf")
        for contract in l3out.get("consumedContracts") or []:
            r.add_ref("contract", scoped(contract), EdgeKind.TIGHT, "consumes")

    for fi, flt in enumerate(tenant_doc.get("filters") or []):
        name = _name_of(flt, f"filter {fi}")
        r = rs.new("filter", scoped(name))
        r.add_ref("tenant", tenant, EdgeKind.TIGHT, "partOf")

    for ci, contract in enumerate(tenant_doc.get("contracts") or []):
        name = _name_of(contract, f"contract {ci}")
        r = rs.new("contract", scoped(name))
        r.add_ref("tenant", tenant, EdgeKind.TIGHT, "partOf")
        for flt in contract.get("filters") or []:
            r.add_ref("filter", scoped(flt), EdgeKind.TIGHT, "filter")

    for ei, epg in enumerate(tenant_doc.get("epgs") or []):
        name = _name_of(epg, f"epg {ei}")
        r = rs.new("epg", scoped(name))
        if epg.get("bridgeDomain"):
            r.add_ref("bridgeDomain", scoped(epg["bridgeDomain"]), EdgeKind.TIGHT, "bridgeDomain")
        for contract in epg.get("providedContracts") or []:
            r.add_ref("contract", scoped(contract), EdgeKind.TIGHT, "provides")
        for contract in epg.get("consumedContracts") or []:
            r.add_ref("contract", scoped(contract), EdgeKind.TIGHT, "consumes")
        for si, binding in enumerate(epg.get("staticPorts") or []):
            leaf = binding.get("leaf")
            port = binding.get("port")
            if not leaf or not port:
                raise ParseError(f"epg {name!r} static port {si}: needs 'leaf' and 'port'")
            r.add_ref("port", f"{leaf}/{port}", EdgeKind.TIGHT, "staticPort")

    return rs
