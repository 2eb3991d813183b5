"""Parser for cloud resource exports (flat JSON resource lists).

Recognizes the networking resource types of the model: virtual networks with
subnets and peerings, VMs, NICs with exploded ipconfigs, public IPs, route
tables with routes, NSGs with rules, a firewall with its policy tree, IP
groups, and application security groups. Id-based property references become
tight refs; IP and CIDR strings typed in properties become loose refs to
address literals; declared prefixes (vnet address space, subnet prefix) only
populate the resource's cidr list.
"""

from __future__ import annotations

from ..errors import ParseError
from ..graph import EdgeKind
from ..resources import Resource, ResourceSet

TYPE_MAP = {
    "Microsoft.Network/virtualNetworks": "vnet",
    "Microsoft.Network/virtualNetworks/subnets": "subnet",
    "Microsoft.Network/virtualNetworks/virtualNetworkPeerings": "peering",
    "Microsoft.Compute/virtualMachines": "vm",
    "Microsoft.Network/networkInterfaces": "nic",
    "Microsoft.Network/publicIPAddresses": "publicIp",
    "Microsoft.Network/routeTables": "routeTable",
    "Microsoft.Network/networkSecurityGroups": "nsg",
    "Microsoft.Network/azureFirewalls": "firewall",
    "Microsoft.Network/firewallPolicies": "firewallPolicy",
    "Microsoft.Network/firewallPolicies/ruleCollections": "ruleCollection",
    "Microsoft.Network/ipGroups": "ipGroup",
    "Microsoft.Network/applicationSecurityGroups": "asg",
}

_ID_SEGMENTS = {
    "virtualNetworks": "vnet",
    "subnets": "subnet",
    "virtualNetworkPeerings": "peering",
    "virtualMachines": "vm",
    "networkInterfaces": "nic",
    "publicIPAddresses": "publicIp",
    "routeTables": "routeTable",
    "networkSecurityGroups": "nsg",
    "azureFirewalls": "firewall",
    "firewallPolicies": "firewallPolicy",
    "ipGroups": "ipGroup",
    "applicationSecurityGroups": "asg",
}


_SCOPE_SEGMENTS = {"subscriptions", "resourceGroups", "providers"}


def _target_from_id(id_str: str, where: str) -> "tuple[str, str]":
    """Map a reference id to (type_name, key).

    Accepts both short ids (/virtualNetworks/app1/subnets/tier1) and absolute
    ones with subscription/resource-group/provider scope pairs in front.
    """
    if not isinstance(id_str, str) or not id_str:
        raise ParseError(f"{where}: reference id must be a non-empty string")
    segments = [s for s in id_str.split("/") if s]
    if len(segments) < 2 or len(segments) % 2 != 0:
        raise ParseError(f"{where}: malformed reference id {id_str!r}")
    type_name = None
    names = []
    for i in range(0, len(segments), 2):
        mapped = _ID_SEGMENTS.get(segments[i])
        if mapped is None:
            if not names and segments[i] in _SCOPE_SEGMENTS:
                continue
            raise ParseError(f"{where}: unrecognized segment {segments[i]!r} in id {id_str!r}")
        type_name = mapped
        names.append(segments[i + 1])
    if type_name is None:
        raise ParseError(f"{where}: reference id {id_str!r} names no resource")
    return type_name, "/".join(names)


def _tight(resource: Resource, id_str, where: str, relationship: str):
    ttype, tkey = _target_from_id(id_str, where)
    resource.add_ref(ttype, tkey, EdgeKind.TIGHT, relationship)


def _is_address_token(token: str) -> bool:
    """IP-looking tokens start with a digit; everything else is a service tag
    or wildcard and produces no literal."""
    return bool(token) and token[0].isdigit()


def _cite_addresses(resource: Resource, values, relationship: str):
    for token in values or []:
        if isinstance(token, str) and _is_address_token(token):
            resource.cite_ip(token, relationship)


def parse_azure(documents) -> ResourceSet:
    rs = ResourceSet("azure")
    for di, doc in enumerate(documents):
        if isinstance(doc, dict) and isinstance(doc.get("resources"), list):
            items = doc["resources"]
        elif isinstance(doc, list):
            items = doc
        else:
            raise ParseError(
                f"document {di}: expected a resource list or an object with a 'resources' list"
            )
        for ri, item in enumerate(items):
            _parse_resource(rs, item, f"document {di}, resource {ri}")
    return rs


def _require(item: dict, field: str, where: str):
    value = item.get(field)
    if not value:
        raise ParseError(f"{where}: missing {field!r}")
    return value


def _parse_resource(rs: ResourceSet, item, where: str):
    if not isinstance(item, dict):
        raise ParseError(f"{where}: resource must be an object")
    rtype = _require(item, "type", where)
    name = _require(item, "name", where)
    mapped = TYPE_MAP.get(rtype)
    if mapped is None:
        rs.warnings.append(f"{where}: skipped unknown resource type {rtype!r}")
        return
    props = item.get("properties", {}) or {}
    handler = _HANDLERS[mapped]
    handler(rs, name, props, where)


def _child_key(name: str, where: str, expected_depth: int) -> "list[str]":
    parts = name.split("/")
    if len(parts) != expected_depth:
        raise ParseError(
            f"{where}: name {name!r} must have {expected_depth} segments separated by '/'"
        )
    return parts


def _parse_vnet(rs, name, props, where):
    r = rs.new("vnet", name)
    prefixes = (props.get("addressSpace") or {}).get("addressPrefixes") or []
    r.cidrs.extend(prefixes)
    for server in (props.get("dhcpOptions") or {}).get("dnsServers") or []:
        r.cite_ip(server, "dnsServer")


def _parse_subnet(rs, name, props, where):
    vnet, _ = _child_key(name, where, 2)
    r = rs.new("subnet", name)
    r.add_ref("vnet", vnet, EdgeKind.TIGHT, "partOf")
    if props.get("addressPrefix"):
        r.cidrs.append(props["addressPrefix"])
    if props.get("routeTable"):
        _tight(r, props["routeTable"].get("id"), where, "routeTable")
    if props.get("networkSecurityGroup"):
        _tight(r, props["networkSecurityGroup"].get("id"), where, "securityGroup")


def _parse_peering(rs, name, props, where):
    vnet, _ = _child_key(name, where, 2)
    r = rs.new("peering", name)
    r.add_ref("vnet", vnet, EdgeKind.TIGHT, "partOf")
    remote = props.get("remoteVirtualNetwork") or {}
    _tight(r, remote.get("id"), where, "peersWith")


def _parse_vm(rs, name, props, where):
    r = rs.new("vm", name)
    for nic in (props.get("networkProfile") or {}).get("networkInterfaces") or []:
        _tight(r, nic.get("id"), where, "nic")


def _parse_ipconfigs(rs, owner_type, owner_key, props, where):
    for cfg in props.get("ipConfigurations") or []:
        cfg_name = _require(cfg, "name", where)
        cfg_props = cfg.get("properties", {}) or {}
        r = rs.new("ipconfig", f"{owner_key}/{cfg_name}")
        r.add_ref(owner_type, owner_key, EdgeKind.TIGHT, "partOf")
        if cfg_props.get("subnet"):
            _tight(r, cfg_props["subnet"].get("id"), where, "subnet")
        if cfg_props.get("publicIPAddress"):
            _tight(r, cfg_props["publicIPAddress"].get("id"), where, "publicIp")
        for asg in cfg_props.get("applicationSecurityGroups") or []:
            _tight(r, asg.get("id"), where, "memberOfAsg")
        if cfg_props.get("privateIPAddress"):
            r.cite_ip(cfg_props["privateIPAddress"], "privateIp")
        if cfg_props.get("privateIPAllocationMethod"):
            r.attributes["allocation"] = str(cfg_props["privateIPAllocationMethod"])


def _parse_nic(rs, name, props, where):
    r = rs.new("nic", name)
    if props.get("networkSecurityGroup"):
        _tight(r, props["networkSecurityGroup"].get("id"), where, "securityGroup")
    _parse_ipconfigs(rs, "nic", name, props, where)


def _parse_public_ip(rs, name, props, where):
    r = rs.new("publicIp", name)
    if props.get("publicIPAllocationMethod"):
        r.attributes["allocation"] = str(props["publicIPAllocationMethod"])


def _parse_route_table(rs, name, props, where):
    rs.new("routeTable", name)
    for route in props.get("routes") or []:
        route_name = _require(route, "name", where)
        route_props = route.get("properties", {}) or {}
        r = rs.new("route", f"{name}/{route_name}")
        r.add_ref("routeTable", name, EdgeKind.TIGHT, "partOf")
        if route_props.get("addressPrefix"):
            r.cite_ip(route_props["addressPrefix"], "routePrefix")
        if route_props.get("nextHopIpAddress"):
            r.cite_ip(route_props["nextHopIpAddress"], "nextHop")
        if route_props.get("nextHopType"):
            r.attributes["nextHopType"] = str(route_props["nextHopType"])


def _prefix_values(props: dict, singular: str, plural: str) -> "list[str]":
    values = list(props.get(plural) or [])
    if props.get(singular):
        values.append(props[singular])
    return values


def _parse_nsg(rs, name, props, where):
    rs.new("nsg", name)
    for rule in props.get("securityRules") or []:
        rule_name = _require(rule, "name", where)
        rule_props = rule.get("properties", {}) or {}
        r = rs.new("nsgRule", f"{name}/{rule_name}")
        r.add_ref("nsg", name, EdgeKind.TIGHT, "partOf")
        _cite_addresses(
            r,
            _prefix_values(rule_props, "sourceAddressPrefix", "sourceAddressPrefixes"),
            "sourceAddress",
        )
        _cite_addresses(
            r,
            _prefix_values(rule_props, "destinationAddressPrefix", "destinationAddressPrefixes"),
            "destinationAddress",
        )
        for asg in rule_props.get("sourceApplicationSecurityGroups") or []:
            _tight(r, asg.get("id"), where, "sourceAsg")
        for asg in rule_props.get("destinationApplicationSecurityGroups") or []:
            _tight(r, asg.get("id"), where, "destinationAsg")
        for attr in ("access", "direction", "priority"):
            if rule_props.get(attr) is not None:
                r.attributes[attr] = str(rule_props[attr])


def _parse_firewall(rs, name, props, where):
    r = rs.new("firewall", name)
    if props.get("firewallPolicy"):
        _tight(r, props["firewallPolicy"].get("id"), where, "policy")
    _parse_ipconfigs(rs, "firewall", name, props, where)


def _parse_firewall_policy(rs, name, props, where):
    rs.new("firewallPolicy", name)


def _parse_rule_collection(rs, name, props, where):
    policy, _ = _child_key(name, where, 2)
    r = rs.new("ruleCollection", name)
    r.add_ref("firewallPolicy", policy, EdgeKind.TIGHT, "partOf")
    if props.get("priority") is not None:
        r.attributes["priority"] = str(props["priority"])
    for rule in props.get("rules") or []:
        rule_name = _require(rule, "name", where)
        fr = rs.new("fwRule", f"{name}/{rule_name}")
        fr.add_ref("ruleCollection", name, EdgeKind.TIGHT, "partOf")
        for group_id in rule.get("sourceIpGroups") or []:
            _tight(fr, group_id, where, "sourceIpGroup")
        for group_id in rule.get("destinationIpGroups") or []:
            _tight(fr, group_id, where, "destinationIpGroup")
        _cite_addresses(fr, rule.get("sourceAddresses"), "sourceAddress")
        _cite_addresses(fr, rule.get("destinationAddresses"), "destinationAddress")


def _parse_ip_group(rs, name, props, where):
    r = rs.new("ipGroup", name)
    for member in props.get("ipAddresses") or []:
        r.cite_ip(member, "member")


def _parse_asg(rs, name, props, where):
    rs.new("asg", name)


_HANDLERS = {
    "vnet": _parse_vnet,
    "subnet": _parse_subnet,
    "peering": _parse_peering,
    "vm": _parse_vm,
    "nic": _parse_nic,
    "publicIp": _parse_public_ip,
    "routeTable": _parse_route_table,
    "nsg": _parse_nsg,
    "firewall": _parse_firewall,
    "firewallPolicy": _parse_firewall_policy,
    "ruleCollection": _parse_rule_collection,
    "ipGroup": _parse_ip_group,
    "asg": _parse_asg,
}
