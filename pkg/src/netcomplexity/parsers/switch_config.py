"""Parser for switch CLI running-config text.

One call handles one device's config. Recognized constructs: hostname, vlan
definitions, interfaces (SVIs and physical ports), extended ACLs, static
routes, and vty access-class lines. Every IP or prefix typed in the config
becomes a loose citation of an address literal; an SVI's `ip address A M`
cites the connected subnet prefix (the network of A/M), since that is the
fact the line pins into the config.

ACLs are keyed by bare name, not per device, so identical ACL definitions
pasted onto several switches merge into one resource when the per-device
results are combined.
"""

from __future__ import annotations

import ipaddress
import re

from ..errors import ParseError
from ..graph import EdgeKind
from ..resources import Resource, ResourceSet

_SVI_RE = re.compile(r"^[Vv]lan(\d+)$")


def _mask_to_prefixlen(mask: str, where: str) -> int:
    try:
        value = int(ipaddress.IPv4Address(mask))
    except ipaddress.AddressValueError:
        raise ParseError(f"{where}: bad netmask {mask!r}") from None
    inverted = value ^ 0xFFFFFFFF
    if (inverted + 1) & inverted:
        raise ParseError(f"{where}: non-contiguous netmask {mask!r}")
    return 32 - inverted.bit_length()


def _network_of(addr: str, mask: str, where: str) -> str:
    plen = _mask_to_prefixlen(mask, where)
    try:
        net = ipaddress.IPv4Network(f"{addr}/{plen}", strict=False)
    except (ipaddress.AddressValueError, ipaddress.NetmaskValueError, ValueError):
        raise ParseError(f"{where}: bad address {addr!r}") from None
    return str(net)


def _wildcard_to_prefix(addr: str, wildcard: str, where: str) -> str:
    try:
        w = int(ipaddress.IPv4Address(wildcard))
        a = int(ipaddress.IPv4Address(addr))
    except ipaddress.AddressValueError:
        raise ParseError(f"{where}: bad address/wildcard {addr!r} {wildcard!r}") from None
    if (w + 1) & w:
        raise ParseError(f"{where}: non-contiguous wildcard {wildcard!r}")
    plen = 32 - w.bit_length()
    net = ipaddress.IPv4Address(a & (0xFFFFFFFF ^ w))
    return f"{net}/{plen}"


def _block_lines(lines, start):
    """Yield (index, stripped_line) for the indented body following lines[start]."""
    i = start + 1
    while i < len(lines):
        raw = lines[i]
        if raw.strip() and not raw[0].isspace():
            break
        if raw.strip():
            yield i, raw.strip()
        i += 1


def _block_end(lines, start):
    i = start + 1
    while i < len(lines):
        if lines[i].strip() and not lines[i][0].isspace():
            break
        i += 1
    return i


class _AclEntryScanner:
    """Pulls address terms out of one permit/deny entry."""

    _SKIP_AFTER = {"eq", "range", "gt", "lt", "neq"}
    _TRAILING = {"log", "established", "log-input"}

    def __init__(self, tokens, where):
        self.tokens = tokens
        self.where = where
        self.pos = 0

    def _next(self):
        if self.pos >= len(self.tokens):
            return None
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _skip_ports(self):
        while self.pos < len(self.tokens):
            token = self.tokens[self.pos]
            if token in self._SKIP_AFTER:
                self.pos += 1
                count = 2 if token == "range" else 1
                self.pos += count
            else:
                break

    def read_address(self):
        token = self._next()
        if token is None:
            raise ParseError(f"{self.where}: truncated ACL entry")
        if token == "any":
            result = None
        elif token == "host":
            host = self._next()
            if host is None:
                raise ParseError(f"{self.where}: 'host' without an address")
            result = f"{host}/32"
        else:
            wildcard = self._next()
            if wildcard is None:
                raise ParseError(f"{self.where}: address {token!r} without a wildcard")
            result = _wildcard_to_prefix(token, wildcard, self.where)
        self._skip_ports()
        return result

    def finish(self):
        while self.pos < len(self.tokens):
            token = self._next()
            if token not in self._TRAILING:
                raise ParseError(f"{self.where}: unexpected ACL token {token!r}")


def _parse_acl_entry(acl: Resource, entry_text: str, where: str):
    tokens = entry_text.split()
    action, proto = tokens[0], tokens[1] if len(tokens) > 1 else None
    if proto is None:
        raise ParseError(f"{where}: ACL entry missing protocol")
    scanner = _AclEntryScanner(tokens[2:], where)
    src = scanner.read_address()
    dst = scanner.read_address()
    scanner.finish()
    label = f"entry:{' '.join(tokens)}"
    for prefix in (src, dst):
        if prefix is not None:
            acl.cite_ip(prefix, label)
    del action


def parse_cli(config_text: str, switch_name: str = "switch") -> ResourceSet:
    rs = ResourceSet("cli")
    lines = config_text.splitlines()

    switch_key = switch_name
    for raw in lines:
        stripped = raw.strip()
        if stripped.startswith("hostname ") and not raw[0].isspace():
            switch_key = stripped.split(None, 1)[1]
            break
    switch = rs.new("switch", switch_key)

    i = 0
    while i < len(lines):
        raw = lines[i]
        line = raw.strip()
        if not line or line.startswith("!") or raw[0].isspace():
            i += 1
            continue
        where = f"{switch_key} line {i + 1}"
        tokens = line.split()
        head = tokens[0]
        if head == "hostname":
            i += 1
        elif head == "vlan":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(f"{where}: expected 'vlan <number>'")
            vlan_key = tokens[1]
            if not rs.has("vlan", vlan_key):
                rs.new("vlan", vlan_key)
            switch.add_ref("vlan", vlan_key, EdgeKind.LOOSE, "definesVlan")
            i = _block_end(lines, i)
        elif head == "interface":
            i = _parse_interface(rs, switch_key, lines, i, tokens, where)
        elif head == "ip" and len(tokens) >= 2 and tokens[1] == "access-list":
            i = _parse_acl(rs, lines, i, tokens, where)
        elif head == "ip" and len(tokens) >= 2 and tokens[1] == "route":
            _parse_route(switch, tokens, where)
            i += 1
        elif head == "line" and len(tokens) >= 2 and tokens[1] == "vty":
            i = _parse_vty(rs, switch, lines, i, where)
        else:
            rs.warnings.append(f"{where}: skipped unrecognized line {line!r}")
            i = _block_end(lines, i)
    return rs


def _parse_interface(rs, switch_key, lines, start, tokens, where):
    if len(tokens) != 2:
        raise ParseError(f"{where}: expected 'interface <name>'")
    ifname = tokens[1]
    svi_match = _SVI_RE.match(ifname)
    if svi_match:
        r = rs.new("svi", f"{switch_key}/{ifname}")
        r.add_ref("switch", switch_key, EdgeKind.TIGHT, "onSwitch")
        vlan_key = svi_match.group(1)
        if not rs.has("vlan", vlan_key):
            rs.new("vlan", vlan_key)
        r.add_ref("vlan", vlan_key, EdgeKind.LOOSE, "sviVlan")
    else:
        r = rs.new("port", f"{switch_key}/{ifname}")
        r.add_ref("switch", switch_key, EdgeKind.TIGHT, "onSwitch")

    for bi, body in _block_lines(lines, start):
        bwhere = f"{where.rsplit(' line ', 1)[0]} line {bi + 1}"
        btokens = body.split()
        if btokens[0] == "ip" and len(btokens) >= 2 and btokens[1] == "address":
            if len(btokens) != 4:
                raise ParseError(f"{bwhere}: expected 'ip address <addr> <mask>'")
            prefix = _network_of(btokens[2], btokens[3], bwhere)
            r.cite_ip(prefix, "connectedSubnet")
        elif btokens[0] == "switchport" and btokens[1:3] == ["access", "vlan"]:
            if len(btokens) != 4 or not btokens[3].isdigit():
                raise ParseError(f"{bwhere}: expected 'switchport access vlan <number>'")
            vlan_key = btokens[3]
            if not rs.has("vlan", vlan_key):
                rs.new("vlan", vlan_key)
            r.add_ref("vlan", vlan_key, EdgeKind.LOOSE, "accessVlan")
        elif btokens[0] == "ip" and btokens[1:2] == ["access-group"]:
            if len(btokens) != 4 or btokens[3] not in ("in", "out"):
                raise ParseError(f"{bwhere}: expected 'ip access-group <name> in|out'")
            rel = "aclIn" if btokens[3] == "in" else "aclOut"
            r.add_ref("acl", btokens[2], EdgeKind.LOOSE, rel)
        elif btokens[0] in ("description", "shutdown") or body == "no shutdown":
            pass
        elif btokens[0] == "switchport" and btokens[1:2] == ["mode"]:
            pass
        else:
            rs.warnings.append(f"{bwhere}: skipped unrecognized interface line {body!r}")
    return _block_end(lines, start)


def _parse_acl(rs, lines, start, tokens, where):
    if len(tokens) != 4 or tokens[2] != "extended":
        raise ParseError(f"{where}: expected 'ip access-list extended <name>'")
    name = tokens[3]
    if rs.has("acl", name):
        acl = rs.get("acl", name)
    else:
        acl = rs.new("acl", name)
    for bi, body in _block_lines(lines, start):
        bwhere = f"{where.rsplit(' line ', 1)[0]} line {bi + 1}"
        if body.startswith("remark"):
            continue
        if not body.startswith(("permit", "deny")):
            raise ParseError(f"{bwhere}: ACL entries must start with permit or deny")
        _parse_acl_entry(acl, body, bwhere)
    return _block_end(lines, start)


def _parse_route(switch, tokens, where):
    if len(tokens) != 5:
        raise ParseError(f"{where}: expected 'ip route <prefix> <mask> <nexthop>'")
    dest = _network_of(tokens[2], tokens[3], where)
    switch.cite_ip(dest, "routeDest")
    switch.cite_ip(f"{tokens[4]}/32", f"routeNextHop:{dest}")


def _parse_vty(rs, switch, lines, start, where):
    for bi, body in _block_lines(lines, start):
        bwhere = f"{where.rsplit(' line ', 1)[0]} line {bi + 1}"
        btokens = body.split()
        if btokens[0] == "access-class":
            if len(btokens) != 3 or btokens[2] != "in":
                raise ParseError(f"{bwhere}: expected 'access-class <name> in'")
            switch.add_ref("acl", btokens[1], EdgeKind.LOOSE, "accessClass")
        elif btokens[0] in ("transport", "login", "exec-timeout", "password"):
            pass
        else:
            rs.warnings.append(f"{bwhere}: skipped unrecognized vty line {body!r}")
    return _block_end(lines, start)
