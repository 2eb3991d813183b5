"""Generator for the two-switch CLI rendition of the reference workload.

Each application lives in a block of VLANs homed on one of two switches,
with SVIs as gateways, one access port per endpoint, a management VLAN and a
point-to-point transit VLAN spanning both switches, and a default route out
of each switch via the transit link. Segmentation intent is carried entirely
by extended ACLs applied to SVIs and ports.
"""

from __future__ import annotations

from ..parsers.switch_config import parse_cli
from ..resources import merge_resource_sets, ResourceSet
from . import params as _params

SWITCHES = ("sw1", "sw2")

MGMT_VLAN = 900
MGMT_SUBNET = ("10.254.0.0", "255.255.255.0")
TRANSIT_VLAN = 999
TRANSIT_SUBNET = ("10.255.0.0", "255.255.255.252")
TRANSIT_IPS = ("10.255.0.1", "10.255.0.2")

# Partner and monitoring prefixes cited by the tier ACLs.
PARTNER_INGRESS = [f"100.64.{k}.0" for k in range(6)]
PARTNER_REPLICATION = ["100.64.6.0", "100.64.7.0"]
MONITOR_PREFIXES = [f"192.168.{100 + k}.0" for k in range(7)]
MGMT_HOSTS = ["192.168.200.10", "192.168.200.11", "192.168.200.12"]

# (address, wildcard) pairs for the standard bogon deny list.
BOGONS = [
    ("0.0.0.0", "0.255.255.255"),
    ("127.0.0.0", "0.255.255.255"),
    ("169.254.0.0", "0.0.255.255"),
    ("192.0.0.0", "0.0.0.255"),
    ("192.0.2.0", "0.0.0.255"),
    ("198.18.0.0", "0.1.255.255"),
    ("198.51.100.0", "0.0.0.255"),
    ("203.0.113.0", "0.0.0.255"),
    ("224.0.0.0", "15.255.255.255"),
    ("240.0.0.0", "15.255.255.255"),
]

_TIER_PORTS = {2: "8080", 3: "8443", 4: "1433"}


class _Group:
    """One workload VLAN: its number, subnet, ACL, and home switch."""

    def __init__(self, name, vlan, octets, acl, home):
        self.name = name
        self.vlan = vlan
        self.octets = octets
        self.acl = acl
        self.home = home

    @property
    def subnet(self):
        return f"10.{self.octets[0]}.{self.octets[1]}.0"

    @property
    def gateway(self):
        return f"10.{self.octets[0]}.{self.octets[1]}.1"


def _groups(p):
    groups = []
    for i in range(1, p.apps + 1):
        home = SWITCHES[(i - 1) % 2]
        for j in range(1, p.tiers_per_app + 1):
            groups.append(
                _Group(f"app{i}-t{j}", 100 * i + j, (i, j), f"acl-app{i}-t{j}", home)
            )
    shared_base = p.apps + 1
    first_half = (p.shared_groups + 1) // 2
    for g in range(1, p.shared_groups + 1):
        home = SWITCHES[0] if g <= first_half else SWITCHES[1]
        acl = "acl-shared-1" if home == SWITCHES[0] else "acl-shared-2"
        groups.append(
            _Group(f"shared-{g}", 100 * shared_base + g, (shared_base, g), acl, home)
        )
    return groups


def _tier_acl_entries(i, j, p):
    entries = []
    if j == 1:
        entries.append(f"remark app{i} web tier ingress")
        base = 3 * (i - 1)
        for k in range(base, base + 3):
            entries.append(f"permit tcp 100.64.{k}.0 0.0.0.255 any eq 443")
        if i == 1 and p.shared_groups:
            monitor_net = f"10.{p.apps + 1}.1.0"
            entries.append(f"permit tcp {monitor_net} 0.0.0.255 any eq 8081")
    else:
        port = _TIER_PORTS.get(j, str(8000 + j))
        entries.append(f"permit tcp 10.{i}.{j - 1}.0 0.0.0.255 any eq {port}")
        if j == p.tiers_per_app:
            entries.append(
                f"permit tcp 100.64.{6 + (i - 1)}.0 0.0.0.255 any eq {port}"
            )
    entries.append("deny ip any any log")
    return entries


def _shared_acl_entries(which, p):
    entries = []
    for i in range(1, p.apps + 1):
        entries.append(f"permit ip 10.{i}.{p.tiers_per_app}.0 0.0.0.255 any")
    monitors = MONITOR_PREFIXES[0:4] if which == 1 else MONITOR_PREFIXES[4:7]
    for net in monitors:
        entries.append(f"permit ip {net} 0.0.0.255 any")
    entries.append("deny ip any any")
    return entries


def _mgmt_acl_entries():
    entries = [f"permit tcp {MGMT_SUBNET[0]} 0.0.0.255 any eq 22"]
    for host in MGMT_HOSTS:
        entries.append(f"permit tcp host {host} any eq 22")
    entries.append("deny ip any any log")
    return entries


def _bogon_acl_entries():
    entries = [f"deny ip {addr} {wild} any" for addr, wild in BOGONS]
    entries.append("permit ip any any")
    return entries


def _switch_config(sw, groups, p):
    other = SWITCHES[1] if sw == SWITCHES[0] else SWITCHES[0]
    sw_idx = SWITCHES.index(sw)
    lines = [f"hostname {sw}", "!"]

    for g in groups:
        lines.append(f"vlan {g.vlan}")
        lines.append(f" name {g.name}")
    lines.append(f"vlan {MGMT_VLAN}")
    lines.append(" name mgmt")
    lines.append(f"vlan {TRANSIT_VLAN}")
    lines.append(" name transit")
    lines.append("!")

    port_no = 0
    for g in groups:
        for k in range(p.endpoints_per_group):
            if k % 2 != sw_idx:
                continue
            port_no += 1
            lines.append(f"interface GigabitEthernet1/0/{port_no}")
            lines.append(f" description endpoint {g.name}")
            lines.append(" switchport mode access")
            lines.append(f" switchport access vlan {g.vlan}")
            if p.with_acls:
                lines.append(f" ip access-group {g.acl} in")
            lines.append(" no shutdown")
    lines.append("!")

    for g in groups:
        if g.home != sw:
            continue
        lines.append(f"interface Vlan{g.vlan}")
        lines.append(f" description gateway {g.name}")
        lines.append(f" ip address {g.gateway} 255.255.255.0")
        if p.with_acls:
            lines.append(f" ip access-group {g.acl} in")
            lines.append(" ip access-group acl-bogon out")
    lines.append(f"interface Vlan{MGMT_VLAN}")
    lines.append(" description management")
    lines.append(f" ip address 10.254.0.{sw_idx + 1} {MGMT_SUBNET[1]}")
    if p.with_acls:
        lines.append(" ip access-group acl-mgmt in")
        lines.append(" ip access-group acl-bogon out")
    lines.append(f"interface Vlan{TRANSIT_VLAN}")
    lines.append(f" description transit to {other}")
    lines.append(f" ip address {TRANSIT_IPS[sw_idx]} {TRANSIT_SUBNET[1]}")
    if p.with_acls:
        lines.append(" ip access-group acl-bogon in")
        lines.append(" ip access-group acl-bogon out")
    lines.append("!")

    if p.with_acls:
        for g in groups:
            if g.home != sw or g.name.startswith("shared"):
                continue
            i, j = g.octets
            lines.append(f"ip access-list extended {g.acl}")
            for entry in _tier_acl_entries(i, j, p):
                lines.append(f" {entry}")
        for which in (1, 2):
            if sw != SWITCHES[which - 1]:
                continue
            if not any(g.acl == f"acl-shared-{which}" for g in groups):
                continue
            lines.append(f"ip access-list extended acl-shared-{which}")
            for entry in _shared_acl_entries(which, p):
                lines.append(f" {entry}")
        lines.append("ip access-list extended acl-mgmt")
        for entry in _mgmt_acl_entries():
            lines.append(f" {entry}")
        lines.append("ip access-list extended acl-bogon")
        for entry in _bogon_acl_entries():
            lines.append(f" {entry}")
        lines.append("!")

    peer_ip = TRANSIT_IPS[1 - sw_idx]
    lines.append(f"ip route 0.0.0.0 0.0.0.0 {peer_ip}")
    lines.append("!")
    lines.append("line vty 0 4")
    if p.with_acls:
        lines.append(" access-class acl-mgmt in")
    lines.append(" transport input ssh")
    return "\n".join(lines) + "\n"


def build_configs(params=None):
    """Return {switch_name: config_text} for both switches."""
    p = _params.ensure(params)
    groups = _groups(p)
    return {sw: _switch_config(sw, groups, p) for sw in SWITCHES}


def gen_cli(params=None) -> ResourceSet:
    configs = build_configs(params)
    return merge_resource_sets(
        [parse_cli(text, name) for name, text in configs.items()]
    )
