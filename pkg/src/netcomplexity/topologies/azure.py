"""Generators for the three cloud topology variants.

All three model the same workload: two 4-tier applications plus a group of
shared services, 24 VM endpoints in total. Variant 1 forces all traffic
through a central firewall with per-subnet route tables; variant 2 keeps the
firewall but collapses routing into one shared default route table; variant 3
drops the firewall entirely and segments with NSGs and application security
groups over full-mesh peerings.

The generators build a native resource document and run it through the
regular parser, so generated and ingested configurations take the same code
path.
"""

from __future__ import annotations

from ..parsers.azure import parse_azure
from ..resources import ResourceSet
from . import params as _params

FIREWALL_IP = "10.0.1.4"

ONPREM_PREFIXES = [
    "192.168.0.0/24",
    "192.168.1.0/24",
    "192.168.2.0/24",
    "192.168.3.0/24",
]

INTERNET_TEST_PREFIXES = ["198.51.100.0/24", "203.0.113.0/24"]

DNS_HOSTS = ["8.8.8.8/32", "8.8.4.4/32"]

# External SaaS-style destinations typed directly into firewall rules.
SAAS_PREFIXES = [
    "20.1.0.0/16",
    "20.2.0.0/16",
    "20.3.0.0/16",
    "40.90.0.0/16",
    "40.91.0.0/16",
    "52.96.0.0/16",
    "52.97.0.0/16",
    "13.107.0.0/16",
]

# Wider on-prem block used by variant 3's shared NSG.
ONPREM_RANGES_WIDE = [f"192.168.{k}.0/24" for k in range(16)]

_POLICY_NAME = "corp-fw-policy"


def _vnet_id(name):
    return f"/virtualNetworks/{name}"


def _subnet_id(vnet, subnet):
    return f"/virtualNetworks/{vnet}/subnets/{subnet}"


def _nsg_id(name):
    return f"/networkSecurityGroups/{name}"


def _spoke_names(p):
    names = [f"app{i}" for i in range(1, p.apps + 1)]
    if p.shared_groups:
        names.append("shared")
    return names


def _spoke_index(spoke, p):
    if spoke == "shared":
        return p.apps + 1
    return int(spoke.removeprefix("app"))


def _spoke_subnets(spoke, p):
    if spoke == "shared":
        return [f"svc{g}" for g in range(1, p.shared_groups + 1)]
    return [f"tier{j}" for j in range(1, p.tiers_per_app + 1)]


def _vnet(name, space, dns):
    props = {"addressSpace": {"addressPrefixes": [space]}}
    if dns:
        props["dhcpOptions"] = {"dnsServers": [FIREWALL_IP]}
    return {
        "type": "Microsoft.Network/virtualNetworks",
        "name": name,
        "properties": props,
    }


def _subnet(vnet, name, prefix, nsg=None, route_table=None):
    props = {"addressPrefix": prefix}
    if nsg:
        props["networkSecurityGroup"] = {"id": _nsg_id(nsg)}
    if route_table:
        props["routeTable"] = {"id": f"/routeTables/{route_table}"}
    return {
        "type": "Microsoft.Network/virtualNetworks/subnets",
        "name": f"{vnet}/{name}",
        "properties": props,
    }


def _peering(vnet, name, remote):
    return {
        "type": "Microsoft.Network/virtualNetworks/virtualNetworkPeerings",
        "name": f"{vnet}/{name}",
        "properties": {"remoteVirtualNetwork": {"id": _vnet_id(remote)}},
    }


def _workload(vm_name, subnet_id, nic_nsg=None, asg=None):
    """One VM with one NIC and one dynamic ipconfig; returns both resources."""
    nic_name = f"{vm_name}-nic"
    vm = {
        "type": "Microsoft.Compute/virtualMachines",
        "name": vm_name,
        "properties": {
            "networkProfile": {
                "networkInterfaces": [{"id": f"/networkInterfaces/{nic_name}"}]
            }
        },
    }
    ipcfg_props = {
        "subnet": {"id": subnet_id},
        "privateIPAllocationMethod": "Dynamic",
    }
    if asg:
        ipcfg_props["applicationSecurityGroups"] = [
            {"id": f"/applicationSecurityGroups/{asg}"}
        ]
    nic_props = {
        "ipConfigurations": [{"name": "ipconfig1", "properties": ipcfg_props}]
    }
    if nic_nsg:
        nic_props["networkSecurityGroup"] = {"id": _nsg_id(nic_nsg)}
    nic = {
        "type": "Microsoft.Network/networkInterfaces",
        "name": nic_name,
        "properties": nic_props,
    }
    return vm, nic


def _ip_group(name, members):
    return {
        "type": "Microsoft.Network/ipGroups",
        "name": name,
        "properties": {"ipAddresses": list(members)},
    }


def _fw_rule(name, source_groups=(), dest_groups=(), dest_addresses=()):
    rule = {"name": name, "ruleType": "NetworkRule"}
    if source_groups:
        rule["sourceIpGroups"] = [f"/ipGroups/{g}" for g in source_groups]
    if dest_groups:
        rule["destinationIpGroups"] = [f"/ipGroups/{g}" for g in dest_groups]
    if dest_addresses:
        rule["destinationAddresses"] = list(dest_addresses)
    return rule


def _rule_collection(name, priority, rules):
    return {
        "type": "Microsoft.Network/firewallPolicies/ruleCollections",
        "name": f"{_POLICY_NAME}/{name}",
        "properties": {"priority": priority, "rules": rules},
    }


def _nsg(name, rules):
    return {
        "type": "Microsoft.Network/networkSecurityGroups",
        "name": name,
        "properties": {"securityRules": rules},
    }


def _firewall_resources():
    public_ip = {
        "type": "Microsoft.Network/publicIPAddresses",
        "name": "fw-pip",
        "properties": {"publicIPAllocationMethod": "Static"},
    }
    firewall = {
        "type": "Microsoft.Network/azureFirewalls",
        "name": "corp-fw",
        "properties": {
            "ipConfigurations": [
                {
                    "name": "fw-ipcfg",
                    "properties": {
                        "subnet": {"id": _subnet_id("hub", "AzureFirewallSubnet")},
                        "publicIPAddress": {"id": "/publicIPAddresses/fw-pip"},
                    },
                }
            ],
            "firewallPolicy": {"id": f"/firewallPolicies/{_POLICY_NAME}"},
        },
    }
    policy = {
        "type": "Microsoft.Network/firewallPolicies",
        "name": _POLICY_NAME,
        "properties": {},
    }
    return [public_ip, firewall, policy]


def _collections_variant1(spokes):
    collections = []
    priority = 100
    for spoke in spokes:
        if spoke == "shared":
            rules = [
                _fw_rule(
                    "allow-shared-updates",
                    source_groups=["ipg-onprem", "ipg-dns", "ipg-internet"],
                    dest_addresses=SAAS_PREFIXES[3:6],
                ),
                _fw_rule(
                    "allow-shared-mgmt",
                    source_groups=["ipg-app1", "ipg-onprem", "ipg-internet", "ipg-dns"],
                    dest_addresses=[
                        SAAS_PREFIXES[6],
                        SAAS_PREFIXES[7],
                        SAAS_PREFIXES[0],
                        SAAS_PREFIXES[1],
                        SAAS_PREFIXES[2],
                        SAAS_PREFIXES[3],
                    ],
                ),
            ]
        elif spoke == "app1":
            rules = [
                _fw_rule(
                    "allow-inbound-app1",
                    source_groups=["ipg-onprem", "ipg-internet"],
                    dest_groups=["ipg-app1"],
                ),
                _fw_rule(
                    "allow-app1-outbound",
                    source_groups=["ipg-app1"],
                    dest_groups=["ipg-dns", "ipg-onprem"],
                ),
            ]
        else:
            rules = [
                _fw_rule(
                    f"allow-{spoke}-web",
                    source_groups=["ipg-onprem", "ipg-app1"],
                    dest_groups=["ipg-internet"],
                ),
                _fw_rule(
                    f"allow-{spoke}-saas",
                    source_groups=["ipg-internet", "ipg-dns"],
                    dest_addresses=SAAS_PREFIXES[0:3],
                ),
            ]
        collections.append(_rule_collection(f"rc-{spoke}", priority, rules))
        priority += 100
    return collections


def build_document(variant, params=None):
    """Return the native resource document for one topology variant."""
    p = _params.ensure(params)
    if variant not in (1, 2, 3):
        raise ValueError(f"unknown variant {variant!r}: expected 1, 2, or 3")

    spokes = _spoke_names(p)
    app_space = "10.1.0.0/16"
    with_firewall = variant in (1, 2)
    resources = []

    if with_firewall:
        resources.append(_vnet("hub", "10.0.0.0/16", dns=True))
    for spoke in spokes:
        idx = _spoke_index(spoke, p)
        resources.append(_vnet(spoke, f"10.{idx}.0.0/16", dns=with_firewall))

    if with_firewall:
        resources.append(_subnet("hub", "AzureFirewallSubnet", "10.0.1.0/24"))
    for spoke in spokes:
        idx = _spoke_index(spoke, p)
        for j, sub in enumerate(_spoke_subnets(spoke, p), start=1):
            if variant == 1:
                route_table = f"rt-{spoke}-{sub}"
            elif variant == 2:
                route_table = "rt-spokes"
            else:
                route_table = None
            resources.append(
                _subnet(
                    spoke,
                    sub,
                    f"10.{idx}.{j}.0/24",
                    nsg=f"nsg-{spoke}",
                    route_table=route_table,
                )
            )

    if with_firewall:
        for spoke in spokes:
            resources.append(_peering("hub", f"to-{spoke}", spoke))
            resources.append(_peering(spoke, "to-hub", "hub"))
    else:
        for a_idx, a in enumerate(spokes):
            for b in spokes[a_idx + 1:]:
                resources.append(_peering(a, f"to-{b}", b))
                resources.append(_peering(b, f"to-{a}", a))

    for spoke in spokes:
        for j, sub in enumerate(_spoke_subnets(spoke, p), start=1):
            for k in range(1, p.endpoints_per_group + 1):
                asg = None
                if variant == 3 and spoke != "shared":
                    asg = f"asg-{spoke}-t{j}"
                vm, nic = _workload(
                    f"{spoke}-{sub}-vm{k}",
                    _subnet_id(spoke, sub),
                    nic_nsg=f"nsg-{spoke}" if with_firewall else None,
                    asg=asg,
                )
                resources.append(vm)
                resources.append(nic)

    if with_firewall:
        resources.extend(_firewall_resources())
        if variant == 1:
            resources.extend(_collections_variant1(spokes))
            resources.extend(
                [
                    _ip_group("ipg-onprem", ONPREM_PREFIXES),
                    _ip_group("ipg-internet", INTERNET_TEST_PREFIXES),
                    _ip_group("ipg-dns", DNS_HOSTS),
                    _ip_group("ipg-app1", [app_space]),
                ]
            )
        else:
            resources.append(
                _rule_collection(
                    "rc-all",
                    100,
                    [
                        _fw_rule(
                            "allow-onprem-to-app1",
                            source_groups=["ipg-onprem"],
                            dest_groups=["ipg-app1-all"],
                        ),
                        _fw_rule(
                            "allow-app1-to-saas",
                            source_groups=["ipg-app1-front"],
                            dest_addresses=SAAS_PREFIXES[0:7],
                        ),
                    ],
                )
            )
            resources.extend(
                [
                    _ip_group("ipg-onprem", ONPREM_PREFIXES),
                    _ip_group("ipg-internet", INTERNET_TEST_PREFIXES),
                    _ip_group("ipg-dns", DNS_HOSTS),
                    _ip_group("ipg-app1-front", [app_space]),
                    _ip_group("ipg-app1-all", [app_space]),
                ]
            )

    if variant == 1:
        for spoke in spokes:
            for sub in _spoke_subnets(spoke, p):
                resources.append(
                    {
                        "type": "Microsoft.Network/routeTables",
                        "name": f"rt-{spoke}-{sub}",
                        "properties": {
                            "routes": [
                                {
                                    "name": "to-app1-via-fw",
                                    "properties": {
                                        "addressPrefix": app_space,
                                        "nextHopType": "VirtualAppliance",
                                        "nextHopIpAddress": FIREWALL_IP,
                                    },
                                }
                            ]
                        },
                    }
                )
    elif variant == 2:
        resources.append(
            {
                "type": "Microsoft.Network/routeTables",
                "name": "rt-spokes",
                "properties": {
                    "routes": [
                        {
                            "name": "default-via-fw",
                            "properties": {
                                "addressPrefix": "0.0.0.0/0",
                                "nextHopType": "VirtualAppliance",
                                "nextHopIpAddress": FIREWALL_IP,
                            },
                        }
                    ]
                },
            }
        )

    for spoke in spokes:
        resources.append(_nsg(f"nsg-{spoke}", _nsg_rules(variant, spoke, p)))

    if variant == 3:
        for spoke in spokes:
            if spoke == "shared":
                continue
            for j in range(1, p.tiers_per_app + 1):
                resources.append(
                    {
                        "type": "Microsoft.Network/applicationSecurityGroups",
                        "name": f"asg-{spoke}-t{j}",
                        "properties": {},
                    }
                )

    return {"resources": resources}


def _nsg_rules(variant, spoke, p):
    if variant == 1:
        return [
            {
                "name": "deny-legacy-onprem-in",
                "properties": {
                    "sourceAddressPrefixes": ONPREM_PREFIXES[0:2],
                    "destinationAddressPrefix": "*",
                    "access": "Deny",
                    "direction": "Inbound",
                    "priority": 4096,
                },
            }
        ]
    if variant == 2:
        if spoke == "shared":
            return [
                {
                    "name": "deny-legacy-in",
                    "properties": {
                        "sourceAddressPrefixes": ONPREM_PREFIXES[0:1],
                        "destinationAddressPrefix": "*",
                        "access": "Deny",
                        "direction": "Inbound",
                        "priority": 300,
                    },
                },
                {
                    "name": "allow-mgmt-in",
                    "properties": {
                        "sourceAddressPrefix": "VirtualNetwork",
                        "destinationAddressPrefix": "*",
                        "destinationPortRange": "22",
                        "access": "Allow",
                        "direction": "Inbound",
                        "priority": 110,
                    },
                },
            ]
        return [
            {
                "name": "allow-https-in",
                "properties": {
                    "sourceAddressPrefix": "Internet",
                    "destinationAddressPrefix": "*",
                    "destinationPortRange": "443",
                    "access": "Allow",
                    "direction": "Inbound",
                    "priority": 100,
                },
            },
            {
                "name": "allow-app-in",
                "properties": {
                    "sourceAddressPrefix": "VirtualNetwork",
                    "destinationAddressPrefix": "*",
                    "destinationPortRange": "8443",
                    "access": "Allow",
                    "direction": "Inbound",
                    "priority": 200,
                },
            },
            {
                "name": "deny-all-in",
                "properties": {
                    "sourceAddressPrefix": "*",
                    "destinationAddressPrefix": "*",
                    "access": "Deny",
                    "direction": "Inbound",
                    "priority": 4096,
                },
            },
        ]
    # Variant 3: tier chains pinned to ASGs, plus a wide on-prem allowlist
    # on the shared NSG.
    if spoke == "shared":
        return [
            {
                "name": "allow-onprem-in",
                "properties": {
                    "sourceAddressPrefixes": ONPREM_RANGES_WIDE,
                    "destinationAddressPrefix": "*",
                    "access": "Allow",
                    "direction": "Inbound",
                    "priority": 100,
                },
            },
            {
                "name": "allow-out-core",
                "properties": {
                    "sourceAddressPrefix": "*",
                    "destinationAddressPrefixes": ONPREM_RANGES_WIDE[0:6],
                    "access": "Allow",
                    "direction": "Outbound",
                    "priority": 100,
                },
            },
        ]
    rules = []
    for j in range(1, p.tiers_per_app):
        rules.append(
            {
                "name": f"allow-t{j + 1}-from-t{j}",
                "properties": {
                    "sourceAddressPrefix": "VirtualNetwork",
                    "destinationApplicationSecurityGroups": [
                        {"id": f"/applicationSecurityGroups/asg-{spoke}-t{j + 1}"}
                    ],
                    "access": "Allow",
                    "direction": "Inbound",
                    "priority": 100 + 10 * j,
                },
            }
        )
    return rules


def gen_azure(variant, params=None) -> ResourceSet:
    return parse_azure([build_document(variant, params)])
