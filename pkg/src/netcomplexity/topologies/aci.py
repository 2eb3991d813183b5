"""Generator for the group-policy fabric rendition of the reference workload.

Two leaves with one port per endpoint, a single tenant/VRF/bridge-domain
scaffold, one EPG per tier or shared group, and contracts wiring consecutive
tiers together, shared services to the app edges, and the first tiers to an
L3Out. Every relationship is an explicit object reference; no addresses are
typed anywhere.
"""

from __future__ import annotations

from ..parsers.aci import parse_aci
from ..resources import ResourceSet
from . import params as _params

TENANT = "corp"
VRF = "main"
BRIDGE_DOMAIN = "workloads"
L3OUT = "internet"
FILTER = "any-ip"
WEB_CONTRACT = "web-external"
SHARED_CONTRACT = "shared-services"
LEAVES = ("leaf1", "leaf2")


def _group_names(p):
    names = []
    for i in range(1, p.apps + 1):
        for j in range(1, p.tiers_per_app + 1):
            names.append(f"app{i}-t{j}")
    for g in range(1, p.shared_groups + 1):
        names.append(f"shared-{g}")
    return names


def _chain_contract(j):
    return f"tier{j}-to-tier{j + 1}"


def build_document(params=None):
    p = _params.ensure(params)
    groups = _group_names(p)

    leaf_ports = {leaf: [] for leaf in LEAVES}
    bindings = {name: [] for name in groups}
    for name in groups:
        for k in range(p.endpoints_per_group):
            leaf = LEAVES[k % len(LEAVES)]
            port = f"eth1/{len(leaf_ports[leaf]) + 1}"
            leaf_ports[leaf].append(port)
            bindings[name].append({"leaf": leaf, "port": port})

    contracts = []
    if p.apps:
        contracts.append(WEB_CONTRACT)
        contracts.extend(_chain_contract(j) for j in range(1, p.tiers_per_app))
    if p.shared_groups:
        contracts.append(SHARED_CONTRACT)

    epgs = []
    for i in range(1, p.apps + 1):
        for j in range(1, p.tiers_per_app + 1):
            provided = []
            consumed = []
            if j == 1:
                provided.append(WEB_CONTRACT)
            else:
                provided.append(_chain_contract(j - 1))
            if j < p.tiers_per_app:
                consumed.append(_chain_contract(j))
            if p.shared_groups and j in (1, p.tiers_per_app):
                if SHARED_CONTRACT not in consumed:
                    consumed.append(SHARED_CONTRACT)
            epgs.append(
                {
                    "name": f"app{i}-t{j}",
                    "bridgeDomain": BRIDGE_DOMAIN,
                    "providedContracts": provided,
                    "consumedContracts": consumed,
                    "staticPorts": bindings[f"app{i}-t{j}"],
                }
            )
    for g in range(1, p.shared_groups + 1):
        epgs.append(
            {
                "name": f"shared-{g}",
                "bridgeDomain": BRIDGE_DOMAIN,
                "providedContracts": [SHARED_CONTRACT],
                "consumedContracts": [],
                "staticPorts": bindings[f"shared-{g}"],
            }
        )

    doc = {
        "fabric": {
            "leaves": [
                {"name": leaf, "ports": leaf_ports[leaf]}
                for leaf in LEAVES
                if leaf_ports[leaf]
            ]
        },
        "tenant": {
            "name": TENANT,
            "vrfs": [{"name": VRF}],
            "bridgeDomains": [{"name": BRIDGE_DOMAIN, "vrf": VRF}],
            "l3outs": [
                {
                    "name": L3OUT,
                    "vrf": VRF,
                    "consumedContracts": [WEB_CONTRACT] if p.apps else [],
                }
            ],
            "filters": [{"name": FILTER}],
            "contracts": [{"name": c, "filters": [FILTER]} for c in contracts],
            "epgs": epgs,
        },
    }
    return doc


def gen_aci(params=None) -> ResourceSet:
    return parse_aci(build_document(params))
