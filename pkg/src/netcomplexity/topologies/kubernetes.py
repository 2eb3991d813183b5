"""Generator for the Kubernetes rendition of the reference workload.

One namespace per application plus a shared-services namespace. Tier
membership is expressed through a reused "tier" label; every pod also carries
a unique "pod-name" label. Services select tiers, and network policies allow
each tier to reach the next. Nothing in this dialect types an IP address.
"""

from __future__ import annotations

from string import ascii_lowercase

from ..parsers.k8s import parse_k8s
from ..resources import ResourceSet
from . import params as _params


def _suffix(k: int) -> str:
    if k < len(ascii_lowercase):
        return ascii_lowercase[k]
    return f"p{k + 1}"


def _namespace(name):
    return {"apiVersion": "v1", "kind": "Namespace", "metadata": {"name": name}}


def _pod(namespace, name, tier):
    return {
        "apiVersion": "v1",
        "kind": "Pod",
        "metadata": {
            "name": name,
            "namespace": namespace,
            "labels": {"pod-name": name, "tier": tier},
        },
        "spec": {"containers": [{"name": "main", "image": "registry.local/app:1"}]},
    }


def _service(namespace, name, tier):
    return {
        "apiVersion": "v1",
        "kind": "Service",
        "metadata": {"name": name, "namespace": namespace},
        "spec": {"selector": {"tier": tier}, "ports": [{"port": 80}]},
    }


def _tier_peer(tier):
    return {"podSelector": {"matchLabels": {"tier": tier}}}


def build_manifests(params=None):
    p = _params.ensure(params)
    manifests = []
    app_namespaces = [f"app{i}" for i in range(1, p.apps + 1)]

    for ns in app_namespaces:
        manifests.append(_namespace(ns))
    if p.shared_groups:
        manifests.append(_namespace("shared"))

    for ns in app_namespaces:
        for j in range(1, p.tiers_per_app + 1):
            for k in range(p.endpoints_per_group):
                name = f"{ns}-t{j}-{_suffix(k)}"
                manifests.append(_pod(ns, name, f"t{j}"))
    for g in range(1, p.shared_groups + 1):
        for k in range(p.endpoints_per_group):
            name = f"shared-svc{g}-{_suffix(k)}"
            manifests.append(_pod("shared", name, f"t{g}"))

    for ns in app_namespaces:
        for j in range(1, p.tiers_per_app + 1):
            manifests.append(_service(ns, f"{ns}-t{j}-svc", f"t{j}"))
    for g in range(1, p.shared_groups + 1):
        manifests.append(_service("shared", f"shared-svc{g}", f"t{g}"))

    for ns in app_namespaces:
        for j in range(1, p.tiers_per_app):
            manifests.append(
                {
                    "apiVersion": "networking.k8s.io/v1",
                    "kind": "NetworkPolicy",
                    "metadata": {
                        "name": f"allow-t{j + 1}-from-t{j}",
                        "namespace": ns,
                    },
                    "spec": {
                        "podSelector": {"matchLabels": {"tier": f"t{j + 1}"}},
                        "policyTypes": ["Ingress"],
                        "ingress": [{"from": [_tier_peer(f"t{j}")]}],
                    },
                }
            )
    if p.shared_groups:
        tiers = [f"t{j}" for j in range(1, p.tiers_per_app + 1)]
        manifests.append(
            {
                "apiVersion": "networking.k8s.io/v1",
                "kind": "NetworkPolicy",
                "metadata": {"name": "allow-shared", "namespace": "shared"},
                "spec": {
                    "podSelector": {},
                    "policyTypes": ["Ingress", "Egress"],
                    "ingress": [{"from": [_tier_peer(t) for t in tiers]}],
                    "egress": [{"to": [_tier_peer(t) for t in tiers]}],
                },
            }
        )
    return manifests


def gen_k8s(params=None) -> ResourceSet:
    return parse_k8s(build_manifests(params))
