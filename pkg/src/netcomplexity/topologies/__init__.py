"""Deterministic generators for the six reference topologies.

Every topology id maps to a generator that builds a native configuration
document (cloud JSON, Kubernetes YAML, switch CLI text, or fabric policy
JSON) and parses it with the ordinary dialect parser. `write_native` saves
those documents to disk so they can be fed back through `analyze`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from ..errors import BuildError
from ..resources import ResourceSet
from .aci import build_document as build_aci_document, gen_aci
from .azure import build_document as build_azure_document, gen_azure
from .kubernetes import build_manifests as build_k8s_manifests, gen_k8s
from .params import TopologyParams
from .switch import build_configs as build_cli_configs, gen_cli

TOPOLOGY_IDS = ("azure-1", "azure-2", "azure-3", "cli-3", "k8s-3", "aci-3")


@dataclass(frozen=True)
class TopologySpec:
    id: str
    params: TopologyParams = field(default_factory=TopologyParams)

    def __post_init__(self):
        if self.id not in TOPOLOGY_IDS:
            raise BuildError(
                f"unknown topology {self.id!r}: expected one of {', '.join(TOPOLOGY_IDS)}"
            )

    def generate(self) -> ResourceSet:
        return generate(self.id, self.params)


def dialect_of(topology_id: str) -> str:
    if topology_id not in TOPOLOGY_IDS:
        raise BuildError(
            f"unknown topology {topology_id!r}: expected one of {', '.join(TOPOLOGY_IDS)}"
        )
    return topology_id.rsplit("-", 1)[0]


def generate(topology_id: str, params: "TopologyParams | None" = None) -> ResourceSet:
    dialect = dialect_of(topology_id)
    if dialect == "azure":
        variant = int(topology_id.rsplit("-", 1)[1])
        return gen_azure(variant, params)
    if dialect == "cli":
        return gen_cli(params)
    if dialect == "k8s":
        return gen_k8s(params)
    return gen_aci(params)


def write_native(topology_id: str, outdir, params: "TopologyParams | None" = None):
    """Write the topology's native configuration files into outdir.

    Returns the list of written paths, sorted by name.
    """
    dialect = dialect_of(topology_id)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    if dialect == "azure":
        variant = int(topology_id.rsplit("-", 1)[1])
        doc = build_azure_document(variant, params)
        path = outdir / f"{topology_id}.json"
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        paths.append(path)
    elif dialect == "cli":
        for name, text in build_cli_configs(params).items():
            path = outdir / f"{name}.cfg"
            path.write_text(text, encoding="utf-8")
            paths.append(path)
    elif dialect == "k8s":
        manifests = build_k8s_manifests(params)
        path = outdir / f"{topology_id}.yaml"
        path.write_text(yaml.safe_dump_all(manifests, sort_keys=False), encoding="utf-8")
        paths.append(path)
    else:
        doc = build_aci_document(params)
        path = outdir / f"{topology_id}.json"
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        paths.append(path)
    return sorted(paths)
