"""Dialect parsers producing the neutral resource IR.

Each parser recognizes a minimal profile of its dialect: only the constructs
that yield vertices or edges in the graph model. Unknown siblings are skipped
with a counted warning on the returned ResourceSet.
"""

from __future__ import annotations

import json
from pathlib import Path

import yaml

from ..errors import ParseError
from ..resources import ResourceSet, merge_resource_sets
from .aci import parse_aci
from .azure import parse_azure
from .k8s import parse_k8s
from .switch_config import parse_cli

DIALECTS = ("azure", "k8s", "cli", "aci")

__all__ = [
    "DIALECTS",
    "load_files",
    "parse_aci",
    "parse_azure",
    "parse_cli",
    "parse_k8s",
]


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _read_json(path: Path):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON: {exc}") from None


def load_files(dialect: str, paths) -> ResourceSet:
    """Parse one or more input files of the given dialect into a ResourceSet.

    azure: JSON documents (each a resource list or {"resources": [...]}).
    k8s: multi-document YAML manifests.
    cli: one plain-text config per switch; the file stem names the switch.
    aci: exactly one JSON policy-tree document.
    """
    paths = [Path(p) for p in paths]
    if not paths:
        raise ParseError("no input files given")
    if dialect == "azure":
        return parse_azure([_read_json(p) for p in paths])
    if dialect == "k8s":
        manifests = []
        for p in paths:
            try:
                docs = list(yaml.safe_load_all(_read_text(p)))
            except yaml.YAMLError as exc:
                raise ParseError(f"{p}: not valid YAML: {exc}") from None
            manifests.extend(d for d in docs if d is not None)
        return parse_k8s(manifests)
    if dialect == "cli":
        return merge_resource_sets([parse_cli(_read_text(p), p.stem) for p in paths])
    if dialect == "aci":
        if len(paths) != 1:
            raise ParseError(f"aci dialect expects a single policy document, got {len(paths)} files")
        return parse_aci(_read_json(paths[0]))
    raise ParseError(f"unknown dialect {dialect!r}; expected one of {', '.join(DIALECTS)}")
