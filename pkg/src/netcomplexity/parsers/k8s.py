"""Parser for Kubernetes manifests.

Covers Namespace, Pod, Service, and NetworkPolicy. Label keys and values are
reified: each distinct key=value pair becomes a label resource, and pods cite
the labels they carry while services and policies cite the labels they select.
That makes label-based indirection visible in the graph instead of hiding it
in matching logic. ipBlock CIDRs in policy rules become address literals.
"""

from __future__ import annotations

from ..errors import ParseError
from ..graph import EdgeKind
from ..resources import Resource, ResourceSet

_KINDS = ("Namespace", "Pod", "Service", "NetworkPolicy")


def _label_key(key: str, value: str) -> str:
    return f"{key}={value}"


def _ensure_namespace(rs: ResourceSet, name: str) -> None:
    if not rs.has("namespace", name):
        rs.new("namespace", name)


def _ensure_label(rs: ResourceSet, key: str, value: str) -> str:
    lk = _label_key(key, value)
    if not rs.has("label", lk):
        rs.new("label", lk)
    return lk


def _cite_labels(rs: ResourceSet, resource: Resource, labels: dict, relationship: str) -> None:
    for key in sorted(labels):
        lk = _ensure_label(rs, key, str(labels[key]))
        resource.add_ref("label", lk, EdgeKind.LOOSE, relationship)


def _pod_selector_labels(selector, where: str, rs: ResourceSet) -> dict:
    if not selector:
        return {}
    if selector.get("matchExpressions"):
        rs.warnings.append(f"{where}: matchExpressions selector terms are not modeled")
    return selector.get("matchLabels") or {}


def parse_k8s(manifests) -> ResourceSet:
    rs = ResourceSet("k8s")
    for mi, manifest in enumerate(manifests):
        if not isinstance(manifest, dict):
            raise ParseError(f"manifest {mi}: expected a mapping")
        where = f"manifest {mi}"
        kind = manifest.get("kind")
        if not kind:
            raise ParseError(f"{where}: missing 'kind'")
        metadata = manifest.get("metadata") or {}
        name = metadata.get("name")
        if not name:
            raise ParseError(f"{where}: missing 'metadata.name'")
        if kind not in _KINDS:
            rs.warnings.append(f"{where}: skipped unsupported kind {kind!r}")
            continue
        if kind == "Namespace":
            _ensure_namespace(rs, name)
            continue
        namespace = metadata.get("namespace") or "default"
        _ensure_namespace(rs, namespace)
        spec = manifest.get("spec") or {}
        if kind == "Pod":
            _parse_pod(rs, namespace, name, metadata, where)
        elif kind == "Service":
            _parse_service(rs, namespace, name, spec, where)
        else:
            _parse_network_policy(rs, namespace, name, spec, where)
    return rs


def _parse_pod(rs, namespace, name, metadata, where):
    r = rs.new("pod", f"{namespace}/{name}")
    r.add_ref("namespace", namespace, EdgeKind.TIGHT, "namespace")
    _cite_labels(rs, r, metadata.get("labels") or {}, "label")


def _parse_service(rs, namespace, name, spec, where):
    r = rs.new("service", f"{namespace}/{name}")
    r.add_ref("namespace", namespace, EdgeKind.TIGHT, "namespace")
    _cite_labels(rs, r, spec.get("selector") or {}, "selector")
    ports = spec.get("ports") or []
    if ports:
        r.attributes["ports"] = ",".join(str(p.get("port", "")) for p in ports)


def _parse_peers(rs, resource, peers, relationship, where):
    for peer in peers or []:
        selector = peer.get("podSelector")
        if selector is not None:
            labels = _pod_selector_labels(selector, where, rs)
            _cite_labels(rs, resource, labels, relationship)
        block = peer.get("ipBlock") or {}
        if block.get("cidr"):
            resource.cite_ip(block["cidr"], relationship)
        if peer.get("namespaceSelector"):
            rs.warnings.append(f"{where}: namespaceSelector peers are not modeled")


def _parse_network_policy(rs, namespace, name, spec, where):
    r = rs.new("networkPolicy", f"{namespace}/{name}")
    r.add_ref("namespace", namespace, EdgeKind.TIGHT, "namespace")
    labels = _pod_selector_labels(spec.get("podSelector"), where, rs)
    _cite_labels(rs, r, labels, "selects")
    for rule in spec.get("ingress") or []:
        _parse_peers(rs, r, rule.get("from"), "ingressFrom", where)
    for rule in spec.get("egress") or []:
        _parse_peers(rs, r, rule.get("to"), "egressTo", where)
