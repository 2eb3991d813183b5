"""Reference measurements for the six bundled topologies.

The values here are the recorded measurements the bundled generators aim to
reproduce. Where a regenerated topology deviates from its recorded value,
the gap is listed in CALIBRATION.md and flagged here so the reproduce
command can annotate it instead of failing silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .metrics import MetricsRow

DISPLAY_NAMES = {
    "azure-1": "Topology 1 (Azure)",
    "azure-2": "Topology 2 (Azure)",
    "azure-3": "Topology 3 (Azure)",
    "cli-3": "Topology 3 (CLI)",
    "k8s-3": "Topology 3 (K8S)",
    "aci-3": "Topology 3 (ACI)",
}


@dataclass(frozen=True)
class ReferenceRow:
    nodes_per_endpoint: float
    l_edges: int
    t_edges: int
    i_types: int
    p_types: int
    ip_excess_degree: int


REFERENCE_METRICS = {
    "azure-1": ReferenceRow(7.33, 55, 203, 8, 8, 37),
    "azure-2": ReferenceRow(6.42, 24, 163, 8, 8, 6),
    "azure-3": ReferenceRow(5.96, 22, 138, 5, 4, 6),
    "cli-3": ReferenceRow(4.71, 186, 40, 4, 1, 15),
    "k8s-3": ReferenceRow(3.08, 82, 43, 2, 3, 0),
    "aci-3": ReferenceRow(2.00, 0, 99, 6, 3, 0),
}

CHECKED_FIELDS = (
    "nodes_per_endpoint",
    "l_edges",
    "t_edges",
    "i_types",
    "p_types",
    "ip_excess_degree",
)

# Cells where the regenerated topology is known to land near, but not on,
# the recorded value; each one is itemized in CALIBRATION.md.
DOCUMENTED_DEVIATIONS = {
    ("azure-1", "t_edges"),
    ("azure-2", "t_edges"),
    ("k8s-3", "l_edges"),
}

RATIO_TOLERANCE = 0.05
EDGE_TOLERANCE = 0.10


@dataclass(frozen=True)
class CellCheck:
    topology_id: str
    field: str
    got: "int | float"
    expected: "int | float"
    ok: bool
    documented_deviation: bool

    def render(self) -> str:
        if self.field == "nodes_per_endpoint":
            got, expected = f"{self.got:.2f}", f"{self.expected:.2f}"
        else:
            got, expected = str(self.got), str(self.expected)
        verdict = "pass" if self.ok else "FAIL"
        note = ""
        if self.documented_deviation and got != expected:
            note = " (documented deviation)"
        return (
            f"check {self.topology_id} {self.field}: "
            f"{got} vs {expected} -> {verdict}{note}"
        )


def _cell_ok(field: str, got, expected) -> bool:
    if field == "nodes_per_endpoint":
        return abs(round(got, 2) - expected) <= RATIO_TOLERANCE
    if field in ("i_types", "p_types", "ip_excess_degree"):
        return got == expected
    if expected == 0:
        return got == 0
    return abs(got - expected) / expected <= EDGE_TOLERANCE


def check_cell(topology_id: str, field: str, got) -> CellCheck:
    expected = getattr(REFERENCE_METRICS[topology_id], field)
    return CellCheck(
        topology_id=topology_id,
        field=field,
        got=got,
        expected=expected,
        ok=_cell_ok(field, got, expected),
        documented_deviation=(topology_id, field) in DOCUMENTED_DEVIATIONS,
    )


def check_row(topology_id: str, row: MetricsRow) -> "list[CellCheck]":
    return [
        check_cell(topology_id, field, getattr(row, field))
        for field in CHECKED_FIELDS
    ]
