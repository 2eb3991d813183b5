"""Shared sizing knobs for the topology generators."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TopologyParams:
    """Workload dimensions shared by every generator.

    Defaults give the reference layout: two 4-tier applications and four
    shared service groups with two endpoints each, 24 endpoints in total.
    """

    apps: int = 2
    tiers_per_app: int = 4
    shared_groups: int = 4
    endpoints_per_group: int = 2
    with_acls: bool = True

    def __post_init__(self):
        if self.apps < 0 or self.shared_groups < 0:
            raise ValueError("apps and shared_groups must be nonnegative")
        if self.apps and self.tiers_per_app < 1:
            raise ValueError("tiers_per_app must be at least 1")
        if self.endpoints_per_group < 1:
            raise ValueError("endpoints_per_group must be at least 1")
        if self.total_groups() < 1:
            raise ValueError("topology needs at least one workload group")

    def total_groups(self) -> int:
        return self.apps * self.tiers_per_app + self.shared_groups

    def total_endpoints(self) -> int:
        return self.total_groups() * self.endpoints_per_group


def ensure(params: "TopologyParams | None") -> TopologyParams:
    return params if params is not None else TopologyParams()
