from __future__ import annotations

import pytest

from netcomplexity import Taxonomy, build_graph, compute_metrics
from netcomplexity.reference import DISPLAY_NAMES
from netcomplexity.topologies import TOPOLOGY_IDS, generate


@pytest.fixture(scope="session")
def six_topologies():
    """All six bundled topologies, built once: {id: (graph, metrics row)}."""
    taxonomy = Taxonomy.default()
    built = {}
    for tid in TOPOLOGY_IDS:
        graph = build_graph(generate(tid), taxonomy, name=DISPLAY_NAMES[tid])
        built[tid] = (graph, compute_metrics(graph))
    return built
