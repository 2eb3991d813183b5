"""Typed graph models and complexity metrics for network configurations.

The package parses four configuration dialects (cloud resource JSON,
Kubernetes manifests, switch CLI text, and group-policy JSON) into one
undirected property multigraph model, then derives comparable complexity
metrics from the graph.
"""

from .errors import (
    BuildError,
    CidrError,
    GraphError,
    MetricsError,
    NetComplexityError,
    ParseError,
    ReportError,
    TaxonomyError,
)
from .graph import (
    Cidr,
    Edge,
    EdgeKind,
    NetGraph,
    Vertex,
    VertexCategory,
    cidr_contains,
    derive_contains_edges,
    validate_graph,
)
from .metrics import (
    MetricsRow,
    compute_metrics,
    count_edges_by_kind,
    count_endpoints,
    count_types_by_category,
    ip_excess_degree,
)
from .parsers import DIALECTS, load_files, parse_aci, parse_azure, parse_cli, parse_k8s
from .report import (
    TableRow,
    TypeSummaryGraph,
    as_table_row,
    export_dot,
    export_graphml,
    read_rows_csv,
    render_comparison,
    summarize_types,
)
from .resources import (
    LITERAL_TYPE,
    Resource,
    ResourceRef,
    ResourceSet,
    build_graph,
    merge_resource_sets,
)
from .taxonomy import Taxonomy
from .topologies import TOPOLOGY_IDS, TopologyParams, TopologySpec, generate, write_native

__version__ = "0.1.0"

__all__ = [
    "BuildError",
    "Cidr",
    "CidrError",
    "DIALECTS",
    "Edge",
    "EdgeKind",
    "GraphError",
    "LITERAL_TYPE",
    "MetricsError",
    "MetricsRow",
    "NetComplexityError",
    "NetGraph",
    "ParseError",
    "ReportError",
    "Resource",
    "ResourceRef",
    "ResourceSet",
    "TOPOLOGY_IDS",
    "TableRow",
    "Taxonomy",
    "TaxonomyError",
    "TopologyParams",
    "TopologySpec",
    "TypeSummaryGraph",
    "Vertex",
    "VertexCategory",
    "as_table_row",
    "build_graph",
    "cidr_contains",
    "compute_metrics",
    "count_edges_by_kind",
    "count_endpoints",
    "count_types_by_category",
    "derive_contains_edges",
    "export_dot",
    "export_graphml",
    "generate",
    "ip_excess_degree",
    "load_files",
    "merge_resource_sets",
    "parse_aci",
    "parse_azure",
    "parse_cli",
    "parse_k8s",
    "read_rows_csv",
    "render_comparison",
    "summarize_types",
    "validate_graph",
    "write_native",
]
