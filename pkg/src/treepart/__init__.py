"""Tree-partitions of bounded-treewidth graphs over bounded-degree trees.

Public surface: the graph type with PACE .gr parsing and fixtures, tree
decompositions (validator, greedy and exact builders, .td I/O), the
balanced-separator step, the bounded-degree tree-partition construction
with its validators / normalizer / converter / exact oracle, and the
extremal complete-tree lower-bound machinery.
"""

from .graphs import (
    FIXTURE_KINDS,
    FORMATS,
    Graph,
    GraphFormatError,
    ParseWarning,
    components,
    gen_fixture,
    parse_graph,
    write_graph,
)
from .lowerbound import (
    CompleteTree,
    LbVerdict,
    LowerBoundError,
    check_lb_certificate,
    complete_tree_from_graph,
    complete_tree_size,
    gen_complete_tree,
    lb_alpha,
)
from .separator import SeparatorError, SeparatorResult, balanced_separator
from .treedecomp import (
    STRATEGIES,
    TdFormatError,
    TdValidationError,
    TreeDecomposition,
    exact_td_small,
    heuristic_td,
    parse_td,
    validate_td,
    write_td,
)
from .treepartition import (
    ALPHA_PRESETS,
    AlphaParams,
    BoundSet,
    BoundViolationError,
    PartitionError,
    TpFormatError,
    TpStats,
    TreePartition,
    bound_constants,
    exact_tpw,
    normalize_tp,
    parse_tp,
    td_from_tp,
    tree_partition,
    tree_partition_with_stats,
    validate_tp,
    write_tp,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_PRESETS",
    "AlphaParams",
    "BoundSet",
    "BoundViolationError",
    "CompleteTree",
    "FIXTURE_KINDS",
    "FORMATS",
    "Graph",
    "GraphFormatError",
    "LbVerdict",
    "LowerBoundError",
    "ParseWarning",
    "PartitionError",
    "STRATEGIES",
    "SeparatorError",
    "SeparatorResult",
    "TdFormatError",
    "TdValidationError",
    "TpFormatError",
    "TpStats",
    "TreeDecomposition",
    "TreePartition",
    "balanced_separator",
    "bound_constants",
    "check_lb_certificate",
    "complete_tree_from_graph",
    "complete_tree_size",
    "components",
    "exact_td_small",
    "exact_tpw",
    "gen_complete_tree",
    "gen_fixture",
    "heuristic_td",
    "lb_alpha",
    "normalize_tp",
    "parse_graph",
    "parse_td",
    "parse_tp",
    "td_from_tp",
    "tree_partition",
    "tree_partition_with_stats",
    "validate_td",
    "validate_tp",
    "write_graph",
    "write_td",
    "write_tp",
]
