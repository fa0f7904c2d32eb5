"""Cores, quotients, slope statistics and multigraph involutions on integer partitions."""
from .abacus import (
    core,
    core_by_rimhooks,
    core_charges,
    cores_up_to,
    enumerate_class,
    from_core_and_quotient,
    g_c,
    g_c_inv,
    in_kc,
    is_core,
    quotient,
    remove_rimhook,
)
from .errors import CorespanError
from .involution import classify, first_arrival_tree, involute, reconstruct
from .kernels import BACKEND
from .multigraph import build_tour, multigraph, multigraph_equal, successors
from .partition import BoundaryWord, Partition, boundary_word, parse_partition, partitions_of
from .statistics import Slope, critical_rationals, stat_report

__all__ = [
    "BACKEND", "BoundaryWord", "CorespanError", "Partition", "Slope",
    "boundary_word", "build_tour", "classify", "core", "core_by_rimhooks", "core_charges",
    "cores_up_to", "critical_rationals", "enumerate_class", "first_arrival_tree",
    "from_core_and_quotient", "g_c", "g_c_inv", "in_kc", "involute", "is_core", "multigraph",
    "multigraph_equal", "parse_partition", "partitions_of", "quotient", "reconstruct",
    "remove_rimhook", "stat_report", "successors",
]
