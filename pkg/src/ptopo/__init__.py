"""Finite convergence spaces: p-topological and p-regular structures, their
modifications, ordinal series, law suites and a counterexample hunter."""

from ._fast import BACKEND
from .axioms import (
    check_diagonal_axiom,
    is_closure_map,
    is_continuous,
    is_interior_map,
    is_p_regular,
    is_p_topological,
    map_predicates,
)
from .constructions import (
    derived_construction,
    enumerate_spaces,
    final_structure,
    initial_structure,
    lattice_ops,
)
from .convergence import (
    ConvergenceStructure,
    SelectionAssignment,
    classify,
    closure_set,
    compress,
    converges,
    filter_operator,
    interior_set,
    iterate_operator,
    nbhd_of_point,
)
from .errors import (
    AxiomViolation,
    BudgetExceeded,
    CarrierMismatch,
    InvalidArgument,
    MalformedDocument,
    NoExtremumFinding,
    PtopoError,
    StabilizationError,
    UnknownPoint,
)
from .hunt import HuntVerdict, hunt
from .io import parse_space, serialize
from .kernel import Carrier, Filter, Order, PointSet, SpaceMap, combine_filters, compare_filters, map_filter
from .modifications import (
    compactness_topologies,
    finest_coarser_satisfying,
    lower_modification,
    open_sets,
    simple_modification,
    upper_modification,
)
from .series import ordinal_series
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "open_sets",
    "BACKEND",
    "AxiomViolation",
    "BudgetExceeded",
    "Carrier",
    "CarrierMismatch",
    "ConvergenceStructure",
    "Filter",
    "HuntVerdict",
    "InvalidArgument",
    "MalformedDocument",
    "NoExtremumFinding",
    "Order",
    "PointSet",
    "PtopoError",
    "SelectionAssignment",
    "SpaceMap",
    "StabilizationError",
    "UnknownPoint",
    "check_diagonal_axiom",
    "classify",
    "closure_set",
    "combine_filters",
    "compactness_topologies",
    "compare_filters",
    "compress",
    "converges",
    "derived_construction",
    "enumerate_spaces",
    "filter_operator",
    "final_structure",
    "finest_coarser_satisfying",
    "hunt",
    "initial_structure",
    "interior_set",
    "is_closure_map",
    "is_continuous",
    "is_interior_map",
    "is_p_regular",
    "is_p_topological",
    "iterate_operator",
    "lattice_ops",
    "lower_modification",
    "map_filter",
    "map_predicates",
    "nbhd_of_point",
    "ordinal_series",
    "parse_space",
    "run_suite",
    "serialize",
    "simple_modification",
    "upper_modification",
]
