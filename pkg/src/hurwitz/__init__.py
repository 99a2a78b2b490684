"""Exact closed-in-genus Hurwitz numbers: engine, oracle, and checks."""

from .affine import monotone_affine, simple_affine
from .closedform import (
    GenusClosedForm,
    StructureReport,
    asymptotics,
    evaluate,
    monotone_closed_form,
    simple_closed_form,
    structure_checks,
)
from .exactarith import (
    ExpSum,
    FactoredRationalFunction,
    PartialFraction,
    Poly,
    partial_fractions,
    taylor_coefficients,
)
from .npoint import (
    CyclicOrder,
    EdgeAssignment,
    enumerate_cycles,
    enumerate_edge_assignments,
    monotone_generating,
    simple_generating,
)
from .oracle import ConstellationQuery, count_constellations, is_transitive, oracle_hurwitz
from .partitions import Partition, conjugate, frobenius, hook_product, partitions_of

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "partitions_of",
    "conjugate",
    "frobenius",
    "hook_product",
    "Poly",
    "FactoredRationalFunction",
    "PartialFraction",
    "ExpSum",
    "partial_fractions",
    "taylor_coefficients",
    "monotone_affine",
    "simple_affine",
    "CyclicOrder",
    "EdgeAssignment",
    "enumerate_cycles",
    "enumerate_edge_assignments",
    "monotone_generating",
    "simple_generating",
    "GenusClosedForm",
    "StructureReport",
    "monotone_closed_form",
    "simple_closed_form",
    "evaluate",
    "structure_checks",
    "asymptotics",
    "ConstellationQuery",
    "count_constellations",
    "oracle_hurwitz",
    "is_transitive",
    "__version__",
]
