"""Exact computation with integer polymatroids on small ground sets.

Rank tables, matroid-sum decompositions and their chromatic polynomials,
the hypergraph threshold construction with its coloring correspondence,
duality, mixing graphs, and quotient chains.  Hot table kernels come from
a compiled extension when it is built, with a pure-Python fallback chosen
at import (see polychrome._kernels.BACKEND).
"""
from polychrome._kernels import BACKEND
from polychrome.core import (
    AxiomViolation,
    CapExceeded,
    GroundSet,
    GroundSetMismatch,
    NegativeRank,
    NotMonotone,
    NotNormalized,
    NotSubmodular,
    Polymatroid,
    PolychromeError,
    connectivity_split,
    diagnose_table,
    isomorphic,
    validate,
    zero_polymatroid,
)
from polychrome.decomp import (
    Decomposition,
    SearchIncomplete,
    chromatic_number,
    chromatic_polynomial,
    count_ordered,
    enumerate_decompositions,
    graph_multiple_witness,
    incidence_sets,
    indecomposability_certificate,
)
from polychrome.polynomial import RationalPoly

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BACKEND",
    "CapExceeded",
    "Decomposition",
    "GroundSet",
    "GroundSetMismatch",
    "NegativeRank",
    "NotMonotone",
    "NotNormalized",
    "NotSubmodular",
    "Polymatroid",
    "PolychromeError",
    "RationalPoly",
    "SearchIncomplete",
    "chromatic_number",
    "chromatic_polynomial",
    "connectivity_split",
    "count_ordered",
    "diagnose_table",
    "enumerate_decompositions",
    "graph_multiple_witness",
    "incidence_sets",
    "indecomposability_certificate",
    "isomorphic",
    "validate",
    "zero_polymatroid",
    "__version__",
]
