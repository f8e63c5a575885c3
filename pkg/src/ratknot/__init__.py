"""Exact determinants, Fox colorings and spanning-tree counts of rational knots."""

from ratknot.diagram import (
    CheckerboardGraph,
    ColoringMatrix,
    Crossing,
    PlatDiagram,
    build_plat,
    checkerboard_graph,
    coloring_matrix,
)
from ratknot.ieo import enumerate_ieo, is_ieo
from ratknot.linalg import (
    BruteForceLimitExceeded,
    SnfResult,
    count_colorings_bruteforce,
    count_colorings_formula,
    count_colorings_snf,
    det_exact,
    first_minor,
    smith_normal_form,
    tree_count_matrix,
    tree_count_recursion,
)
from ratknot.polynomials import (
    ColorState,
    InvalidTwistError,
    MultilinearPoly,
    ReducedEquation,
    TwistVector,
    advance,
    build_p,
    determinant,
    evaluate,
    propagate,
    propagate_numeric,
    reduced_cse,
)

__version__ = "0.1.0"
