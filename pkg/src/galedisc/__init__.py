"""Exact computations with hypersurfaces parametrized by integer exponent
matrices: implicitization of the image, degree formulas via staircase
multiplicities at base points, and transfer of defining polynomials along
monomial coordinate changes between nested exponent lattices.
"""

from .intmat import (
    IntMatrix,
    SNFDecomposition,
    adjugate,
    gcd_maximal_minors,
    hermite_column_basis,
    kernel_basis,
    lll_reduce,
    smith_normal_form,
    solve_in_lattice,
)
from .mpoly import (
    MPoly,
    content_primitive,
    partial_derivative,
    squarefree_part,
    substitute_monomial,
    sylvester_resultant,
)
from .parametrization import (
    ParamSpec,
    Verdict,
    build,
    defect_test,
    evaluate_psi,
    log_jacobian,
    merge_proportional_rows,
    primitive_direction,
    sample_off_arrangement,
)
from .basepoints import BasePoint, LocalIdeal, base_points, is_uniform, localize
from .degree import (
    DegreeReport,
    Staircase2,
    colength,
    degree_uniform,
    minimal_generators,
    sparse_origin_multiplicity,
    staircase_multiplicity,
)
from .discriminant import (
    diagram_check,
    gauss_inverse_check,
    gauss_map,
    group_product,
    homogenize,
    implicitize,
    lambda_map,
    monomial_map,
    transfer,
)

__version__ = "0.1.0"

__all__ = [
    "IntMatrix",
    "SNFDecomposition",
    "adjugate",
    "gcd_maximal_minors",
    "hermite_column_basis",
    "kernel_basis",
    "lll_reduce",
    "smith_normal_form",
    "solve_in_lattice",
    "MPoly",
    "content_primitive",
    "partial_derivative",
    "squarefree_part",
    "substitute_monomial",
    "sylvester_resultant",
    "ParamSpec",
    "Verdict",
    "build",
    "defect_test",
    "evaluate_psi",
    "log_jacobian",
    "merge_proportional_rows",
    "primitive_direction",
    "sample_off_arrangement",
    "BasePoint",
    "LocalIdeal",
    "base_points",
    "is_uniform",
    "localize",
    "DegreeReport",
    "Staircase2",
    "colength",
    "degree_uniform",
    "minimal_generators",
    "sparse_origin_multiplicity",
    "staircase_multiplicity",
    "diagram_check",
    "gauss_inverse_check",
    "gauss_map",
    "group_product",
    "homogenize",
    "implicitize",
    "lambda_map",
    "monomial_map",
    "transfer",
]
