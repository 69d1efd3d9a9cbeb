"""Exact computations with Hom-pre-Lie algebras over the rationals.

Structure checks, representations and their duals and tensor products,
cohomology from exact coboundary matrices, linear deformations, Nijenhuis
operators, O-operators and Hessian structures.
"""
from .algebra import (
    BilinearMap,
    HomLieAlgebra,
    HomPreLieAlgebra,
    VerificationError,
    Violation,
    ViolationReport,
    check_hom_lie,
    check_hom_pre_lie,
    check_morphism,
    commutator,
    subadjacent,
)
from .cohomology import (
    CochainSizeError,
    CohomologyRow,
    LieCochain,
    PreLieCochain,
    cohomology_table,
    induced_rep_on_hom,
    is_cocycle,
    lie_coboundary,
    lie_coboundary_matrix,
    lie_cohomology_table,
    phi,
    phi_inverse,
    phi_matrix,
    pre_lie_coboundary,
    pre_lie_coboundary_matrix,
    pre_lie_coboundary_matrix_via_phi,
)
from .deformation import (
    DeformationVerdict,
    check_equivalence,
    check_hom_lie_nijenhuis,
    check_linear_deformation,
    check_nijenhuis,
    coboundary_of_operator,
    deformed_algebra,
    deformed_product,
    find_equivalence_witness,
    hom_lie_deformation_report,
    hom_lie_deformed_product,
    subadjacent_deformation,
    trivial_deformation_from_nijenhuis,
)
from .linalg import DimensionError, Matrix, SingularMatrixError, kernel_basis, rank, solve
from .operators import (
    HessianSolution,
    b_sharp,
    check_hessian,
    check_o_operator,
    hessian_to_o_operator,
    lift_to_semidirect_nijenhuis,
    o_operator_to_hessian,
    solve_hessian,
)
from .representations import (
    HomLieRepresentation,
    Representation,
    adjoint_rep,
    anticommuting_mu_conditions,
    check_hom_lie_rep,
    check_rep,
    dual_rep,
    regular_rep,
    semidirect_product,
    tensor_rep,
    trivial_rep,
)

__version__ = "0.1.0"

__all__ = [
    "BilinearMap",
    "CochainSizeError",
    "CohomologyRow",
    "DeformationVerdict",
    "DimensionError",
    "HessianSolution",
    "HomLieAlgebra",
    "HomLieRepresentation",
    "HomPreLieAlgebra",
    "LieCochain",
    "Matrix",
    "PreLieCochain",
    "Representation",
    "SingularMatrixError",
    "VerificationError",
    "Violation",
    "ViolationReport",
    "adjoint_rep",
    "anticommuting_mu_conditions",
    "b_sharp",
    "check_equivalence",
    "check_hessian",
    "check_hom_lie",
    "check_hom_lie_nijenhuis",
    "check_hom_lie_rep",
    "check_hom_pre_lie",
    "check_linear_deformation",
    "check_morphism",
    "check_nijenhuis",
    "check_o_operator",
    "check_rep",
    "coboundary_of_operator",
    "cohomology_table",
    "commutator",
    "deformed_algebra",
    "deformed_product",
    "dual_rep",
    "find_equivalence_witness",
    "hessian_to_o_operator",
    "hom_lie_deformation_report",
    "hom_lie_deformed_product",
    "induced_rep_on_hom",
    "is_cocycle",
    "kernel_basis",
    "lie_coboundary",
    "lie_coboundary_matrix",
    "lie_cohomology_table",
    "lift_to_semidirect_nijenhuis",
    "o_operator_to_hessian",
    "phi",
    "phi_inverse",
    "phi_matrix",
    "pre_lie_coboundary",
    "pre_lie_coboundary_matrix",
    "pre_lie_coboundary_matrix_via_phi",
    "rank",
    "regular_rep",
    "semidirect_product",
    "solve",
    "solve_hessian",
    "subadjacent",
    "subadjacent_deformation",
    "tensor_rep",
    "trivial_deformation_from_nijenhuis",
    "trivial_rep",
]
