"""Exact Hall algebras of quiver representations over the field with one element."""

from .pointed import (
    CYCLIC_BLOCK,
    NILPOTENT_BLOCK,
    EndoBlockDecomposition,
    PartialInjection,
    PointedSpace,
    compose,
    cokernel,
    count_subspaces,
    cyclic_block,
    direct_sum,
    direct_sum_map,
    endo_from_blocks,
    jordan_decompose,
    kernel,
    nilpotent_block,
    tensor,
    transpose,
)
from .quiver import (
    Quiver,
    Rep,
    RepMorphism,
    cyclic_quiver,
    is_nilpotent,
    jordan_quiver,
    linear_quiver,
    make_rep,
    quotient,
    rep_cokernel,
    rep_direct_sum,
    rep_kernel,
    sub_rep,
    subrepresentations,
    validate,
    winding_rep,
    zero_rep,
)
from .structure import (
    CanonicalKey,
    Decomposition,
    aut_count,
    canonical_key,
    composition_series,
    enumerate_indecomposables,
    enumerate_reps,
    indecomposable_summands,
    is_indecomposable,
    iso,
    simple,
    simple_power,
)
from .hall import (
    ExtHallElement,
    HallElement,
    TensorElement,
    ext_product,
    graded_dim,
    hall_coproduct,
    hall_product,
    is_primitive,
    simple_class,
    structure_constant,
    unit_key,
)
from .kacmoody import (
    cartan_matrix,
    composition_algebra_graded_dim,
    filtration_count,
    filtration_count_formula,
    is_finite_type,
    positive_roots,
    rho_defect_report,
    serre_check,
    un_plus_graded_dim,
)
from .families import (
    CyclicIndec,
    LoopBasisElement,
    cyclic_bracket,
    cyclic_indec_rep,
    jordan_class_of_partition,
    monomial_symmetric_product,
    partition_of_jordan_class,
    psi,
    typeA_indecomposables,
    verify_jordan_iso,
    verify_psi_homomorphism,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
