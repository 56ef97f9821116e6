"""cat2chain: finite categories, nerves, chain complexes and 2-vector spaces over Q."""

from .chain import ChainComplex, ChainHomotopy, ChainMap, alternating_complex, betti, normalize
from .chfunctor import ch_category, ch_functor, ch_nat_transf
from .fincat import FinCategory, Functor, NatTransf, validate_category, validate_functor, validate_nat_transf
from .nerve import SimplicialSetTrunc, check_two_coskeletal, nerve, nerve_of_functor
from .ratlinalg import Matrix, kernel_basis, matmul, rank, solve_affine
from .twovect import (
    ReflexiveVectGraph,
    TwoVectSpace,
    arrow_part,
    diamond,
    eckmann_hilton_check,
    solve_composition,
)

__all__ = [
    "ChainComplex",
    "ChainHomotopy",
    "ChainMap",
    "alternating_complex",
    "betti",
    "normalize",
    "ch_category",
    "ch_functor",
    "ch_nat_transf",
    "FinCategory",
    "Functor",
    "NatTransf",
    "validate_category",
    "validate_functor",
    "validate_nat_transf",
    "SimplicialSetTrunc",
    "check_two_coskeletal",
    "nerve",
    "nerve_of_functor",
    "Matrix",
    "kernel_basis",
    "matmul",
    "rank",
    "solve_affine",
    "ReflexiveVectGraph",
    "TwoVectSpace",
    "arrow_part",
    "diamond",
    "eckmann_hilton_check",
    "solve_composition",
]
