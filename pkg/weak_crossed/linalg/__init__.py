from .echelon import (
    LinearSystem,
    QuotientSpace,
    Subspace,
    image_of_idempotent,
    inverse,
    quotient_by,
    rank,
    rref,
    solve_linear,
)
from .fields import QQ, Field, PrimeField, RationalField, Scalar, field_from_name
from .spaces import (
    SCALARS,
    BilinearMap,
    FinSpace,
    LinMap,
    Vec,
    format_combination,
    format_coords,
    outer,
    tensor_space,
)

__ALL__ = [
    BilinearMap,
    Field,
    FinSpace,
    LinearSystem,
    LinMap,
    PrimeField,
    QQ,
    QuotientSpace,
    RationalField,
    SCALARS,
    Scalar,
    Subspace,
    Vec,
    field_from_name,
    format_combination,
    format_coords,
    image_of_idempotent,
    inverse,
    outer,
    quotient_by,
    rank,
    rref,
    solve_linear,
    tensor_space,
]
