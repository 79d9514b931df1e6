from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

import numpy as np

from ..errors import CrossedError, ShapeError
from ..hopf import StructuredAlgebra, WeakHopfAlgebra
from ..linalg import BilinearMap, Field, FinSpace, LinMap, Scalar, format_combination
from ..report import ConditionReport


class Variant(StrEnum):
    BB = "bb"
    AG = "ag"


def _frozen(values: np.ndarray) -> np.ndarray:
    values = values.copy()
    values.flags.writeable = False
    return values


@dataclass(frozen=True, eq=False)
class Measuring:
    """An action ``h·a`` of a weak Hopf algebra on an algebra.

    ``action[i, j]`` holds the coordinates of ``e_i·e_j`` in ``A``. Nothing
    beyond the shape is assumed; the measuring conditions are checked separately.
    """

    hopf: WeakHopfAlgebra
    algebra: StructuredAlgebra
    action: np.ndarray

    def __post_init__(self):
        if self.hopf.field != self.algebra.field:
            raise ShapeError("H and A must be defined over the same field")
        action = self.field.coerce(self.action)
        expected = (self.hopf.dim, self.algebra.dim, self.algebra.dim)
        if action.shape != expected:
            raise ShapeError(f"Action table of shape {action.shape}, expected {expected}")
        object.__setattr__(self, "action", _frozen(action))

    @property
    def field(self) -> Field:
        return self.hopf.field

    @property
    def h_space(self) -> FinSpace:
        return self.hopf.space

    @property
    def a_space(self) -> FinSpace:
        return self.algebra.space

    @property
    def n_h(self) -> int:
        return self.hopf.dim

    @property
    def n_a(self) -> int:
        return self.algebra.dim

    @cached_property
    def rho(self) -> BilinearMap:
        return BilinearMap(self.h_space, self.a_space, self.a_space, self.action, self.field)

    def act(self, h: np.ndarray, a: np.ndarray) -> np.ndarray:
        return self.rho(h, a)

    def act_basis(self, i: int, a: np.ndarray) -> np.ndarray:
        return self.rho.left_fixed(i, a)

    def act_matrix(self, h: np.ndarray) -> np.ndarray:
        """Matrix of ``a ↦ h·a``."""
        return self.rho.left_matrix(h)

    @cached_property
    def ones(self) -> np.ndarray:
        """``ones[i] = e_i·1_A``."""
        return _frozen(
            self.field.matmul(
                np.transpose(self.action, (0, 2, 1)).reshape(self.n_h * self.n_a, self.n_a),
                self.algebra.unit.reshape(-1, 1),
            ).reshape(self.n_h, self.n_a)
        )

    def one_of(self, h: np.ndarray) -> np.ndarray:
        """``h·1_A``."""
        return self.field.matmul(h.reshape(1, -1), self.ones).reshape(-1)

    def amul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.algebra.multiply(x, y)

    def hmul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.hopf.algebra.multiply(u, v)

    def h_basis(self, i: int) -> np.ndarray:
        return self.field.unit_vector(self.n_h, i)

    def a_basis(self, j: int) -> np.ndarray:
        return self.field.unit_vector(self.n_a, j)

    def product_basis(self, i: int, j: int) -> np.ndarray:
        """``e_i e_j`` in ``H``."""
        return self.hopf.algebra.mult[i, j]

    @cached_property
    def hl_basis(self) -> list[np.ndarray]:
        return self.hopf.h_left.rows()

    @cached_property
    def hr_basis(self) -> list[np.ndarray]:
        return self.hopf.h_right.rows()

    def sinv(self, h: np.ndarray) -> np.ndarray:
        return self.hopf.antipode_inv.apply(h)

    def h_name(self, h: np.ndarray) -> str:
        return format_combination(h, self.h_space.labels, self.field)

    @property
    def unit_h(self) -> np.ndarray:
        return self.hopf.bialgebra.unit

    @cached_property
    def unit_legs(self) -> tuple[tuple[Scalar, int, int], ...]:
        """Nonzero terms of ``Δ(1)``."""
        d1 = self.hopf.bialgebra.unit_legs
        return tuple(
            (d1[j, k], j, k)
            for j in range(self.n_h)
            for k in range(self.n_h)
            if not self.field.is_zero(d1[j, k])
        )


@dataclass(frozen=True, eq=False)
class CocycleTable:
    """``table[i, j]`` holds the coordinates of ``σ(e_i, e_j)`` (or ``ς``) in ``A``."""

    measuring: Measuring
    table: np.ndarray
    variant: Variant

    def __post_init__(self):
        m = self.measuring
        table = m.field.coerce(self.table)
        expected = (m.n_h, m.n_h, m.n_a)
        if table.shape != expected:
            raise ShapeError(f"Cocycle table of shape {table.shape}, expected {expected}")
        object.__setattr__(self, "table", _frozen(table))
        object.__setattr__(self, "variant", Variant(self.variant))

    @cached_property
    def map(self) -> BilinearMap:
        m = self.measuring
        return BilinearMap(m.h_space, m.h_space, m.a_space, self.table, m.field)

    def __call__(self, h: np.ndarray, k: np.ndarray) -> np.ndarray:
        return self.map(h, k)

    def retag(self, variant: Variant) -> "CocycleTable":
        return CocycleTable(self.measuring, self.table, variant)

    def same_table(self, other: "CocycleTable | CocycleInverse") -> bool:
        return np.array_equal(self.table, other.table)


@dataclass(frozen=True, eq=False)
class CocycleInverse:
    """A solved convolution inverse together with the report that verified it."""

    cocycle: CocycleTable
    table: np.ndarray
    variant: Variant
    report: ConditionReport

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen(self.cocycle.measuring.field.coerce(self.table)))

    def as_table(self) -> CocycleTable:
        """The inverse viewed as a bilinear table on ``H ⊗ H``."""
        return CocycleTable(self.cocycle.measuring, self.table, self.variant)


@dataclass(frozen=True, kw_only=True, eq=False)
class CrossedProduct:
    """A crossed product algebra on a carrier inside or over ``A ⊗ H``.

    ``embedding`` sends a carrier basis vector to its chosen representative in
    ``A ⊗ H`` and ``projection`` is a left inverse of it.
    """

    provenance: Variant
    algebra: StructuredAlgebra
    ambient: FinSpace
    embedding: LinMap
    projection: LinMap
    delta: LinMap
    report: ConditionReport
    measuring: Measuring

    @property
    def space(self) -> FinSpace:
        return self.algebra.space

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def unit(self) -> np.ndarray:
        return self.algebra.unit

    @property
    def verified(self) -> bool:
        return bool(len(self.report)) and all(v.passed is True for v in self.report)

    def raise_for_failure(self):
        if self.verified:
            return
        failing = self.report.first_failure()
        detail = failing.condition if failing else "unchecked conditions"
        raise CrossedError(
            f"The {self.provenance.value} crossed product does not verify: {detail}", self.report
        )

    def left_action(self, a: np.ndarray, x: np.ndarray) -> np.ndarray:
        """``a·(b ⊗ h) = ab ⊗ h`` on carrier coordinates."""
        m = self.measuring
        rep = self.embedding.apply(x).reshape(m.n_a, m.n_h)
        acted = self.field.matmul(m.algebra.left_matrix(a), rep).reshape(-1)
        return self.projection.apply(acted)
