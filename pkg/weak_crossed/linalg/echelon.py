"""Row reduction, subspaces, quotients and exact linear-system solving.

Pivots are always chosen left to right and the first row with a nonzero entry
in the pivot column is swapped up, so every derived basis is reproducible.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import NotIdempotentError, ShapeError
from .fields import Field, Scalar
from .spaces import FinSpace, LinMap, Vec

logger = logging.getLogger(__name__)


def rref(matrix: np.ndarray, field: Field) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns of ``matrix``."""
    reduced = field.coerce(matrix).copy()
    m, n = reduced.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        candidates = [row for row in range(r, m) if not field.is_zero(reduced[row, c])]
        if not candidates:
            continue
        pivot_row = candidates[0]
        if pivot_row != r:
            reduced[[r, pivot_row], :] = reduced[[pivot_row, r], :]
        reduced[r, :] = reduced[r, :] / reduced[r, c]
        for row in range(m):
            if row != r and not field.is_zero(reduced[row, c]):
                reduced[row, :] = reduced[row, :] - reduced[row, c] * reduced[r, :]
        pivots.append(c)
        r += 1
    return reduced[:r], tuple(pivots)


def rank(matrix: np.ndarray, field: Field) -> int:
    return len(rref(matrix, field)[1])


def inverse(matrix: np.ndarray, field: Field) -> np.ndarray | None:
    """Inverse of a square matrix, or ``None`` when it is singular."""
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise ShapeError(f"Cannot invert a non-square matrix of shape {matrix.shape}")
    augmented = field.zeros((n, 2 * n))
    augmented[:, :n] = matrix
    augmented[:, n:] = field.identity(n)
    reduced, pivots = rref(augmented, field)
    if pivots[:n] != tuple(range(n)) or len(pivots) < n:
        return None
    return reduced[:, n:]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace given by a basis in reduced row-echelon form."""

    ambient: FinSpace
    basis: np.ndarray
    pivots: tuple[int, ...]
    field: Field

    @classmethod
    def span(cls, ambient: FinSpace, vectors: Iterable[Vec | np.ndarray], field: Field):
        rows = []
        for v in vectors:
            if isinstance(v, Vec):
                if v.space != ambient:
                    raise ShapeError("Spanning vector is not in the ambient space")
                v = v.coords
            if v.shape != (ambient.dim,):
                raise ShapeError(f"Spanning vector of shape {v.shape} in dim {ambient.dim}")
            rows.append(v)
        matrix = field.zeros((len(rows), ambient.dim))
        for i, row in enumerate(rows):
            matrix[i, :] = row
        basis, pivots = rref(matrix, field)
        return cls(ambient, basis, pivots, field)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> list[Vec]:
        return [Vec(self.ambient, row, self.field) for row in self.basis]

    def rows(self) -> list[np.ndarray]:
        return [self.basis[i] for i in range(self.dim)]

    def residue(self, v: np.ndarray) -> np.ndarray:
        """``v`` minus its reduction against the echelon basis."""
        out = v.copy()
        for r, c in enumerate(self.pivots):
            if not self.field.is_zero(out[c]):
                out = out - out[c] * self.basis[r]
        return out

    def contains(self, v: Vec | np.ndarray) -> bool:
        if isinstance(v, Vec):
            v = v.coords
        return not np.flatnonzero(self.residue(v)).size

    def coordinates(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of a member with respect to the echelon basis."""
        return v[list(self.pivots)] if self.pivots else self.field.zeros(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    ambient: FinSpace
    relations: Subspace
    quotient: FinSpace
    project: LinMap
    section: LinMap


def quotient_by(
    ambient: FinSpace, relation_vectors: Sequence[Vec | np.ndarray], field: Field
) -> QuotientSpace:
    """Quotient of ``ambient`` by the span of ``relation_vectors``.

    The quotient basis is labeled by the non-pivot ambient labels; ``section``
    sends each quotient basis vector to the matching ambient basis vector.
    """
    relations = Subspace.span(ambient, relation_vectors, field)
    pivot_set = set(relations.pivots)
    free = [j for j in range(ambient.dim) if j not in pivot_set]
    quotient = FinSpace(tuple(ambient.labels[j] for j in free))
    position = {j: t for t, j in enumerate(free)}

    project = field.zeros((len(free), ambient.dim))
    for j in free:
        project[position[j], j] = field.one
    for r, c in enumerate(relations.pivots):
        for j in free:
            project[position[j], c] = -relations.basis[r, j]

    section = field.zeros((ambient.dim, len(free)))
    for j in free:
        section[j, position[j]] = field.one

    logger.debug(
        f"Quotient of dim {ambient.dim} by {relations.dim} relations has dim {len(free)}"
    )
    return QuotientSpace(
        ambient=ambient,
        relations=relations,
        quotient=quotient,
        project=LinMap(ambient, quotient, project, field),
        section=LinMap(quotient, ambient, section, field),
    )


def image_of_idempotent(e: LinMap) -> tuple[Subspace, LinMap, LinMap]:
    """Image of an idempotent with its inclusion and retraction.

    The abstract image space is labeled by the ambient labels at the pivot
    columns of the echelon basis; ``incl ∘ retr = e`` and ``retr ∘ incl = id``.
    """
    if e.domain != e.codomain:
        raise ShapeError("An idempotent must be an endomorphism")
    square = e.compose(e)
    column = square.first_mismatch(e)
    if column is not None:
        raise NotIdempotentError(
            f"Map is not idempotent: e∘e and e differ on basis vector "
            f"{e.domain.labels[column]!r}",
            column,
        )
    field = e.field
    sub = Subspace.span(e.domain, [e.matrix[:, j] for j in range(e.domain.dim)], field)
    image = FinSpace(tuple(e.domain.labels[c] for c in sub.pivots))
    incl = LinMap(image, e.codomain, sub.basis.T, field)
    retr = LinMap(e.domain, image, e.matrix[list(sub.pivots), :], field)
    return sub, incl, retr


class LinearSystem:
    """An affine system over a labeled space of unknowns, reduced as rows arrive.

    Rows are kept in reduced form keyed by their pivot column: a new row is
    reduced against the stored pivots, normalized, and then eliminated from
    the stored rows, so zero coefficients are never touched.
    """

    def __init__(self, unknowns: FinSpace, field: Field):
        self.unknowns = unknowns
        self.field = field
        self._rows: dict[int, np.ndarray] = {}
        self._inconsistent_row: int | None = None
        self._count = 0

    @property
    def consistent(self) -> bool:
        return self._inconsistent_row is None

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def nullity(self) -> int:
        return self.unknowns.dim - self.rank

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(sorted(self._rows))

    def __len__(self) -> int:
        return self._count

    def add(self, coefficients: np.ndarray, rhs: Scalar):
        n = self.unknowns.dim
        if coefficients.shape != (n,):
            raise ShapeError(f"Constraint of shape {coefficients.shape} over {n} unknowns")
        row = self.field.zeros(n + 1)
        row[:n] = coefficients
        row[n] = self.field.scalar(rhs) if not isinstance(rhs, np.ndarray) else rhs
        for c in [c for c in np.flatnonzero(row[:n]) if c in self._rows]:
            row = row - row[c] * self._rows[c]
        self._count += 1
        leading = np.flatnonzero(row[:n])
        if not leading.size:
            if not self.field.is_zero(row[n]) and self._inconsistent_row is None:
                self._inconsistent_row = self._count - 1
            return
        pivot = int(leading[0])
        row = row / row[pivot]
        for c, stored in self._rows.items():
            if not self.field.is_zero(stored[pivot]):
                self._rows[c] = stored - stored[pivot] * row
        self._rows[pivot] = row

    def solve(self, free_values: np.ndarray | None = None) -> np.ndarray | None:
        """One solution, free variables set from ``free_values`` (zero by default)."""
        if not self.consistent:
            return None
        n = self.unknowns.dim
        x = self.field.zeros(n)
        if free_values is not None:
            for j in range(n):
                if j not in self._rows:
                    x[j] = free_values[j]
        for c, row in self._rows.items():
            x[c] = row[n] - self.field.matmul(
                row[:n].reshape(1, -1), x.reshape(-1, 1)
            )[0, 0]
        return x


def solve_linear(
    rows: Sequence[tuple[Vec, Scalar]],
    unknowns: FinSpace,
    field: Field,
    free_values: np.ndarray | None = None,
) -> Vec | None:
    """Solve ``⟨v, x⟩ = b`` for every ``(v, b)`` row, or ``None`` if inconsistent."""
    system = LinearSystem(unknowns, field)
    for v, b in rows:
        if v.space != unknowns:
            raise ShapeError("Constraint row is not over the space of unknowns")
        system.add(v.coords, b)
    solution = system.solve(free_values)
    return None if solution is None else Vec(unknowns, solution, field)
