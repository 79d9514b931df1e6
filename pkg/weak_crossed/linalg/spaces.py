"""Labeled finite-dimensional spaces, vectors, linear and bilinear maps."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field as dataclass_field
from typing import Any

import numpy as np

from ..errors import ShapeError
from .fields import Field, Scalar

TENSOR_SEPARATOR = "⊗"


def _freeze(values: np.ndarray) -> np.ndarray:
    values = values.copy()
    values.flags.writeable = False
    return values


@dataclass(frozen=True)
class FinSpace:
    """A vector space with an ordered basis of distinct string labels."""

    labels: tuple[str, ...]
    factors: tuple["FinSpace", ...] = dataclass_field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            duplicates = sorted({x for x in self.labels if self.labels.count(x) > 1})
            raise ShapeError(f"Basis labels must be distinct, repeated: {duplicates}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ShapeError(f"Unknown basis label {label!r}") from None

    def basis(self, field: Field) -> Iterator["Vec"]:
        for i in range(self.dim):
            yield Vec(self, field.unit_vector(self.dim, i), field)

    def __len__(self) -> int:
        return self.dim


SCALARS = FinSpace(("1",))
"""The one-dimensional space used for scalar-valued identities."""


def tensor_space(v: FinSpace, w: FinSpace) -> FinSpace:
    """Tensor product with labels ``"vi⊗wj"`` in row-major order (i outer, j inner)."""
    return FinSpace(
        tuple(f"{a}{TENSOR_SEPARATOR}{b}" for a in v.labels for b in w.labels),
        factors=(v, w),
    )


def outer(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Row-major flattened tensor product of two coordinate vectors."""
    return (u.reshape(-1, 1) * v.reshape(1, -1)).reshape(-1)


def format_coords(coords: np.ndarray, field: Field) -> str:
    return "(" + ", ".join(field.format(c) for c in coords) + ")"


def format_combination(coords: np.ndarray, labels: Sequence[str], field: Field) -> str:
    """Render a vector as a linear combination of basis labels."""
    terms = []
    for i in np.flatnonzero(coords):
        coefficient = coords[i]
        if coefficient == field.one:
            terms.append(labels[i])
        elif coefficient == -field.one:
            terms.append(f"-{labels[i]}")
        else:
            terms.append(f"{field.format(coefficient)}*{labels[i]}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@dataclass(frozen=True, eq=False)
class Vec:
    """A coordinate vector in a labeled space."""

    space: FinSpace
    coords: np.ndarray
    field: Field

    def __post_init__(self):
        coords = self.field.coerce(self.coords)
        if coords.shape != (self.space.dim,):
            raise ShapeError(
                f"Vector of shape {coords.shape} does not fit a space of dim {self.space.dim}"
            )
        object.__setattr__(self, "coords", _freeze(coords))

    def _check_peer(self, other: "Vec"):
        if other.space != self.space:
            raise ShapeError("Vectors live in different spaces")

    def __add__(self, other: "Vec") -> "Vec":
        self._check_peer(other)
        return Vec(self.space, self.coords + other.coords, self.field)

    def __sub__(self, other: "Vec") -> "Vec":
        self._check_peer(other)
        return Vec(self.space, self.coords - other.coords, self.field)

    def scale(self, c: Any) -> "Vec":
        return Vec(self.space, self.field.scalar(c) * self.coords, self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vec):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash((self.space, tuple(self.field.format(c) for c in self.coords)))

    def is_zero(self) -> bool:
        return not np.flatnonzero(self.coords).size

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __str__(self) -> str:
        return format_combination(self.coords, self.space.labels, self.field)

    def format_coords(self) -> str:
        return format_coords(self.coords, self.field)


@dataclass(frozen=True, eq=False)
class LinMap:
    """A linear map stored as a ``codomain.dim × domain.dim`` matrix."""

    domain: FinSpace
    codomain: FinSpace
    matrix: np.ndarray
    field: Field

    def __post_init__(self):
        matrix = self.field.coerce(self.matrix)
        if matrix.shape != (self.codomain.dim, self.domain.dim):
            raise ShapeError(
                f"Matrix of shape {matrix.shape} does not map dim {self.domain.dim} "
                f"to dim {self.codomain.dim}"
            )
        object.__setattr__(self, "matrix", _freeze(matrix))

    @classmethod
    def identity(cls, space: FinSpace, field: Field) -> "LinMap":
        return cls(space, space, field.identity(space.dim), field)

    @classmethod
    def zero(cls, domain: FinSpace, codomain: FinSpace, field: Field) -> "LinMap":
        return cls(domain, codomain, field.zeros((codomain.dim, domain.dim)), field)

    def apply(self, v: "Vec | np.ndarray") -> np.ndarray:
        """Image of ``v`` as a raw coordinate array."""
        if isinstance(v, Vec):
            if v.space != self.domain:
                raise ShapeError("Vector is not in the domain of the map")
            v = v.coords
        return self.field.matmul(self.matrix, v.reshape(-1, 1)).reshape(-1)

    def __call__(self, v: "Vec | np.ndarray") -> Vec:
        return Vec(self.codomain, self.apply(v), self.field)

    def compose(self, inner: "LinMap") -> "LinMap":
        """``self ∘ inner``."""
        if inner.codomain != self.domain:
            raise ShapeError("Cannot compose maps whose inner spaces differ")
        return LinMap(
            inner.domain,
            self.codomain,
            self.field.matmul(self.matrix, inner.matrix),
            self.field,
        )

    def __matmul__(self, inner: "LinMap") -> "LinMap":
        return self.compose(inner)

    def column(self, j: int) -> Vec:
        return Vec(self.codomain, self.matrix[:, j], self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self.matrix, other.matrix)
        )

    __hash__ = None  # type: ignore[assignment]

    def is_identity(self) -> bool:
        return self.domain == self.codomain and np.array_equal(
            self.matrix, self.field.identity(self.domain.dim)
        )

    def first_mismatch(self, other: "LinMap") -> int | None:
        """First domain basis index where the two maps disagree."""
        for j in range(self.domain.dim):
            if not np.array_equal(self.matrix[:, j], other.matrix[:, j]):
                return j
        return None


@dataclass(frozen=True, eq=False)
class BilinearMap:
    """A bilinear map ``left × right → codomain`` given on basis pairs.

    ``table[i, j]`` holds the coordinates of the image of ``(e_i, e_j)``.
    """

    left: FinSpace
    right: FinSpace
    codomain: FinSpace
    table: np.ndarray
    field: Field

    def __post_init__(self):
        table = self.field.coerce(self.table)
        expected = (self.left.dim, self.right.dim, self.codomain.dim)
        if table.shape != expected:
            raise ShapeError(f"Table of shape {table.shape}, expected {expected}")
        object.__setattr__(self, "table", _freeze(table))

    def __call__(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = self.field.zeros(self.codomain.dim)
        for i in np.flatnonzero(u):
            for j in np.flatnonzero(v):
                out = out + (u[i] * v[j]) * self.table[i, j]
        return out

    def left_fixed(self, i: int, v: np.ndarray) -> np.ndarray:
        """``(e_i, v)`` for a basis element on the left."""
        return self.field.matmul(v.reshape(1, -1), self.table[i]).reshape(-1)

    def right_fixed(self, u: np.ndarray, j: int) -> np.ndarray:
        """``(u, e_j)`` for a basis element on the right."""
        return self.field.matmul(u.reshape(1, -1), self.table[:, j, :]).reshape(-1)

    def left_matrix(self, u: np.ndarray) -> np.ndarray:
        """Matrix of ``v ↦ (u, v)``."""
        rows = self.field.matmul(
            u.reshape(1, -1), self.table.reshape(self.left.dim, -1)
        ).reshape(self.right.dim, self.codomain.dim)
        return rows.T

    def right_matrix(self, v: np.ndarray) -> np.ndarray:
        """Matrix of ``u ↦ (u, v)``."""
        out = self.field.zeros((self.codomain.dim, self.left.dim))
        for i in range(self.left.dim):
            out[:, i] = self.left_fixed(i, v)
        return out

    def replace_table(self, table: np.ndarray) -> "BilinearMap":
        return BilinearMap(self.left, self.right, self.codomain, table, self.field)
