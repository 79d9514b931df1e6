"""Exact ground fields.

Every coordinate array in the package is a numpy array whose entries live in
one of two fields: the rationals (``Fraction`` objects in an object array) or
a prime field (a ``galois`` FieldArray). Code outside this module never looks
at the dtype; it goes through the ``Field`` methods below and otherwise uses
only indexing, elementwise arithmetic and 2-D matrix products, which both
array kinds support.
"""

import re
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import galois
import numpy as np

from ..errors import FieldError

Scalar = Any
"""A field element: ``Fraction`` for the rationals, a 0-d FieldArray for GF(p)."""

_SCALAR_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")
_FIELD_PATTERN = re.compile(r"^GF\((\d+)\)$")


def parse_fraction(value: Any) -> Fraction:
    """Parse an exact scalar from an int, a Fraction or a ``"p/q"`` string."""
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, float | np.floating):
        raise FieldError(f"Floating-point value {value!r} is not an exact scalar")
    if isinstance(value, int | np.integer):
        return Fraction(int(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        match = _SCALAR_PATTERN.match(value)
        if not match:
            raise FieldError(f"Malformed scalar {value!r}; expected an integer or 'p/q'")
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise FieldError(f"Zero denominator in scalar {value!r}")
        return Fraction(int(numerator), int(denominator or 1))
    raise FieldError(f"Unsupported scalar {value!r} of type {type(value).__name__}")


class Field(metaclass=ABCMeta):
    """A ground field together with its array representation."""

    name: str

    @abstractmethod
    def zeros(self, shape: int | tuple[int, ...]) -> np.ndarray: ...

    @abstractmethod
    def array(self, values: Any) -> np.ndarray:
        """Convert nested ints, Fractions or ``"p/q"`` strings into a field array."""
        ...

    @abstractmethod
    def scalar(self, value: Any) -> Scalar: ...

    @abstractmethod
    def format(self, value: Scalar) -> str: ...

    @abstractmethod
    def to_wire(self, value: Scalar) -> int | str:
        """The JSON representation of a scalar: an int, or ``"p/q"``."""
        ...

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def unit_vector(self, n: int, i: int) -> np.ndarray:
        out = self.zeros(n)
        out[i] = self.one
        return out

    def is_zero(self, value: Any) -> bool:
        return bool(value == self.zero)

    def inverse(self, value: Scalar) -> Scalar:
        if self.is_zero(value):
            raise FieldError(f"Division by zero in {self.name}")
        return self.one / value

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """2-D matrix product that also handles empty inner dimensions."""
        if left.shape[1] != right.shape[0]:
            raise FieldError(
                f"Cannot multiply matrices of shapes {left.shape} and {right.shape}"
            )
        if left.shape[1] == 0 or left.shape[0] == 0 or right.shape[1] == 0:
            return self.zeros((left.shape[0], right.shape[1]))
        return left @ right

    def owns(self, values: np.ndarray) -> bool:
        """Whether ``values`` already is an array of this field."""
        return self._owns(values)

    @abstractmethod
    def _owns(self, values: np.ndarray) -> bool: ...

    def coerce(self, values: Any) -> np.ndarray:
        if isinstance(values, np.ndarray) and self.owns(values):
            return values
        return self.array(values)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RationalField(Field):
    """The rationals, stored as ``Fraction`` objects (always in lowest terms)."""

    name: str = "QQ"

    def zeros(self, shape: int | tuple[int, ...]) -> np.ndarray:
        return np.full(shape, Fraction(0), dtype=object)

    def array(self, values: Any) -> np.ndarray:
        raw = np.asarray(values, dtype=object)
        out = np.empty(raw.shape, dtype=object)
        for index in np.ndindex(raw.shape):
            out[index] = parse_fraction(raw[index])
        return out

    def scalar(self, value: Any) -> Fraction:
        return parse_fraction(value)

    def format(self, value: Scalar) -> str:
        return str(Fraction(value))

    def to_wire(self, value: Scalar) -> int | str:
        value = Fraction(value)
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"

    def _owns(self, values: np.ndarray) -> bool:
        return values.dtype == object and all(
            isinstance(v, Fraction) for v in values.flat
        )


@dataclass(frozen=True)
class PrimeField(Field):
    """Integers modulo a prime ``p``, backed by ``galois.GF(p)``."""

    p: int

    def __post_init__(self):
        if self.p < 2 or not galois.is_prime(self.p):
            raise FieldError(f"GF({self.p}) is not a prime field")

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"GF({self.p})"

    @property
    def gf(self) -> type[galois.FieldArray]:
        return galois.GF(self.p)

    def _residue(self, value: Any) -> int:
        if isinstance(value, galois.FieldArray):
            return int(value)
        fraction = parse_fraction(value)
        if fraction.denominator % self.p == 0:
            raise FieldError(f"Division by zero in {self.name} for scalar {value!r}")
        return (fraction.numerator * pow(fraction.denominator, -1, self.p)) % self.p

    def zeros(self, shape: int | tuple[int, ...]) -> np.ndarray:
        return self.gf.Zeros(shape)

    def array(self, values: Any) -> np.ndarray:
        if isinstance(values, galois.FieldArray):
            if type(values) is not self.gf:
                raise FieldError(f"Cannot mix {type(values).name} with {self.name}")
            return values.copy()
        raw = np.asarray(values, dtype=object)
        residues = np.zeros(raw.shape, dtype=np.int64)
        for index in np.ndindex(raw.shape):
            residues[index] = self._residue(raw[index])
        return self.gf(residues)

    def scalar(self, value: Any) -> Scalar:
        return self.gf(self._residue(value))

    def format(self, value: Scalar) -> str:
        return str(int(value))

    def to_wire(self, value: Scalar) -> int | str:
        return int(value)

    def _owns(self, values: np.ndarray) -> bool:
        return type(values) is self.gf


QQ = RationalField()


def field_from_name(name: str) -> Field:
    """Resolve ``"QQ"`` or ``"GF(p)"``."""
    if name == QQ.name:
        return QQ
    match = _FIELD_PATTERN.match(name.strip())
    if not match:
        raise FieldError(f"Unknown field {name!r}; expected 'QQ' or 'GF(p)'")
    return PrimeField(int(match.group(1)))
