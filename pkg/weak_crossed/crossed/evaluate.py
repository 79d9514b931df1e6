"""Sweedler-leg evaluators shared by the condition checkers and the solvers.

Each helper contracts the structure constants of ``Δ`` directly: a sum over
``h^{(1)} ⊗ h^{(2)}`` is a loop over the nonzero legs of ``Δ(e_h)``.
"""

from collections.abc import Callable, Iterator

import numpy as np

from ..linalg import Scalar
from .base import Measuring

TableAt = Callable[[int, int], np.ndarray]


def table_at(table: np.ndarray) -> TableAt:
    return lambda i, j: table[i, j]


def pair_legs(m: Measuring, h: int, k: int) -> Iterator[tuple[Scalar, int, int, int, int]]:
    """``(c, h1, h2, k1, k2)`` over the legs of ``Δ(e_h)`` and ``Δ(e_k)``."""
    legs = m.hopf.bialgebra.legs
    for c, h1, h2 in legs[h]:
        for d, k1, k2 in legs[k]:
            yield c * d, h1, h2, k1, k2


def product_one(m: Measuring, i: int, j: int) -> np.ndarray:
    """``e_i e_j · 1_A``."""
    return m.one_of(m.product_basis(i, j))


def convolve(m: Measuring, left: TableAt, right: TableAt, h: int, k: int) -> np.ndarray:
    """``left(h1, k1) right(h2, k2)``."""
    out = m.field.zeros(m.n_a)
    for c, h1, h2, k1, k2 in pair_legs(m, h, k):
        out = out + c * m.amul(left(h1, k1), right(h2, k2))
    return out


def absorb_left(m: Measuring, table: np.ndarray, h: int, k: int) -> np.ndarray:
    """``(h1 k1 · 1_A) τ(h2, k2)``."""
    return convolve(m, lambda i, j: product_one(m, i, j), table_at(table), h, k)


def absorb_right(m: Measuring, table: np.ndarray, h: int, k: int) -> np.ndarray:
    """``τ(h1, k1)(h2 k2 · 1_A)``."""
    return convolve(m, table_at(table), lambda i, j: product_one(m, i, j), h, k)


def cocycle_sides(
    m: Measuring, table: np.ndarray, h: int, k: int, n: int
) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of the cocycle identity on ``(e_h, e_k, e_n)``.

    ``(h1·τ(k1, n1)) τ(h2, k2 n2)`` against ``τ(h1, k1) τ(h2 k2, n)``.
    """
    legs = m.hopf.bialgebra.legs
    lhs = m.field.zeros(m.n_a)
    rhs = m.field.zeros(m.n_a)
    for c, h1, h2, k1, k2 in pair_legs(m, h, k):
        for d, n1, n2 in legs[n]:
            second = m.field.matmul(
                m.product_basis(k2, n2).reshape(1, -1), table[h2]
            ).reshape(-1)
            lhs = lhs + (c * d) * m.amul(m.act_basis(h1, table[k1, n1]), second)
        hk = m.product_basis(h2, k2)
        rhs = rhs + c * m.amul(
            table[h1, k1], m.field.matmul(hk.reshape(1, -1), table[:, n]).reshape(-1)
        )
    return lhs, rhs


def twisted_sides(
    m: Measuring, table: np.ndarray, h: int, k: int, a: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """``(h1·(k1·a)) τ(h2, k2)`` against ``τ(h1, k1)(h2 k2 · a)``."""
    lhs = m.field.zeros(m.n_a)
    rhs = m.field.zeros(m.n_a)
    for c, h1, h2, k1, k2 in pair_legs(m, h, k):
        lhs = lhs + c * m.amul(m.act_basis(h1, m.act_basis(k1, a)), table[h2, k2])
        rhs = rhs + c * m.amul(table[h1, k1], m.act(m.product_basis(h2, k2), a))
    return lhs, rhs


def left_row(m: Measuring, table: np.ndarray, h: np.ndarray, k: int) -> np.ndarray:
    """``τ(h, e_k)`` for a vector ``h``."""
    return m.field.matmul(h.reshape(1, -1), table[:, k]).reshape(-1)


def right_row(m: Measuring, table: np.ndarray, h: int, k: np.ndarray) -> np.ndarray:
    """``τ(e_h, k)`` for a vector ``k``."""
    return m.field.matmul(k.reshape(1, -1), table[h]).reshape(-1)
