"""Programmatic instances: the 8-dimensional example over ``k × k`` and two
families of sanity cases whose every condition holds.

Tables are assembled as integer arrays and converted once into the chosen
field, so the same constructor serves the rationals and every prime field.
"""

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from itertools import product

import numpy as np

from .crossed import (
    AG_COCYCLE_IDS,
    AG_INVERSE_IDS,
    AUX_IDS,
    BB_COCYCLE_IDS,
    BB_INVERSE_IDS,
    EQUIV_IDS,
    MEASURING_IDS,
    CocycleTable,
    Measuring,
    Variant,
)
from .errors import FixtureError
from .hopf import (
    ANTIPODE_IDS,
    COUNITAL_IDS,
    WEAK_BIALGEBRA_IDS,
    HopfData,
    StructuredAlgebra,
    StructuredCoalgebra,
    WeakBialgebra,
    WeakHopfAlgebra,
)
from .linalg import QQ, Field, FinSpace, LinMap
from .report import ConditionReport

logger = logging.getLogger(__name__)

HOPF_IDS = WEAK_BIALGEBRA_IDS + ANTIPODE_IDS + COUNITAL_IDS
CONDITION_IDS = tuple(
    dict.fromkeys(
        MEASURING_IDS
        + BB_COCYCLE_IDS
        + EQUIV_IDS
        + BB_INVERSE_IDS
        + AG_COCYCLE_IDS
        + AG_INVERSE_IDS
    )
)


@dataclass(frozen=True, kw_only=True, eq=False)
class FixtureBundle:
    """A measuring and a cocycle together with the verdicts every checker must reproduce."""

    name: str
    measuring: Measuring
    cocycle: CocycleTable
    expected: Mapping[str, bool]
    paper: bool = False

    @property
    def hopf(self) -> WeakHopfAlgebra:
        return self.measuring.hopf

    @property
    def algebra(self) -> StructuredAlgebra:
        return self.measuring.algebra

    @property
    def field(self) -> Field:
        return self.measuring.field

    def mismatches(self, report: ConditionReport) -> list[str]:
        """Expected ids whose verdict in ``report`` differs or is missing."""
        out = []
        for condition, expected in self.expected.items():
            verdict = report.get(condition)
            if verdict is None:
                out.append(f"{condition}: not checked")
            elif verdict.passed is not expected:
                out.append(f"{condition}: expected {expected}, got {verdict.status}")
        return out


def _assemble(
    name: str,
    field: Field,
    *,
    h_labels: tuple[str, ...],
    h_mult: np.ndarray,
    h_unit: np.ndarray,
    comult: np.ndarray,
    counit: np.ndarray,
    antipode: np.ndarray,
    antipode_inv: np.ndarray,
    a_labels: tuple[str, ...],
    a_mult: np.ndarray,
    a_unit: np.ndarray,
    action: np.ndarray,
    cocycle: np.ndarray,
    variant: Variant,
    expected: Mapping[str, bool],
    paper: bool,
) -> FixtureBundle:
    h_space, a_space = FinSpace(h_labels), FinSpace(a_labels)
    bialgebra = WeakBialgebra(
        StructuredAlgebra(h_space, field.array(h_mult), field.array(h_unit), field),
        StructuredCoalgebra(h_space, field.array(comult), field.array(counit), field),
    )
    data = HopfData(
        bialgebra=bialgebra,
        antipode=LinMap(h_space, h_space, field.array(antipode), field),
        antipode_inv=LinMap(h_space, h_space, field.array(antipode_inv), field),
    )
    hopf = WeakHopfAlgebra.verified(data)
    algebra = StructuredAlgebra(a_space, field.array(a_mult), field.array(a_unit), field)
    measuring = Measuring(hopf, algebra, field.array(action))
    logger.info(f"Fixture {name} over {field}: dim H = {hopf.dim}, dim A = {algebra.dim}")
    return FixtureBundle(
        name=name,
        measuring=measuring,
        cocycle=CocycleTable(measuring, field.array(cocycle), variant),
        expected=dict(expected),
        paper=paper,
    )


def _diagonal_algebra(n: int) -> tuple[np.ndarray, np.ndarray]:
    """``k^n`` with orthogonal idempotents ``e_i``."""
    mult = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        mult[i, i, i] = 1
    return mult, np.ones(n, dtype=np.int64)


# The example over K = k × k. H has basis λ_P^Q and G_P^Q with P, Q in
# {(1,0), (0,1)}; index t * 4 + x * 2 + y for type t (0 = λ, 1 = G).

_BITS = ((1, 0), (0, 1))
_PAPER_LABELS = tuple(
    f"{kind}_{''.join(map(str, _BITS[x]))}^{''.join(map(str, _BITS[y]))}"
    for kind in ("lambda", "G")
    for x in range(2)
    for y in range(2)
)

PAPER_EXPECTED = {
    **{c_id: True for c_id in HOPF_IDS},
    **{c_id: True for c_id in CONDITION_IDS},
    **{c_id: False for c_id in ("10", "11", "12", "cocycle-absorption-left", "23", "24")},
}


def _swap(v: tuple[int, int]) -> tuple[int, int]:
    return v[1], v[0]


def _had(*vectors: tuple[int, int]) -> tuple[int, int]:
    """Componentwise product in ``k × k``."""
    return (
        int(np.prod([v[0] for v in vectors])),
        int(np.prod([v[1] for v in vectors])),
    )


def _dot(p: tuple[int, int], q: tuple[int, int]) -> int:
    return p[0] * q[0] + p[1] * q[1]


def _expand(t: int, p: tuple[int, int], q: tuple[int, int]) -> np.ndarray:
    """Coordinates of the element of type ``t`` with parameters ``p``, ``q``."""
    out = np.zeros(8, dtype=np.int64)
    for x, y in product(range(2), range(2)):
        out[t * 4 + x * 2 + y] = p[x] * q[y]
    return out


def _paper_basis() -> list[tuple[int, tuple[int, int], tuple[int, int]]]:
    return [(t, _BITS[x], _BITS[y]) for t in range(2) for x in range(2) for y in range(2)]


def _paper_product(left, right) -> np.ndarray:
    (t, p, q), (s, p2, q2) = left, right
    if (t, s) == (0, 0):
        return _expand(0, _had(p, p2), _had(q, q2))
    if (t, s) == (0, 1):
        return _expand(1, _had(p, p2), _had(_swap(q), q2))
    if (t, s) == (1, 0):
        return _expand(1, _had(p, _swap(p2)), _had(q, q2))
    return _expand(0, _had(p, _swap(p2)), _had(_swap(q), q2))


def _paper_comult(t: int, p: tuple[int, int], q: tuple[int, int]) -> np.ndarray:
    out = np.zeros((8, 8), dtype=np.int64)
    if t == 0:
        for e in _BITS:
            out += np.outer(_expand(0, p, e), _expand(0, e, q))
    else:
        e0, e1 = _BITS
        out += np.outer(_expand(1, p, e0), _expand(1, e1, q))
        out += np.outer(_expand(1, p, e1), _expand(1, e0, q))
    return out


def _paper_cocycle(left, right) -> tuple[int, int]:
    (t, p, q), (s, p2, q2) = left, right
    if (t, s) == (0, 0):
        return _had(p, p2, q, q2)
    if (t, s) == (0, 1):
        return _had(p, p2, q, _swap(q2))
    if (t, s) == (1, 0):
        return _had(p, p2, _swap(q), _swap(q2))
    return _had(p, p2, _swap(q), q2)


def paper_example(field: Field = QQ) -> FixtureBundle:
    """The 8-dimensional weak Hopf algebra acting on ``k × k`` with its cocycle.

    It satisfies (1)–(9) but not (10): the balanced crossed product exists
    while the construction on the image of ``∇_ρ`` does not.
    """
    basis = _paper_basis()
    n = len(basis)
    mult = np.zeros((n, n, n), dtype=np.int64)
    comult = np.zeros((n, n, n), dtype=np.int64)
    counit = np.zeros(n, dtype=np.int64)
    antipode = np.zeros((n, n), dtype=np.int64)
    action = np.zeros((n, 2, 2), dtype=np.int64)
    cocycle = np.zeros((n, n, 2), dtype=np.int64)
    for i, (t, p, q) in enumerate(basis):
        comult[i] = _paper_comult(t, p, q)
        counit[i] = _dot(p, q) if t == 0 else _dot(p, _swap(q))
        antipode[:, i] = _expand(t, q, p)
        scale = _had(p, q) if t == 0 else _had(p, _swap(q))
        for j, v in enumerate(_BITS):
            action[i, j] = _had(scale, v)
        for j, right in enumerate(basis):
            mult[i, j] = _paper_product((t, p, q), right)
            cocycle[i, j] = _paper_cocycle((t, p, q), right)
    a_mult, a_unit = _diagonal_algebra(2)
    return _assemble(
        "paper8",
        field,
        h_labels=_PAPER_LABELS,
        h_mult=mult,
        h_unit=_expand(0, (1, 1), (1, 1)),
        comult=comult,
        counit=counit,
        antipode=antipode,
        antipode_inv=antipode,
        a_labels=("(1,0)", "(0,1)"),
        a_mult=a_mult,
        a_unit=a_unit,
        action=action,
        cocycle=cocycle,
        variant=Variant.BB,
        expected=PAPER_EXPECTED,
        paper=True,
    )


ALL_PASS_EXPECTED = {c_id: True for c_id in HOPF_IDS + CONDITION_IDS + AUX_IDS}


def hopf_smash_fixture(field: Field = QQ) -> FixtureBundle:
    """``k[C_2]`` acting on ``k[x]/(x^2 - 1)`` by ``g·x = -x`` with the trivial cocycle."""
    if field.is_zero(field.one + field.one):
        raise FixtureError(f"The smash fixture needs characteristic other than 2, got {field}")
    # H: 0 = 1, 1 = g
    h_mult = np.zeros((2, 2, 2), dtype=np.int64)
    for i, j in product(range(2), range(2)):
        h_mult[i, j, (i + j) % 2] = 1
    comult = np.zeros((2, 2, 2), dtype=np.int64)
    for i in range(2):
        comult[i, i, i] = 1
    identity = np.eye(2, dtype=np.int64)
    # A: 0 = 1, 1 = x
    a_mult = np.zeros((2, 2, 2), dtype=np.int64)
    for i, j in product(range(2), range(2)):
        a_mult[i, j, (i + j) % 2] = 1
    action = np.zeros((2, 2, 2), dtype=np.int64)
    action[0] = identity
    action[1] = np.diag([1, -1])
    cocycle = np.zeros((2, 2, 2), dtype=np.int64)
    cocycle[:, :, 0] = 1
    return _assemble(
        "smash-c2",
        field,
        h_labels=("1", "g"),
        h_mult=h_mult,
        h_unit=np.array([1, 0]),
        comult=comult,
        counit=np.ones(2, dtype=np.int64),
        antipode=identity,
        antipode_inv=identity,
        a_labels=("1", "x"),
        a_mult=a_mult,
        a_unit=np.array([1, 0]),
        action=action,
        cocycle=cocycle,
        variant=Variant.BB,
        expected=ALL_PASS_EXPECTED,
        paper=False,
    )


GROUPOID_RANGE = range(2, 5)


def groupoid_fixture(n: int, field: Field = QQ) -> FixtureBundle:
    """The pair groupoid on ``n`` objects acting on ``k^n``.

    Arrows ``E_ij`` compose as ``E_ij E_jl = E_il`` and act by
    ``E_ij · e_m = δ_jm e_i``; the cocycle is ``σ(E_ij, E_kl) = δ_jk e_i``.
    """
    if n not in GROUPOID_RANGE:
        raise FixtureError(
            f"groupoid fixture needs {GROUPOID_RANGE.start} <= n <= {GROUPOID_RANGE.stop - 1}, got {n}"
        )
    size = n * n
    arrows = [(i, j) for i in range(n) for j in range(n)]
    h_mult = np.zeros((size, size, size), dtype=np.int64)
    comult = np.zeros((size, size, size), dtype=np.int64)
    antipode = np.zeros((size, size), dtype=np.int64)
    h_unit = np.zeros(size, dtype=np.int64)
    action = np.zeros((size, n, n), dtype=np.int64)
    cocycle = np.zeros((size, size, n), dtype=np.int64)
    for x, (i, j) in enumerate(arrows):
        comult[x, x, x] = 1
        antipode[j * n + i, x] = 1
        action[x, j, i] = 1
        if i == j:
            h_unit[x] = 1
        for y, (k, ell) in enumerate(arrows):
            if j == k:
                h_mult[x, y, i * n + ell] = 1
                cocycle[x, y, i] = 1
    a_mult, a_unit = _diagonal_algebra(n)
    return _assemble(
        f"groupoid-{n}",
        field,
        h_labels=tuple(f"E_{i}{j}" for i, j in arrows),
        h_mult=h_mult,
        h_unit=h_unit,
        comult=comult,
        counit=np.ones(size, dtype=np.int64),
        antipode=antipode,
        antipode_inv=antipode,
        a_labels=tuple(f"e_{i}" for i in range(n)),
        a_mult=a_mult,
        a_unit=a_unit,
        action=action,
        cocycle=cocycle,
        variant=Variant.BB,
        expected=ALL_PASS_EXPECTED,
        paper=False,
    )


@dataclass(frozen=True, kw_only=True)
class FixtureEntry:
    name: str
    build: Callable[[Field], FixtureBundle]
    paper: bool = False


FIXTURES: list[FixtureEntry] = [
    FixtureEntry(name="paper8", build=paper_example, paper=True),
    FixtureEntry(name="smash-c2", build=hopf_smash_fixture),
    *(
        FixtureEntry(name=f"groupoid-{n}", build=lambda field, n=n: groupoid_fixture(n, field))
        for n in GROUPOID_RANGE
    ),
]

FIXTURES_BY_NAME = {entry.name: entry for entry in FIXTURES}


def fixture_by_name(name: str, field: Field = QQ) -> FixtureBundle:
    entry = FIXTURES_BY_NAME.get(name)
    if entry is None:
        raise FixtureError(f"Unknown fixture {name!r}; choose from {', '.join(FIXTURES_BY_NAME)}")
    return entry.build(field)
