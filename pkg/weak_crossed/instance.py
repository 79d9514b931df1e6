"""Instance files: structure constants of ``H``, ``A``, the action and the
cocycle, plus an optional block describing a built crossed product.

The format is JSON with sorted keys and two-space indentation. Scalars are
JSON integers or ``"p/q"`` strings; floats are rejected. Tables are sparse:

- bilinear tables ``[i, j, k, value]``, the coefficient of ``e_k`` in the image of ``(e_i, e_j)``
- linear maps ``{"shape": [rows, cols], "entries": [[row, col, value], ...]}``
- vectors ``[[index, value], ...]``
"""

import hashlib
import json
import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

import numpy as np
from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .crossed import CocycleTable, CrossedProduct, Measuring, Variant
from .errors import FieldError, InstanceError, ShapeError
from .fixtures import FixtureBundle
from .hopf import (
    HopfData,
    StructuredAlgebra,
    StructuredCoalgebra,
    WeakBialgebra,
    WeakHopfAlgebra,
    derive_antipode,
)
from .linalg import Field, FinSpace, LinMap, field_from_name

logger = logging.getLogger(__name__)

_INDEX = {"type": "integer", "minimum": 0}
_SCALAR = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"},
    ]
}
_LABELS = {"type": "array", "items": {"type": "string"}, "minItems": 1}
_TRIPLE_TABLE = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [_INDEX, _INDEX, _INDEX, _SCALAR],
        "minItems": 4,
        "maxItems": 4,
    },
}
_VECTOR = {
    "type": "array",
    "items": {"type": "array", "prefixItems": [_INDEX, _SCALAR], "minItems": 2, "maxItems": 2},
}
_LINMAP = {
    "type": "object",
    "required": ["shape", "entries"],
    "additionalProperties": False,
    "properties": {
        "shape": {"type": "array", "prefixItems": [_INDEX, _INDEX], "minItems": 2, "maxItems": 2},
        "entries": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_INDEX, _INDEX, _SCALAR],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
}

INSTANCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["field", "hopf", "algebra"],
    "additionalProperties": False,
    "properties": {
        "field": {"type": "string"},
        "hopf": {
            "type": "object",
            "required": ["basis", "mult", "unit", "comult", "counit"],
            "additionalProperties": False,
            "properties": {
                "basis": _LABELS,
                "mult": _TRIPLE_TABLE,
                "unit": _VECTOR,
                "comult": _TRIPLE_TABLE,
                "counit": _VECTOR,
                "antipode": _LINMAP,
                "antipode_inv": _LINMAP,
            },
        },
        "algebra": {
            "type": "object",
            "required": ["basis", "mult", "unit"],
            "additionalProperties": False,
            "properties": {"basis": _LABELS, "mult": _TRIPLE_TABLE, "unit": _VECTOR},
        },
        "action": _TRIPLE_TABLE,
        "cocycle": {
            "type": "object",
            "required": ["variant", "table"],
            "additionalProperties": False,
            "properties": {
                "variant": {"enum": [v.value for v in Variant]},
                "table": _TRIPLE_TABLE,
            },
        },
        "product": {
            "type": "object",
            "required": ["construction", "basis", "mult", "unit", "delta", "embedding", "verified"],
            "additionalProperties": False,
            "properties": {
                "construction": {"enum": [v.value for v in Variant]},
                "basis": _LABELS,
                "mult": _TRIPLE_TABLE,
                "unit": _VECTOR,
                "delta": _LINMAP,
                "embedding": _LINMAP,
                "verified": {"type": "boolean"},
            },
        },
    },
}

_VALIDATOR = Draft202012Validator(INSTANCE_SCHEMA)


def _reject_float(text: str):
    raise InstanceError(f"Floating-point value {text} is not an exact scalar")


def _reject_constant(text: str):
    raise InstanceError(f"Non-finite value {text} is not an exact scalar")


class _Decoder:
    """Dense arrays from sparse records, with the JSON path in every error."""

    def __init__(self, field: Field):
        self.field = field

    def _scalar(self, value: Any, path: str):
        try:
            return self.field.scalar(value)
        except FieldError as e:
            raise InstanceError(f"{path}: {e.message}") from e

    def _fill(self, shape: tuple[int, ...], records: list, path: str) -> np.ndarray:
        out = self.field.zeros(shape)
        seen = set()
        for r, record in enumerate(records):
            index, value = tuple(record[:-1]), record[-1]
            where = f"{path}[{r}]"
            for axis, (i, bound) in enumerate(zip(index, shape, strict=True)):
                if i >= bound:
                    raise InstanceError(
                        f"{where}: index {i} on axis {axis} out of range for size {bound}"
                    )
            if index in seen:
                raise InstanceError(f"{where}: duplicate entry for {list(index)}")
            seen.add(index)
            out[index] = self._scalar(value, where)
        return out

    def table(self, shape: tuple[int, int, int], records: list, path: str) -> np.ndarray:
        return self._fill(shape, records, path)

    def vector(self, size: int, records: list, path: str) -> np.ndarray:
        return self._fill((size,), records, path)

    def matrix(self, shape: tuple[int, int], block: dict, path: str) -> np.ndarray:
        declared = tuple(block["shape"])
        if declared != shape:
            raise InstanceError(f"{path}.shape: expected {list(shape)}, got {list(declared)}")
        return self._fill(shape, block["entries"], f"{path}.entries")


class _Encoder:
    def __init__(self, field: Field):
        self.field = field

    def sparse(self, values: np.ndarray) -> list[list]:
        return [
            [*(int(i) for i in index), self.field.to_wire(values[index])]
            for index in np.ndindex(values.shape)
            if not self.field.is_zero(values[index])
        ]

    def linmap(self, matrix: np.ndarray) -> dict:
        return {"shape": list(matrix.shape), "entries": self.sparse(matrix)}


@dataclass(frozen=True, kw_only=True, eq=False)
class ProductRecord:
    """The tables of a built crossed product as stored in an instance file."""

    construction: Variant
    space: FinSpace
    mult: np.ndarray
    unit: np.ndarray
    delta: np.ndarray
    embedding: np.ndarray
    verified: bool

    @classmethod
    def from_product(cls, product: CrossedProduct) -> "ProductRecord":
        return cls(
            construction=product.provenance,
            space=product.space,
            mult=product.algebra.mult,
            unit=product.unit,
            delta=product.delta.matrix,
            embedding=product.embedding.matrix,
            verified=product.verified,
        )

    def same_tables(self, other: "ProductRecord") -> bool:
        return (
            self.space == other.space
            and np.array_equal(self.mult, other.mult)
            and np.array_equal(self.unit, other.unit)
            and np.array_equal(self.delta, other.delta)
        )


@dataclass(frozen=True, kw_only=True, eq=False)
class InstanceFile:
    field: Field
    bialgebra: WeakBialgebra
    antipode: LinMap | None
    antipode_inv: LinMap | None
    algebra: StructuredAlgebra
    action: np.ndarray | None = None
    cocycle: np.ndarray | None = None
    variant: Variant | None = None
    product: ProductRecord | None = None

    @classmethod
    def loads(cls, text: str) -> "InstanceFile":
        try:
            document = json.loads(
                text, parse_float=_reject_float, parse_constant=_reject_constant
            )
        except json.JSONDecodeError as e:
            raise InstanceError(f"Malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
        error = best_match(_VALIDATOR.iter_errors(document))
        if error is not None:
            raise InstanceError(f"{error.json_path}: {error.message}")
        try:
            return cls.from_document(document)
        except (FieldError, ShapeError) as e:
            raise InstanceError(e.message) from e

    @classmethod
    def load(cls, path: str | Path) -> "InstanceFile":
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise InstanceError(f"Cannot read {path}: {e}") from e
        instance = cls.loads(text)
        logger.info(f"Loaded instance {path}: {instance.summary()}")
        return instance

    @classmethod
    def from_document(cls, document: dict) -> "InstanceFile":
        field = field_from_name(document["field"])
        decode = _Decoder(field)

        hopf = document["hopf"]
        h_space = FinSpace(tuple(hopf["basis"]))
        n = h_space.dim
        bialgebra = WeakBialgebra(
            StructuredAlgebra(
                h_space,
                decode.table((n, n, n), hopf["mult"], "$.hopf.mult"),
                decode.vector(n, hopf["unit"], "$.hopf.unit"),
                field,
            ),
            StructuredCoalgebra(
                h_space,
                decode.table((n, n, n), hopf["comult"], "$.hopf.comult"),
                decode.vector(n, hopf["counit"], "$.hopf.counit"),
                field,
            ),
        )
        maps = {
            name: LinMap(h_space, h_space, decode.matrix((n, n), hopf[name], f"$.hopf.{name}"), field)
            for name in ("antipode", "antipode_inv")
            if name in hopf
        }

        block = document["algebra"]
        a_space = FinSpace(tuple(block["basis"]))
        d = a_space.dim
        algebra = StructuredAlgebra(
            a_space,
            decode.table((d, d, d), block["mult"], "$.algebra.mult"),
            decode.vector(d, block["unit"], "$.algebra.unit"),
            field,
        )

        action = None
        if "action" in document:
            action = decode.table((n, d, d), document["action"], "$.action")
        cocycle = variant = None
        if "cocycle" in document:
            variant = Variant(document["cocycle"]["variant"])
            cocycle = decode.table((n, n, d), document["cocycle"]["table"], "$.cocycle.table")

        product = None
        if "product" in document:
            record = document["product"]
            carrier = FinSpace(tuple(record["basis"]))
            k = carrier.dim
            product = ProductRecord(
                construction=Variant(record["construction"]),
                space=carrier,
                mult=decode.table((k, k, k), record["mult"], "$.product.mult"),
                unit=decode.vector(k, record["unit"], "$.product.unit"),
                delta=decode.matrix((k * n, k), record["delta"], "$.product.delta"),
                embedding=decode.matrix((d * n, k), record["embedding"], "$.product.embedding"),
                verified=record["verified"],
            )
        return cls(
            field=field,
            bialgebra=bialgebra,
            antipode=maps.get("antipode"),
            antipode_inv=maps.get("antipode_inv"),
            algebra=algebra,
            action=action,
            cocycle=cocycle,
            variant=variant,
            product=product,
        )

    @classmethod
    def from_bundle(cls, bundle: FixtureBundle) -> "InstanceFile":
        hopf = bundle.hopf
        return cls(
            field=bundle.field,
            bialgebra=hopf.bialgebra,
            antipode=hopf.antipode,
            antipode_inv=hopf.data.antipode_inv,
            algebra=bundle.algebra,
            action=bundle.measuring.action,
            cocycle=bundle.cocycle.table,
            variant=bundle.cocycle.variant,
        )

    def with_product(self, product: CrossedProduct) -> "InstanceFile":
        return replace(self, product=ProductRecord.from_product(product))

    def to_document(self) -> dict:
        encode = _Encoder(self.field)
        b = self.bialgebra
        hopf: dict[str, Any] = {
            "basis": list(b.space.labels),
            "mult": encode.sparse(b.algebra.mult),
            "unit": encode.sparse(b.unit),
            "comult": encode.sparse(b.coalgebra.comult),
            "counit": encode.sparse(b.coalgebra.counit),
        }
        if self.antipode is not None:
            hopf["antipode"] = encode.linmap(self.antipode.matrix)
        if self.antipode_inv is not None:
            hopf["antipode_inv"] = encode.linmap(self.antipode_inv.matrix)
        document: dict[str, Any] = {
            "field": self.field.name,
            "hopf": hopf,
            "algebra": {
                "basis": list(self.algebra.space.labels),
                "mult": encode.sparse(self.algebra.mult),
                "unit": encode.sparse(self.algebra.unit),
            },
        }
        if self.action is not None:
            document["action"] = encode.sparse(self.action)
        if self.cocycle is not None and self.variant is not None:
            document["cocycle"] = {"variant": self.variant.value, "table": encode.sparse(self.cocycle)}
        if self.product is not None:
            p = self.product
            document["product"] = {
                "construction": p.construction.value,
                "basis": list(p.space.labels),
                "mult": encode.sparse(p.mult),
                "unit": encode.sparse(p.unit),
                "delta": encode.linmap(p.delta),
                "embedding": encode.linmap(p.embedding),
                "verified": p.verified,
            }
        return document

    def dumps(self) -> str:
        return json.dumps(self.to_document(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def dump(self, path: str | Path):
        Path(path).write_text(self.dumps(), encoding="utf-8", newline="\n")
        logger.info(f"Wrote instance {path}: {self.summary()}")

    @property
    def digest(self) -> str:
        """SHA-256 of the canonical serialization."""
        return hashlib.sha256(self.dumps().encode("utf-8")).hexdigest()

    def summary(self) -> str:
        parts = [f"field {self.field}", f"dim H = {self.bialgebra.dim}", f"dim A = {self.algebra.dim}"]
        if self.action is not None:
            parts.append("action")
        if self.variant is not None:
            parts.append(f"{self.variant} cocycle")
        if self.product is not None:
            parts.append(f"{self.product.construction} product")
        return ", ".join(parts)

    def hopf_data(self) -> HopfData | None:
        """The weak Hopf data; the antipode is derived when the file omits it.

        ``None`` when no antipode exists.
        """
        antipode = self.antipode
        if antipode is None:
            antipode = derive_antipode(self.bialgebra)
            if antipode is None:
                return None
            logger.info("Derived the antipode from the bialgebra tables")
        return HopfData(bialgebra=self.bialgebra, antipode=antipode, antipode_inv=self.antipode_inv)

    def measuring(self, hopf: WeakHopfAlgebra) -> Measuring:
        if self.action is None:
            raise InstanceError("The instance has no action block")
        return Measuring(hopf, self.algebra, self.action)

    def cocycle_table(self, measuring: Measuring) -> CocycleTable | None:
        if self.cocycle is None or self.variant is None:
            return None
        return CocycleTable(measuring, self.cocycle, self.variant)
