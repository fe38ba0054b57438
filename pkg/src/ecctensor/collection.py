"""Collections of unit vectors and weighted point sets on the sphere."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from ecctensor.errors import InvalidInputError, ParseError, ValidationError

#: Tolerance on | ||z_i|| - 1 | for inputs claiming to be unit vectors.
TAU_UNIT = 1e-8

#: Tolerance on |sum(weights) - 1|.
TAU_WEIGHT = 1e-12


def _check_weights(weights: np.ndarray, m: int) -> np.ndarray:
    weights = np.asarray(weights, dtype=np.float64)
    if weights.shape != (m,):
        raise ValidationError(f"expected {m} weights, got shape {weights.shape}")
    if np.any(weights < 0):
        raise ValidationError("weights must be non-negative")
    if abs(float(weights.sum()) - 1.0) > TAU_WEIGHT:
        raise ValidationError(f"weights must sum to 1, got {weights.sum()!r}")
    return weights


@dataclass(frozen=True)
class UnitVectorCollection:
    """m unit vectors in real or complex n-space with probability weights.

    ``vectors`` has shape (m, n), one vector per row.  Rows must be unit
    norm within ``TAU_UNIT`` unless ``renormalize=True`` is passed to the
    constructor helpers.
    """

    vectors: np.ndarray
    weights: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        vectors = np.asarray(self.vectors)
        if vectors.ndim != 2 or vectors.shape[0] < 1 or vectors.shape[1] < 1:
            raise InvalidInputError(f"vectors must be a non-empty (m, n) array, got shape {vectors.shape}")
        if np.iscomplexobj(vectors):
            vectors = vectors.astype(np.complex128)
        else:
            vectors = vectors.astype(np.float64)
        norms = np.linalg.norm(vectors, axis=1)
        bad = np.abs(norms - 1.0) > TAU_UNIT
        if np.any(bad):
            raise ValidationError(
                f"rows {np.nonzero(bad)[0].tolist()} are not unit norm within {TAU_UNIT}; "
                "pass renormalize=True (or --renormalize) to rescale them"
            )
        weights = self.weights
        if weights is None:
            m = vectors.shape[0]
            weights = np.full(m, 1.0 / m)
        weights = _check_weights(weights, vectors.shape[0])
        vectors.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_vectors(cls, vectors, weights=None, renormalize: bool = False) -> "UnitVectorCollection":
        vectors = np.atleast_2d(np.asarray(vectors))
        if renormalize:
            norms = np.linalg.norm(vectors, axis=1)
            if np.any(norms == 0):
                raise ValidationError("cannot renormalize a zero vector")
            vectors = vectors / norms[:, None]
        return cls(vectors, weights)

    @property
    def m(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def field_name(self) -> str:
        return "complex" if np.iscomplexobj(self.vectors) else "real"

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.vectors)

    def gram(self) -> np.ndarray:
        """Gram matrix G_ij = <z_i, z_j> (conjugate-linear in the second slot)."""
        return self.vectors @ self.vectors.conj().T


def _vectors_from_json(doc) -> tuple[np.ndarray, np.ndarray | None]:
    try:
        field_name = doc.get("field", "real")
        rows = doc["vectors"]
        weights = doc.get("weights")
        if field_name == "complex":
            vectors = np.array(
                [[complex(entry[0], entry[1]) for entry in row] for row in rows],
                dtype=np.complex128,
            )
        elif field_name == "real":
            vectors = np.array(rows, dtype=np.float64)
        else:
            raise ParseError(f"unknown field {field_name!r} (expected 'real' or 'complex')")
        if vectors.ndim != 2:
            raise ParseError("'vectors' must be a rectangular list of rows")
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed collection JSON: {exc}") from exc
    return vectors, None if weights is None else np.asarray(weights, dtype=np.float64)


def _vectors_from_csv(text: str) -> np.ndarray:
    rows = []
    width = None
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        cells = [cell.strip() for cell in row if cell.strip() != ""]
        if not cells:
            continue
        try:
            values = [float(cell) for cell in cells]
        except ValueError:
            if lineno == 1:
                continue  # optional header row
            raise ParseError(f"line {lineno}: non-numeric entry in {cells!r}")
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise ParseError(f"line {lineno}: expected {width} columns, got {len(values)}")
        rows.append(values)
    if not rows:
        raise ParseError("no vectors found in CSV input")
    return np.array(rows, dtype=np.float64)


def load_collection(text: str, renormalize: bool = False) -> UnitVectorCollection:
    """Parse a collection from CSV (one real vector per row) or JSON text."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        vectors, weights = _vectors_from_json(doc)
    else:
        vectors, weights = _vectors_from_csv(text), None
    return UnitVectorCollection.from_vectors(vectors, weights, renormalize=renormalize)
