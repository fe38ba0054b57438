"""Symmetric tensor arithmetic and the tensorization identities.

A degree-k symmetric tensor over R^n is stored as a map from sorted
multi-indices (i_1 <= ... <= i_k, zero-based) to coefficients; each stored
entry stands for all permutations of its index, so inner products carry
multinomial multiplicity weights and reproduce the full n^k Euclidean
inner product exactly.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from ecctensor.collection import UnitVectorCollection
from ecctensor.errors import (
    InvalidInputError,
    ResourceBudgetError,
    ShapeError,
    UnsupportedFieldError,
)

#: Refuse tensors with more stored entries than this.
ENTRY_BUDGET = 10_000_000


def multiplicity(index: tuple[int, ...]) -> int:
    """Number of distinct permutations of a sorted multi-index."""
    counts = Counter(index)
    result = math.factorial(len(index))
    for c in counts.values():
        result //= math.factorial(c)
    return result


def _check_budget(n: int, k: int) -> None:
    if math.comb(n + k - 1, k) > ENTRY_BUDGET:
        raise ResourceBudgetError(
            f"degree-{k} symmetric tensor over dimension {n} needs "
            f"{math.comb(n + k - 1, k)} entries (budget {ENTRY_BUDGET})"
        )


@dataclass(frozen=True)
class SymmetricTensor:
    """Symmetric tensor of degree ``degree`` over dimension ``dim``."""

    dim: int
    degree: int
    entries: dict[tuple[int, ...], float]

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidInputError("dimension must be >= 1")
        if self.degree < 0:
            raise InvalidInputError("degree must be >= 0")

    def __add__(self, other: "SymmetricTensor") -> "SymmetricTensor":
        self._check_compatible(other)
        entries = dict(self.entries)
        for idx, val in other.entries.items():
            entries[idx] = entries.get(idx, 0.0) + val
        return SymmetricTensor(self.dim, self.degree, entries)

    def __sub__(self, other: "SymmetricTensor") -> "SymmetricTensor":
        return self + (other * -1.0)

    def __mul__(self, scalar: float) -> "SymmetricTensor":
        return SymmetricTensor(
            self.dim, self.degree, {idx: scalar * val for idx, val in self.entries.items()}
        )

    __rmul__ = __mul__

    def __getitem__(self, index: tuple[int, ...]) -> float:
        return self.entries.get(tuple(sorted(index)), 0.0)

    def _check_compatible(self, other: "SymmetricTensor") -> None:
        if self.dim != other.dim or self.degree != other.degree:
            raise ShapeError(
                f"incompatible tensors: dim/degree ({self.dim},{self.degree}) "
                f"vs ({other.dim},{other.degree})"
            )


def power_tensor(v: np.ndarray, k: int) -> SymmetricTensor:
    """k-fold symmetric tensor power v^{x k}; degree 0 gives the scalar 1."""
    v = np.asarray(v, dtype=np.float64).ravel()
    n = v.size
    if n == 0:
        raise InvalidInputError("zero-dimensional vector")
    if k < 0:
        raise InvalidInputError("degree must be >= 0")
    _check_budget(n, k)
    if k == 0:
        return SymmetricTensor(n, 0, {(): 1.0})
    entries: dict[tuple[int, ...], float] = {}
    support = np.nonzero(v)[0]
    for idx in combinations_with_replacement(support.tolist(), k):
        entries[idx] = float(np.prod(v[list(idx)]))
    return SymmetricTensor(n, k, entries)


def tensor_inner(a: SymmetricTensor, b: SymmetricTensor) -> float:
    """Full Euclidean inner product; multiplicity weights restore the n^k sum."""
    a._check_compatible(b)
    small, large = (a, b) if len(a.entries) <= len(b.entries) else (b, a)
    total = 0.0
    for idx, val in small.entries.items():
        other = large.entries.get(idx)
        if other is not None:
            total += multiplicity(idx) * val * other
    return total


def tensor_norm_sq(a: SymmetricTensor) -> float:
    return tensor_inner(a, a)


def moment_tensor(x: UnitVectorCollection, k: int) -> SymmetricTensor:
    """Weighted average of the k-th tensor powers of the collection's vectors."""
    if not x.is_real:
        raise UnsupportedFieldError(
            "moment tensors are materialized for real collections only; "
            "use the Gram-side routes (polynomial_energy / frame_potential) for complex data"
        )
    _check_budget(x.dim, k)
    result = power_tensor(x.vectors[0], k) * float(x.weights[0])
    for i in range(1, x.m):
        result = result + power_tensor(x.vectors[i], k) * float(x.weights[i])
    return result


def polynomial_energy(x: UnitVectorCollection, k: int) -> float:
    """Sum_{i,j} w_i w_j <z_i, z_j>^k computed Gram-side.

    For real collections this equals ||M^k||^2 by the tensorization
    identity.  For complex collections the Hermitian symmetry of the Gram
    matrix makes the double sum real, and the real part is returned.
    """
    if k < 0:
        raise InvalidInputError("degree must be >= 0")
    gram = x.gram()
    w = x.weights
    value = w @ (gram ** k) @ w
    return float(np.real(value))


def eccentricity_norm_sq(x: UnitVectorCollection, k: int) -> float:
    """Squared norm of the k-th eccentricity tensor of a spherical collection.

    Equals polynomial_energy(x, k) minus the uniform-sphere moment of the
    same degree; the orthogonal decomposition of moment tensors guarantees
    this is non-negative, so values in [-1e-10, 0) are clamped to 0.

    Odd k: the rotationally symmetrized moment tensor is zero, so the
    eccentricity norm is the polynomial energy itself.
    """
    from ecctensor.sphere import spherical_moment

    if not x.is_real:
        raise UnsupportedFieldError("eccentricity tensors are defined for real collections")
    if k < 1:
        raise InvalidInputError("degree must be >= 1")
    energy = polynomial_energy(x, k)
    if k % 2 == 1:
        return energy
    value = energy - spherical_moment(x.dim, k // 2)
    if -1e-10 <= value < 0.0:
        return 0.0
    return value
