"""Coherence, frame potentials, and the classical/improved Welch bounds.

The classical average bound 1/binom(n+k-1, k) holds for unit vectors over
either field; restricting to real vectors improves it to the real-sphere
moment (1*3***(2k-1)) / (n*(n+2)***(n+2k-2)), which is strictly larger for
k > 1.  Separating the diagonal of the averaged sum turns either average
bound B into the coherence bound c_max^{2k} >= (m*B - 1)/(m - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ecctensor import backend
from ecctensor.collection import UnitVectorCollection
from ecctensor.errors import InvalidInputError
from ecctensor.sphere import complex_spherical_moment, spherical_moment


def coherence(z: UnitVectorCollection) -> float:
    """Maximum absolute inner product over distinct pairs."""
    if z.m < 2:
        raise InvalidInputError("coherence needs at least 2 vectors")
    gram = np.abs(z.gram())
    np.fill_diagonal(gram, 0.0)
    return float(gram.max())


def frame_potential(z: UnitVectorCollection, k: int) -> float:
    """(1/m^2) sum_{i,j} |<z_i, z_j>|^{2k}, diagonal included."""
    if k < 1:
        raise InvalidInputError("exponent must be >= 1")
    gram = np.ascontiguousarray(np.abs(z.gram()), dtype=np.float64)
    return backend.pairwise_pow_sum(gram, 2 * k) / (z.m ** 2)


def welch_average_bound(m: int, n: int, k: int, field: str = "complex") -> float:
    """Lower bound on the averaged frame potential (independent of m)."""
    if m < 1 or n < 1 or k < 1:
        raise InvalidInputError("m, n, k must all be >= 1")
    if field == "real":
        return spherical_moment(n, k)
    if field == "complex":
        return complex_spherical_moment(n, k)
    raise InvalidInputError(f"unknown field {field!r}")


def welch_cmax_bound(m: int, n: int, k: int, field: str = "complex") -> float:
    """Lower bound on c_max^{2k}; vacuous values are clamped to 0."""
    if m < 2:
        raise InvalidInputError("coherence bound needs m >= 2")
    b = welch_average_bound(m, n, k, field)
    return max(0.0, (m * b - 1.0) / (m - 1.0))


def welch_cmax_root_bound(m: int, n: int, k: int, field: str = "complex") -> float:
    """Lower bound on c_max itself (2k-th root of the power bound)."""
    return welch_cmax_bound(m, n, k, field) ** (1.0 / (2 * k))


@dataclass(frozen=True)
class BoundReport:
    """Frame potential and coherence of a collection next to their bounds.

    ``classical_bound`` is the field-agnostic average bound;
    ``improved_bound`` is the real-field strengthening (None for complex
    collections).  ``cmax_bound`` bounds coherence^{2k} from below using
    the best applicable average bound.
    """

    m: int
    n: int
    k: int
    field: str
    potential: float
    coherence: float
    classical_bound: float
    improved_bound: float | None
    cmax_bound: float
    cmax_root_bound: float
    potential_gap: float
    coherence_gap: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def evaluate(z: UnitVectorCollection, k_max: int) -> list[BoundReport]:
    """One BoundReport per exponent k in 1..k_max."""
    if k_max < 1:
        raise InvalidInputError("k_max must be >= 1")
    c = coherence(z)
    reports = []
    for k in range(1, k_max + 1):
        pot = frame_potential(z, k)
        classical = welch_average_bound(z.m, z.dim, k, "complex")
        if z.is_real:
            improved = welch_average_bound(z.m, z.dim, k, "real")
            applicable = improved
            cmax_b = welch_cmax_bound(z.m, z.dim, k, "real")
            cmax_root = welch_cmax_root_bound(z.m, z.dim, k, "real")
        else:
            improved = None
            applicable = classical
            cmax_b = welch_cmax_bound(z.m, z.dim, k, "complex")
            cmax_root = welch_cmax_root_bound(z.m, z.dim, k, "complex")
        reports.append(
            BoundReport(
                m=z.m,
                n=z.dim,
                k=k,
                field=z.field_name,
                potential=pot,
                coherence=c,
                classical_bound=classical,
                improved_bound=improved,
                cmax_bound=cmax_b,
                cmax_root_bound=cmax_root,
                potential_gap=pot - applicable,
                coherence_gap=c ** (2 * k) - cmax_b,
            )
        )
    return reports


#: Columns of the 7-vector example matrix in R^2 from the sparse-dictionary
#: literature; entries are 2-decimal approximations of unit vectors, so
#: callers should renormalize before evaluating potentials.
EXAMPLE_7X2 = np.array(
    [
        [0.99, 0.08],
        [0.14, 0.99],
        [0.56, 0.83],
        [-0.68, 0.73],
        [0.93, -0.36],
        [-0.86, -0.50],
        [-0.30, 0.95],
    ]
)
