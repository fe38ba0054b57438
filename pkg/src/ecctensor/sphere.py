"""Closed-form spherical moments, uniform-sphere moment tensors, samplers.

The closed forms:
    E <theta, v>^{2k}   = (1*3***(2k-1)) / (n*(n+2)***(n+2k-2))   (real sphere)
    E |<theta, v>|^{2k} = 1 / binom(n+k-1, k)                     (complex sphere)

The uniform-sphere moment tensor of even degree comes from writing a
standard Gaussian as g = ||g|| * theta: its entries are Wick pairing
counts divided by E ||g||^{2k}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from ecctensor.errors import InvalidInputError
from ecctensor.tensor import SymmetricTensor, _check_budget


@dataclass(frozen=True)
class SphereSpec:
    """Sphere S^{n-1} in R^n, or the unit sphere of C^n when field='complex'."""

    dim: int
    field: str = "real"

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidInputError("dimension must be >= 1")
        if self.field not in ("real", "complex"):
            raise InvalidInputError(f"unknown field {self.field!r}")


@dataclass(frozen=True)
class RngSeed:
    """Deterministic seed: identical (seed, stream) gives identical samples."""

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(self.stream,)))

    def with_stream(self, stream: int) -> "RngSeed":
        return RngSeed(self.seed, stream)


def spherical_moment(n: int, k: int) -> float:
    """E <theta, v>^{2k} for theta uniform on S^{n-1} and any unit v.

    Factors are divided pairwise ((2i+1)/(n+2i)) so neither product is
    formed on its own, avoiding overflow for large k.
    """
    if n < 1:
        raise InvalidInputError("dimension must be >= 1")
    if k < 0:
        raise InvalidInputError("half-degree must be >= 0")
    result = 1.0
    for i in range(k):
        result *= (2 * i + 1) / (n + 2 * i)
    return result


def complex_spherical_moment(n: int, k: int) -> float:
    """E |<theta, v>|^{2k} for theta uniform on the unit sphere of C^n."""
    if n < 1:
        raise InvalidInputError("dimension must be >= 1")
    if k < 0:
        raise InvalidInputError("half-degree must be >= 0")
    return 1.0 / math.comb(n + k - 1, k)


def wick_matching_count(index: tuple[int, ...]) -> int:
    """Number of perfect matchings of the positions of ``index`` that pair
    equal index values only; this is the standard Gaussian moment
    E[g_{i_1} *** g_{i_k}] for i.i.d. N(0,1) coordinates.

    Matchings factor over distinct values: c positions holding the same
    value admit (c-1)!! internal pairings, zero if any count is odd.
    """
    count = 1
    for c in np.unique(index, return_counts=True)[1] if index else []:
        c = int(c)
        if c % 2 == 1:
            return 0
        for odd in range(1, c, 2):
            count *= odd
    return count


def uniform_sphere_moment_tensor(n: int, k: int) -> SymmetricTensor:
    """Moment tensor E[theta^{x k}] of the uniform distribution on S^{n-1}.

    Odd degree gives the zero tensor by central symmetry.
    """
    if n < 1:
        raise InvalidInputError("dimension must be >= 1")
    if k < 0:
        raise InvalidInputError("degree must be >= 0")
    if k == 0:
        return SymmetricTensor(n, 0, {(): 1.0})
    if k % 2 == 1:
        return SymmetricTensor(n, k, {})
    _check_budget(n, k)
    half = k // 2
    denom = 1.0
    for i in range(half):
        denom *= n + 2 * i
    entries: dict[tuple[int, ...], float] = {}
    for idx in combinations_with_replacement(range(n), k):
        count = wick_matching_count(idx)
        if count:
            entries[idx] = count / denom
    return SymmetricTensor(n, k, entries)


def sample_sphere(spec: SphereSpec, count: int, seed: RngSeed) -> np.ndarray:
    """i.i.d. uniform samples on the sphere, shape (count, n)."""
    if count < 0:
        raise InvalidInputError("count must be >= 0")
    rng = seed.generator()
    if spec.field == "complex":
        z = rng.standard_normal((count, spec.dim)) + 1j * rng.standard_normal((count, spec.dim))
        vectors = z
    else:
        vectors = rng.standard_normal((count, spec.dim))
    if count == 0:
        return vectors
    norms = np.linalg.norm(vectors, axis=1, keepdims=True)
    return vectors / norms


def monte_carlo_moment(spec: SphereSpec, k: int, samples: int, seed: RngSeed) -> tuple[float, float]:
    """Empirical mean and standard error of |<theta, e_1>|^{2k}."""
    if samples < 2:
        raise InvalidInputError("need at least 2 samples")
    theta = sample_sphere(spec, samples, seed)
    values = np.abs(theta[:, 0]) ** (2 * k)
    mean = float(values.mean())
    stderr = float(values.std(ddof=1) / math.sqrt(samples))
    return mean, stderr
