"""Frame potential minimization over products of unit spheres.

Projected gradient descent with backtracking line search, best of several
random restarts; and an exhaustive angle-grid oracle on the circle for
small collections.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ecctensor import backend
from ecctensor.collection import UnitVectorCollection
from ecctensor.errors import InvalidInputError, ResourceBudgetError, UnsupportedFieldError
from ecctensor.sphere import RngSeed, SphereSpec, sample_sphere
from ecctensor.welch import frame_potential, welch_average_bound


@dataclass(frozen=True)
class OptimizeConfig:
    m: int
    n: int
    k: int
    restarts: int = 16
    max_iters: int = 5000
    step: float = 0.1
    tol_grad: float = 1e-10
    seed: RngSeed = RngSeed(0)

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.k < 1:
            raise InvalidInputError("m, n, k must all be >= 1")
        if self.restarts < 1:
            raise InvalidInputError("restarts must be >= 1")
        if self.step <= 0 or self.tol_grad <= 0:
            raise InvalidInputError("step and tol_grad must be positive")


@dataclass(frozen=True)
class OptimizeResult:
    vectors: UnitVectorCollection
    potential: float
    scaled_potential: float
    bound: float
    gap: float
    iterations: int
    converged: bool

    def to_dict(self) -> dict:
        return {
            "vectors": self.vectors.vectors.tolist(),
            "potential": self.potential,
            "scaled_potential": self.scaled_potential,
            "bound": self.bound,
            "gap": self.gap,
            "iterations": self.iterations,
            "converged": self.converged,
        }


def potential_gradient(z: UnitVectorCollection, k: int) -> np.ndarray:
    """Euclidean gradient of the 2k-frame potential, one row per vector."""
    if not z.is_real:
        raise UnsupportedFieldError("optimization is restricted to real collections")
    if k < 1:
        raise InvalidInputError("exponent must be >= 1")
    x = np.ascontiguousarray(z.vectors, dtype=np.float64)
    return backend.potential_gradient(x, k)


def _potential(x: np.ndarray, k: int) -> float:
    gram = np.ascontiguousarray(x @ x.T)
    return backend.pairwise_pow_sum(gram, 2 * k) / (x.shape[0] ** 2)


def _tangential(grad: np.ndarray, x: np.ndarray) -> np.ndarray:
    return grad - np.sum(grad * x, axis=1, keepdims=True) * x


def _normalize_rows(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def _pgd(x0: np.ndarray, k: int, step0: float, max_iters: int, tol_grad: float):
    """Monotone projected gradient descent from a single start."""
    m = x0.shape[0]
    x = x0
    pot = _potential(x, k)
    iterations = 0
    converged = False
    for _ in range(max_iters):
        grad = backend.potential_gradient(np.ascontiguousarray(x), k)
        tangent = _tangential(np.asarray(grad), x)
        if np.linalg.norm(tangent) < tol_grad:
            converged = True
            break
        step = step0
        accepted = False
        while step > 1e-18:
            candidate = _normalize_rows(x - step * tangent)
            cand_pot = _potential(candidate, k)
            if cand_pot < pot:
                x, pot = candidate, cand_pot
                accepted = True
                break
            step /= 2.0
        iterations += 1
        if not accepted:
            # numerically stationary: no descent direction at float precision
            converged = True
            break
    return x, pot, iterations, converged


def _canonicalize(x: np.ndarray) -> np.ndarray:
    """Rotate so the first vector is e_1; in the plane, also reflect so the
    second vector lies in the upper half-plane."""
    n = x.shape[1]
    v = x[0]
    # Householder reflection mapping v to e_1
    e1 = np.zeros(n)
    e1[0] = 1.0
    u = v - e1
    norm_u = np.linalg.norm(u)
    if norm_u > 1e-14:
        u = u / norm_u
        x = x - 2.0 * np.outer(x @ u, u)
    if n == 2 and x.shape[0] > 1 and x[1, 1] < 0:
        x = x * np.array([1.0, -1.0])
    return _normalize_rows(x)


def minimize_potential(config: OptimizeConfig, threads: int = 1) -> OptimizeResult:
    """Best-of-restarts projected gradient descent on the 2k-frame potential.

    Deterministic for a fixed config seed: restart r uses stream
    seed.stream + r, and ties between restarts break on the lower index.
    """
    spec = SphereSpec(config.n, "real")

    def run(restart: int):
        x0 = sample_sphere(spec, config.m, config.seed.with_stream(config.seed.stream + restart))
        return _pgd(x0, config.k, config.step, config.max_iters, config.tol_grad)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, range(config.restarts)))
    else:
        results = [run(r) for r in range(config.restarts)]

    best = min(range(config.restarts), key=lambda r: (results[r][1], r))
    x, pot, iterations, converged = results[best]
    x = _canonicalize(x)
    pot = _potential(x, config.k)
    bound = welch_average_bound(config.m, config.n, config.k, "real")
    return OptimizeResult(
        vectors=UnitVectorCollection.from_vectors(x, renormalize=True),
        potential=pot,
        scaled_potential=config.m ** 2 * pot,
        bound=bound,
        gap=config.m ** 2 * (pot - bound),
        iterations=iterations,
        converged=converged,
    )


#: Largest m the angle-grid oracle will attempt.
BRUTE_FORCE_MAX_M = 4


#: Default base grid resolution per collection size; coarser for larger m
#: because the exhaustive pass is exponential in m - 1.  Refinement rounds
#: recover accuracy well below the base resolution.
DEFAULT_GRID = {1: 0.1, 2: 0.001, 3: 0.005, 4: 0.02}


def brute_force_potential_min(
    m: int,
    k: int,
    grid: float | None = None,
    n: int = 2,
    refine_rounds: int = 6,
    chunk: int = 200_000,
) -> float:
    """Exhaustive angle-grid minimum of the scaled potential on the circle.

    The first vector is pinned at angle 0 by rotation invariance; the
    remaining m-1 angles sweep [0, pi).  After the exhaustive pass the
    grid is repeatedly refined around the best point (same evaluation
    path, shrinking window), so the result is accurate to far below the
    base resolution.  Independent of the gradient-based optimizer.
    """
    if n != 2:
        raise InvalidInputError("the angle-grid oracle is defined on the circle (n = 2)")
    if m < 1:
        raise InvalidInputError("m must be >= 1")
    if m > BRUTE_FORCE_MAX_M:
        raise ResourceBudgetError(f"brute force supports m <= {BRUTE_FORCE_MAX_M}")
    if grid is None:
        grid = DEFAULT_GRID[m]
    if grid <= 0:
        raise InvalidInputError("grid resolution must be positive")
    if m == 1:
        return 1.0
    two_k = 2 * k

    def evaluate_grid(axes: list[np.ndarray]) -> tuple[float, np.ndarray]:
        best_val = np.inf
        best_angles = None
        combos = itertools.product(*axes)
        while True:
            block = list(itertools.islice(combos, chunk))
            if not block:
                break
            thetas = np.zeros((len(block), m))
            thetas[:, 1:] = np.asarray(block)
            values = backend.circle_potentials(np.ascontiguousarray(thetas), two_k)
            i = int(np.argmin(values))
            if values[i] < best_val:
                best_val = float(values[i])
                best_angles = thetas[i, 1:].copy()
        return best_val, best_angles

    steps = max(2, int(np.ceil(np.pi / grid)))
    axes = [np.linspace(0.0, np.pi, steps, endpoint=False) for _ in range(m - 1)]
    best_val, best_angles = evaluate_grid(axes)

    window = np.pi / steps
    for _ in range(refine_rounds):
        axes = [np.linspace(a - window, a + window, 11) for a in best_angles]
        val, angles = evaluate_grid(axes)
        if val < best_val:
            best_val, best_angles = val, angles
        window /= 5.0
    return best_val
