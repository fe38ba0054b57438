"""Truncated power series at 0: arccos expansion, real powers, sign checks.

The series power f^alpha is computed by the standard first-order
recurrence obtained from F' f = alpha f' F, which is O(N^2) in the
truncation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ecctensor.errors import InvalidInputError, SingularExpansionError

#: Default truncation order for series-based energy evaluation.
DEFAULT_ORDER = 256


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0..c_N of a Taylor expansion at 0."""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=np.float64)
        if coeffs.ndim != 1 or coeffs.size < 1:
            raise InvalidInputError("coefficients must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(coeffs)):
            raise InvalidInputError("coefficients must be finite")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __getitem__(self, k: int) -> float:
        return float(self.coeffs[k])

    def __call__(self, t: float) -> float:
        """Evaluate the truncated partial sum at t (Horner)."""
        result = 0.0
        for c in self.coeffs[::-1]:
            result = result * t + c
        return result


def series_arccos(order: int) -> PowerSeries:
    """Taylor coefficients of arccos at 0 up to the given order.

    c_0 = pi/2, even coefficients vanish, and
    c_{2k+1} = -(2k)! / (4^k (k!)^2 (2k+1)), built up by the term ratio
    to avoid factorial overflow.
    """
    if order < 1:
        raise InvalidInputError("order must be >= 1")
    coeffs = np.zeros(order + 1)
    coeffs[0] = math.pi / 2
    central = 1.0  # (2k)! / (4^k (k!)^2), k = 0
    k = 0
    while 2 * k + 1 <= order:
        coeffs[2 * k + 1] = -central / (2 * k + 1)
        central *= (2 * k + 1) / (2 * k + 2)
        k += 1
    return PowerSeries(coeffs)


def series_pow(f: PowerSeries, alpha: float, order: int | None = None) -> PowerSeries:
    """Coefficients of f(t)^alpha for f with f(0) > 0."""
    if order is None:
        order = f.order
    if order < 0:
        raise InvalidInputError("order must be >= 0")
    fc = np.zeros(order + 1)
    upto = min(order, f.order)
    fc[: upto + 1] = f.coeffs[: upto + 1]
    f0 = fc[0]
    if f0 <= 0:
        raise SingularExpansionError(f"f(0) must be positive for a real power, got {f0}")
    if alpha == 1.0:
        return PowerSeries(fc)
    g = np.zeros(order + 1)
    g[0] = f0 ** alpha
    for m in range(1, order + 1):
        acc = 0.0
        for j in range(1, m + 1):
            acc += (j * alpha - (m - j)) * fc[j] * g[m - j]
        g[m] = acc / (m * f0)
    return PowerSeries(g)


def series_euclid_pow(delta: float, order: int) -> PowerSeries:
    """Coefficients of (2 - 2t)^{delta/2}, the chord distance raised to delta."""
    if delta <= 0:
        raise InvalidInputError("delta must be positive")
    base = np.zeros(order + 1)
    base[0] = 2.0
    if order >= 1:
        base[1] = -2.0
    return series_pow(PowerSeries(base), delta / 2.0, order)


def series_compose_pow_arccos(delta: float, order: int) -> PowerSeries:
    """Coefficients of arccos(t)^delta at 0 up to the given order."""
    if delta <= 0:
        raise InvalidInputError("delta must be positive")
    return series_pow(series_arccos(order), delta, order)


@dataclass(frozen=True)
class SignReport:
    """Outcome of checking that all non-constant coefficients are negative."""

    hypotheses_ok: bool
    failed_hypothesis: str | None
    first_violation: int | None
    coeffs: np.ndarray = field(repr=False)

    @property
    def all_negative(self) -> bool:
        return self.hypotheses_ok and self.first_violation is None


def verify_sign_lemma(f: PowerSeries, alpha: float, order: int) -> SignReport:
    """Check numerically that g = f^alpha has g_k < 0 for 1 <= k <= order.

    Requires 0 < alpha < 1, f_0 > 0, f_1 < 0 and f_k <= 0 for k >= 2; if a
    hypothesis fails, the report says which one and asserts nothing about
    the conclusion.
    """
    failed = None
    if not 0 < alpha < 1:
        failed = f"alpha must be in (0, 1), got {alpha}"
    elif f.order < 1:
        failed = "series must have order >= 1"
    elif f[0] <= 0:
        failed = f"f_0 must be positive, got {f[0]}"
    elif f[1] >= 0:
        failed = f"f_1 must be negative, got {f[1]}"
    else:
        higher = f.coeffs[2:]
        if np.any(higher > 0):
            k = 2 + int(np.argmax(higher > 0))
            failed = f"f_{k} must be <= 0, got {f[k]}"
    if failed is not None:
        return SignReport(False, failed, None, np.empty(0))
    g = series_pow(f, alpha, order)
    violations = np.nonzero(g.coeffs[1:] >= 0)[0]
    first = int(violations[0]) + 1 if violations.size else None
    return SignReport(True, None, first, g.coeffs)


def tail_bound(f: PowerSeries, reference_value: float) -> float:
    """Upper bound on the truncated tail sum_{k>N} |c_k| at |t| <= 1.

    Requires c_k <= 0 for all k >= 1 (the constant term is free).  Then
    the full series sums to the closed-form value f(1) supplied by the
    caller, and the partial sum overshoots it by exactly the absolute
    tail: sum_{k>N} |c_k| = sum_{k<=N} c_k - f(1).
    """
    if np.any(f.coeffs[1:] > 0):
        k = 1 + int(np.argmax(f.coeffs[1:] > 0))
        raise InvalidInputError(f"tail bound needs c_k <= 0 for k >= 1; c_{k} = {f[k]}")
    tail = float(f.coeffs.sum()) - reference_value
    if tail < -1e-12:
        raise InvalidInputError(
            f"reference value {reference_value} exceeds the partial sum; "
            "it must be the true limit of the full series at t = 1"
        )
    return max(tail, 0.0)
