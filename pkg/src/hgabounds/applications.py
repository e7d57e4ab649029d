"""Trace-of-inverse bounds for SPD matrices and coefficient bounds for polynomials.

Both follow from the simple harmonic lower bound with equal weights ``1/n``:
for a positive spectrum (or positive roots) the arithmetic mean is the
trace over ``n``, the geometric mean is the ``n``-th root of the determinant
and ``n`` over the harmonic mean is the trace of the inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import DefinitenessError, DegenerateInputError, DomainError, ValidationError


@dataclass(frozen=True)
class SymmetricMatrix:
    """Dense symmetric matrix, checked entry by entry on construction."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValidationError(f"expected a non-empty square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValidationError("matrix has non-finite entries")
        if not np.array_equal(arr, arr.T):
            raise ValidationError("matrix is not symmetric")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class PolynomialCoeffs:
    """Coefficients ``a_0 .. a_n`` in descending degree."""

    coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        cs = tuple(float(c) for c in self.coefficients)
        if len(cs) < 3:
            raise ValidationError(f"degree must be at least 2, got {len(cs) - 1}")
        if not all(math.isfinite(c) for c in cs):
            raise ValidationError("non-finite coefficient")
        if cs[0] == 0.0 or cs[-1] == 0.0:
            raise ValidationError("leading and constant coefficients must be nonzero")
        object.__setattr__(self, "coefficients", cs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class TraceCheck:
    passed: bool
    trace_inverse: float
    bound: float

    @property
    def slack_ratio(self) -> float:
        return self.bound / self.trace_inverse


@dataclass(frozen=True)
class PolynomialCheck:
    passed: bool
    lower: float
    middle: float
    upper: float
    coefficients: PolynomialCoeffs


def cholesky(m: SymmetricMatrix) -> np.ndarray:
    """Lower-triangular ``L`` with ``L L^T = A``.

    Raises:
        DefinitenessError: a pivot is not strictly positive.
    """
    a = m.entries
    n = m.n
    low = np.zeros((n, n))
    for j in range(n):
        pivot = a[j, j] - low[j, :j] @ low[j, :j]
        if not pivot > 0.0:
            raise DefinitenessError(f"matrix is not positive definite (pivot {j} = {pivot!r})")
        low[j, j] = math.sqrt(pivot)
        low[j + 1 :, j] = (a[j + 1 :, j] - low[j + 1 :, :j] @ low[j, :j]) / low[j, j]
    return low


def factor_trace_det(m: SymmetricMatrix) -> tuple[float, float]:
    """Trace and determinant; the determinant is the product of squared Cholesky pivots."""
    trace, log_det = trace_log_det(m)
    return trace, math.exp(log_det)


def trace_log_det(m: SymmetricMatrix) -> tuple[float, float]:
    low = cholesky(m)
    return float(np.trace(m.entries)), 2.0 * float(np.sum(np.log(np.diag(low))))


def trace_of_inverse(m: SymmetricMatrix) -> float:
    """``trace(A^-1) = ||L^-1||_F^2``, solving ``L x = e_k`` for each unit vector."""
    low = cholesky(m)
    n = m.n
    total = 0.0
    for k in range(n):
        col = np.zeros(n)
        # forward substitution; entries above k stay zero
        for i in range(k, n):
            rhs = (1.0 if i == k else 0.0) - low[i, k:i] @ col[k:i]
            col[i] = rhs / low[i, i]
        total += col @ col
    return float(total)


def trace_inverse_upper_bound(trace: float, det: float, n: int, log_det: float | None = None) -> float:
    """``e (trace/n)^(n-1) / det + n^2 / trace``, strictly above ``trace(A^-1)``.

    Pass ``log_det`` to avoid forming a determinant that over- or underflows.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not trace > 0.0:
        raise DomainError(f"trace must be positive, got {trace!r}")
    if log_det is None:
        if not det > 0.0:
            raise DomainError(f"det must be positive, got {det!r}")
        log_det = math.log(det)
    return math.exp(1.0 + (n - 1) * math.log(trace / n) - log_det) + n * n / trace


def verify_trace_bound(m: SymmetricMatrix) -> TraceCheck:
    if m.n < 2:
        raise ValidationError("the trace bound needs a matrix of order at least 2")
    trace, log_det = trace_log_det(m)
    exact = trace_of_inverse(m)
    bound = trace_inverse_upper_bound(trace, math.nan, m.n, log_det=log_det)
    return TraceCheck(exact < bound, exact, bound)


def _vieta_check(roots: Sequence[float], coeffs: Sequence[float]) -> None:
    n = len(roots)
    elementary = [1.0]
    for k in range(1, n + 1):
        elementary.append(math.fsum(math.prod(c) for c in combinations(roots, k)))
    for k, e_k in enumerate(elementary):
        expected = (-1) ** k * e_k
        if abs(coeffs[k] - expected) > 1e-9 * max(1.0, abs(expected)):
            raise RuntimeError(f"expansion mismatch at a_{k}: {coeffs[k]!r} vs {expected!r}")


def polynomial_from_roots(roots: Sequence[float]) -> PolynomialCoeffs:
    """Monic polynomial with the given roots, built by repeated convolution with ``(x - r)``."""
    coeffs = np.array([1.0])
    for r in roots:
        coeffs = np.convolve(coeffs, [1.0, -float(r)])
    if len(roots) <= 4:
        _vieta_check(roots, coeffs)
    return PolynomialCoeffs(tuple(coeffs))


def _parts(p: PolynomialCoeffs) -> tuple[int, float, float, float, float]:
    cs = p.coefficients
    n = p.degree
    a0, a1, an1, an = cs[0], cs[1], cs[-2], cs[-1]
    if a1 == 0.0:
        raise DegenerateInputError("a_1 = 0 is impossible for a polynomial with positive roots")
    return n, a0, a1, an1, an


def fransen_lohne_lower(p: PolynomialCoeffs) -> float:
    """``n^2 |a_0 a_n / a_1|``, a lower bound on ``|a_{n-1}|`` under positive roots."""
    n, a0, a1, _, an = _parts(p)
    return n * n * abs(a0 * an / a1)


def reverse_upper(p: PolynomialCoeffs) -> float:
    """``n^2 |a_0 a_n / a_1| + e |a_0| |a_1 / (n a_0)|^(n-1)``, an upper bound on ``|a_{n-1}|``."""
    n, a0, a1, _, _ = _parts(p)
    return fransen_lohne_lower(p) + abs(a0) * math.exp(1.0 + (n - 1) * math.log(abs(a1 / (n * a0))))


def verify_polynomial_bounds(roots: Sequence[float]) -> PolynomialCheck:
    roots = [float(r) for r in roots]
    if len(roots) < 2:
        raise DomainError("need at least two roots")
    for r in roots:
        if not (math.isfinite(r) and r > 0.0):
            raise DomainError(f"roots must be positive, got {r!r}")
    p = polynomial_from_roots(roots)
    lower = fransen_lohne_lower(p)
    upper = reverse_upper(p)
    middle = abs(p.coefficients[-2])
    # equal roots put the lower bound on the boundary up to rounding
    margin = 1e-12 * middle
    return PolynomialCheck(lower <= middle + margin and middle <= upper, lower, middle, upper, p)
