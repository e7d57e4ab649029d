"""Closed-form, non-sharp bounds and the threshold where they beat h <= g <= a."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from ._roots import bisect
from .errors import DegenerateInputError, DomainError, InfeasibleMeansError

BoundKind = Literal["harmonic-lower", "arithmetic-upper", "geometric-lower", "geometric-upper"]


@dataclass(frozen=True)
class SimpleBoundReport:
    bound: float
    is_strict: bool
    kind: BoundKind


def _check_pair(small: float, large: float, names: str) -> None:
    if not (math.isfinite(small) and math.isfinite(large)) or small <= 0.0 or large <= 0.0:
        raise InfeasibleMeansError(f"{names} must be positive and finite")
    if small > large:
        raise InfeasibleMeansError(f"{names} out of order: {small!r} > {large!r}")
    if small == large:
        raise DegenerateInputError(f"{names} coincide; the strict bound does not apply")


def _check_alpha(alpha: float, upper: float = 0.5) -> None:
    if not 0.0 < alpha <= upper:
        raise DomainError(f"alpha must lie in (0, {upper:g}], got {alpha!r}")


def _inflation(ratio: float, alpha: float) -> float:
    """``alpha * e * ratio^(1/alpha)`` with the power taken in log space; ``inf`` on overflow."""
    log_value = math.log(alpha) + 1.0 + math.log(ratio) / alpha
    return math.exp(log_value) if log_value < 709.0 else math.inf


def simple_harmonic_lower(a: float, g: float, alpha: float) -> SimpleBoundReport:
    """``h > a / (alpha e (a/g)^(1/alpha) + 1)``."""
    _check_pair(g, a, "g, a")
    _check_alpha(alpha)
    return SimpleBoundReport(a / (_inflation(a / g, alpha) + 1.0), True, "harmonic-lower")


def simple_arithmetic_upper(h: float, g: float, alpha: float) -> SimpleBoundReport:
    """``a < h (alpha e (g/h)^(1/alpha) + 1)``, the reciprocal twin of the harmonic bound."""
    _check_pair(h, g, "h, g")
    _check_alpha(alpha)
    return SimpleBoundReport(h * (_inflation(g / h, alpha) + 1.0), True, "arithmetic-upper")


def _geometric_log_factor(a: float, h: float, n: int) -> float:
    t = h / a
    return math.log(t) + t + n / (n - 1.0)


def simple_geometric_interval(a: float, h: float, alpha: float, n: int) -> tuple[SimpleBoundReport, SimpleBoundReport]:
    """Strict bracket on ``g`` from ``a``, ``h``, the minimum weight and the sample size."""
    _check_pair(h, a, "h, a")
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    _check_alpha(alpha, 1.0 / n)
    log_factor = _geometric_log_factor(a, h, n)
    lower = h * math.exp(-alpha * log_factor)
    upper = a * math.exp(alpha * log_factor)
    return (
        SimpleBoundReport(lower, True, "geometric-lower"),
        SimpleBoundReport(upper, True, "geometric-upper"),
    )


def improvement_threshold() -> float:
    """The root of ``t e^(t+1) = 1``, about 0.278464."""
    return bisect(lambda t: math.log(t) + t + 1.0, 0.1, 0.5)


def improves_over_trivial(a: float, h: float, alpha: float, n: int) -> bool:
    """Whether the simple geometric upper bound is strictly below ``a`` at this ``n``."""
    if not 0.0 < h < a:
        raise InfeasibleMeansError(f"need 0 < h < a, got h={h!r}, a={a!r}")
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    return _geometric_log_factor(a, h, n) < 0.0
