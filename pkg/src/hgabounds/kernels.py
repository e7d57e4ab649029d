"""Scalar kernels of the normalized two-value problem.

With unit arithmetic mean and a single value ``x`` carrying weight ``alpha``
(the rest sharing ``y = (1 - alpha x) / (1 - alpha)``), the geometric mean is
``f(x)`` and the harmonic mean is ``phi_squared(x)``.  Both vanish at the
ends of ``[0, 1/alpha]``, peak at ``x = 1`` with value one, and ``f`` lies
above ``phi`` left of the peak and below it on the right.
"""

from __future__ import annotations

import math

from .errors import DomainError


def _check_alpha(alpha: float, upper: float = 0.5) -> None:
    if not 0.0 < alpha <= upper:
        raise DomainError(f"alpha must lie in (0, {upper:g}], got {alpha!r}")


def _check_x(x: float, alpha: float) -> None:
    if not 0.0 <= x <= 1.0 / alpha:
        raise DomainError(f"x must lie in [0, 1/alpha] = [0, {1.0 / alpha:g}], got {x!r}")


def f_kernel(x: float, alpha: float) -> float:
    """Geometric mean of the normalized two-value sample, ``x^a ((1-a x)/(1-a))^(1-a)``."""
    _check_alpha(alpha)
    _check_x(x, alpha)
    if x == 0.0 or x == 1.0 / alpha:
        return 0.0
    rest = (1.0 - alpha * x) / (1.0 - alpha)
    if rest <= 0.0:
        return 0.0
    return math.exp(alpha * math.log(x) + (1.0 - alpha) * math.log(rest))


def phi_squared(x: float, alpha: float) -> float:
    """Harmonic mean of the normalized two-value sample, ``x(1-a x)/((1-2a)x + a)``."""
    _check_alpha(alpha)
    _check_x(x, alpha)
    if x == 1.0 / alpha:
        return 0.0
    return max(x * (1.0 - alpha * x), 0.0) / ((1.0 - 2.0 * alpha) * x + alpha)


def phi(x: float, alpha: float) -> float:
    return math.sqrt(phi_squared(x, alpha))


def s_function(t: float) -> float:
    """``2t/(2-t) + ln(1-t)``; zero at the origin and decreasing on ``t < 1``."""
    if not t < 1.0:
        raise DomainError(f"s(t) needs t < 1, got {t!r}")
    return 2.0 * t / (2.0 - t) + math.log1p(-t)


def gamma_sign(x: float, alpha: float) -> float:
    """Sign-carrying factor of the endpoint derivatives with respect to alpha.

    Non-positive for ``x`` in ``[0, 1]`` and non-negative on ``[1, 1/alpha]``.
    Defined for ``alpha`` in ``(0, 1)``; returns ``-inf`` at ``x = 0`` and
    ``+inf`` at ``x = 1/alpha``.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
    _check_x(x, alpha)
    if x == 1.0 / alpha:
        return math.inf
    if x == 0.0:
        return -math.inf
    # same expression with the first and last terms combined; the terms
    # themselves blow up and cancel near both ends
    u = 1.0 - alpha * x
    if x < 0.5:
        log_term = math.log(x) + math.log1p(-alpha) - math.log(u)
    else:
        log_term = math.log1p((x - 1.0) / u)
    return 2.0 * (1.0 - x) / (1.0 + (1.0 - 2.0 * alpha) * x) + log_term


def is_monotone(values, increasing: bool, tol: float = 1e-12) -> bool:
    """Grid probe: successive differences keep one sign up to ``tol`` on ties."""
    prev = None
    for v in values:
        if prev is not None:
            step = v - prev
            if increasing and step < -tol:
                return False
            if not increasing and step > tol:
                return False
        prev = v
    return True
