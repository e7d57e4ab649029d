"""Sharp two-sided bounds on one mean given the other two.

Every problem is solved on the normalized scale (unit arithmetic mean) in
terms of the two-value sample that puts ``xi`` on the lightest index and the
common value ``rest = (1 - alpha xi) / (1 - alpha)`` everywhere else.  The
solvers return ``rest`` alongside ``xi`` because recomputing it from ``xi``
cancels badly when ``xi`` is close to ``1/alpha``.
"""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass
from typing import Sequence

from ._roots import bisect
from .errors import DomainError, InfeasibleMeansError, ValidationError
from .means import WeightedSample, min_weight, reciprocal_dual, validate_weights

DEGENERATE_TOL = 1e-12
CLAMP_TOL = 1e-9


@dataclass(frozen=True)
class RootPair:
    """The two solutions ``xi0 <= 1 <= xi1`` of a kernel equation.

    ``rest0`` and ``rest1`` are the matching values taken by the other indices.
    """

    xi0: float
    xi1: float
    rest0: float
    rest1: float
    alpha: float

    @classmethod
    def degenerate(cls, alpha: float) -> "RootPair":
        return cls(1.0, 1.0, 1.0, 1.0, alpha)


@dataclass(frozen=True)
class BoundInterval:
    """Lower and upper bound on one mean with samples attaining each end.

    A witness is ``None`` when its extreme value is not a normal double.
    """

    lower: float
    upper: float
    lower_witness: WeightedSample | None
    upper_witness: WeightedSample | None
    roots: RootPair

    def contains(self, value: float, rel_tol: float = 0.0) -> bool:
        slack = rel_tol * max(abs(self.lower), abs(self.upper))
        return self.lower - slack <= value <= self.upper + slack

    @property
    def is_degenerate(self) -> bool:
        return self.lower == self.upper


def _check_ratio(ratio: float, name: str) -> float:
    """Validate a mean ratio in (0, 1]; clamp tiny overshoots with a warning."""
    if not math.isfinite(ratio) or ratio <= 0.0:
        raise InfeasibleMeansError(f"{name} must be positive, got {ratio!r}")
    if ratio > 1.0 + CLAMP_TOL:
        raise InfeasibleMeansError(f"{name} = {ratio!r} exceeds 1; means out of order")
    if ratio > 1.0:
        warnings.warn(f"{name} = {ratio!r} slightly above 1, clamped", RuntimeWarning, stacklevel=3)
        return 1.0
    return ratio


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 0.5:
        raise DomainError(f"alpha must lie in (0, 1/2], got {alpha!r}")


def solve_f_equation(g_ratio: float, alpha: float) -> RootPair:
    """Both solutions of ``f(xi) = g/a``.

    The lower root is bisected in ``log xi`` and the upper one in
    ``log rest``; both brackets come from bounding the other factor of ``f``
    on its branch, so they are tight and always contain the root.
    """
    r = _check_ratio(g_ratio, "g/a")
    _check_alpha(alpha)
    if r >= 1.0 - DEGENERATE_TOL:
        return RootPair.degenerate(alpha)
    beta = 1.0 - alpha
    log_r = math.log(r)

    def lower_branch(u: float) -> float:
        xi = math.exp(u)
        return alpha * u + beta * math.log1p(alpha * (1.0 - xi) / beta) - log_r

    # rest lies in [1, 1/(1-alpha)] on this branch; the unit margins keep the
    # sign change strict under rounding
    u_hi = min(log_r / alpha + 1.0, 0.0)
    u_lo = (log_r + beta * math.log(beta)) / alpha - 1.0
    u = bisect(lower_branch, u_lo, u_hi)
    xi0 = math.exp(u)
    rest0 = 1.0 + alpha * (1.0 - xi0) / beta

    def upper_branch(v: float) -> float:
        rest = math.exp(v)
        return alpha * math.log1p(beta * (1.0 - rest) / alpha) + beta * v - log_r

    # xi lies in [1, 1/alpha] on this branch
    v_hi = min(log_r / beta + 1.0, 0.0)
    v_lo = (log_r + alpha * math.log(alpha)) / beta - 1.0
    v = bisect(upper_branch, v_lo, v_hi)
    rest1 = math.exp(v)
    xi1 = min(1.0 + beta * (1.0 - rest1) / alpha, 1.0 / alpha)
    return RootPair(xi0, xi1, rest0, rest1, alpha)


def solve_phi_equation(h_ratio: float, alpha: float) -> RootPair:
    """Both roots of ``alpha xi^2 - (1 - r(1-2 alpha)) xi + r alpha = 0`` with ``r = h/a``.

    The larger root uses the cancellation-free sign; the smaller one comes
    from the product identity ``xi0 * xi1 = r``.
    """
    r = _check_ratio(h_ratio, "h/a")
    _check_alpha(alpha)
    if r >= 1.0 - DEGENERATE_TOL:
        return RootPair.degenerate(alpha)
    c = 1.0 - 2.0 * alpha
    beta = 1.0 - alpha
    sqrt_disc = math.sqrt((1.0 - r) * (1.0 - r * c * c))
    xi1 = min((1.0 - r * c + sqrt_disc) / (2.0 * alpha), 1.0 / alpha)
    xi0 = r / xi1
    big = 1.0 + r * c + sqrt_disc
    rest0 = big / (2.0 * beta)
    rest1 = 2.0 * r * beta / big
    return RootPair(xi0, xi1, rest0, rest1, alpha)


def _harmonic_of_pair(xi: float, rest: float, alpha: float) -> float:
    if xi == 0.0 or rest == 0.0:
        return 0.0
    return 1.0 / (alpha / xi + (1.0 - alpha) / rest)


def _geometric_of_pair(xi: float, rest: float, alpha: float) -> float:
    if xi == 0.0 or rest == 0.0:
        return 0.0
    return math.exp(alpha * math.log(xi) + (1.0 - alpha) * math.log(rest))


def _two_value_sample(
    xi: float, rest: float, weights: tuple[float, ...], j: int, scale: float
) -> WeightedSample | None:
    values = [rest * scale] * len(weights)
    values[j] = xi * scale
    # subnormal or overflowed entries cannot reproduce the means
    if not all(sys.float_info.min <= v <= sys.float_info.max for v in values):
        return None
    return WeightedSample(tuple(values), weights)


def _constant_interval(value: float, weights: tuple[float, ...], alpha: float) -> BoundInterval:
    witness = WeightedSample((value,) * len(weights), weights)
    return BoundInterval(value, value, witness, witness, RootPair.degenerate(alpha))


def _positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise InfeasibleMeansError(f"{name} must be positive and finite, got {value!r}")


def harmonic_bounds(a: float, g: float, weights: Sequence[float]) -> BoundInterval:
    """Sharp bounds on the harmonic mean when the arithmetic and geometric means are known."""
    _positive("a", a)
    _positive("g", g)
    ws = validate_weights(weights)
    alpha, j = min_weight(ws)
    roots = solve_f_equation(g / a, alpha)
    if roots.xi0 == roots.xi1:
        return _constant_interval(a, ws, alpha)
    lower = a * _harmonic_of_pair(roots.xi0, roots.rest0, alpha)
    upper = a * _harmonic_of_pair(roots.xi1, roots.rest1, alpha)
    return BoundInterval(
        lower,
        upper,
        _two_value_sample(roots.xi0, roots.rest0, ws, j, a),
        _two_value_sample(roots.xi1, roots.rest1, ws, j, a),
        roots,
    )


def geometric_bounds(a: float, h: float, weights: Sequence[float]) -> BoundInterval:
    """Sharp bounds on the geometric mean when the arithmetic and harmonic means are known."""
    _positive("a", a)
    _positive("h", h)
    ws = validate_weights(weights)
    alpha, j = min_weight(ws)
    roots = solve_phi_equation(h / a, alpha)
    if roots.xi0 == roots.xi1:
        return _constant_interval(a, ws, alpha)
    # the root right of 1 gives the smallest geometric mean
    lower = a * _geometric_of_pair(roots.xi1, roots.rest1, alpha)
    upper = a * _geometric_of_pair(roots.xi0, roots.rest0, alpha)
    return BoundInterval(
        lower,
        upper,
        _two_value_sample(roots.xi1, roots.rest1, ws, j, a),
        _two_value_sample(roots.xi0, roots.rest0, ws, j, a),
        roots,
    )


def _reciprocal_or_none(sample: WeightedSample | None) -> WeightedSample | None:
    if sample is None or max(sample.values) > 1.0 / sys.float_info.min:
        return None
    return reciprocal_dual(sample)


def arithmetic_bounds(h: float, g: float, weights: Sequence[float]) -> BoundInterval:
    """Sharp bounds on the arithmetic mean when the harmonic and geometric means are known.

    Solved as the harmonic problem of the reciprocal sample, whose arithmetic
    and geometric means are ``1/h`` and ``1/g``.
    """
    _positive("h", h)
    _positive("g", g)
    if h / g > 1.0 + CLAMP_TOL:
        raise InfeasibleMeansError(f"h/g = {h / g!r} exceeds 1; means out of order")
    dual = harmonic_bounds(1.0 / h, 1.0 / g, weights)
    # at alpha = 1/2 the interval collapses without the means being equal
    if dual.roots.xi0 == dual.roots.xi1:
        ws = dual.lower_witness.weights
        return _constant_interval(g, ws, dual.roots.alpha)
    return BoundInterval(
        1.0 / dual.upper,
        # an underflowed dual endpoint means the bound exceeds the double range
        1.0 / dual.lower if dual.lower > 0.0 else math.inf,
        _reciprocal_or_none(dual.upper_witness),
        _reciprocal_or_none(dual.lower_witness),
        dual.roots,
    )


def extremal_configuration(xi: float, weights: Sequence[float], j: int) -> WeightedSample:
    """Normalized two-value sample with ``x_j = xi`` and every other value equal.

    ``j`` must carry the smallest weight; the result has arithmetic mean one.

    Raises:
        DomainError: ``xi`` outside the open interval ``(0, 1/alpha)``, where
            some entry of the sample would be zero or negative.
    """
    ws = validate_weights(weights)
    alpha, _ = min_weight(ws)
    if not 0 <= j < len(ws) or ws[j] != alpha:
        raise ValidationError(f"index {j} does not carry the minimum weight {alpha!r}")
    if not 0.0 < xi < 1.0 / alpha:
        raise DomainError(f"xi must lie in (0, 1/alpha) = (0, {1.0 / alpha:g}), got {xi!r}")
    rest = (1.0 - alpha * xi) / (1.0 - alpha)
    sample = _two_value_sample(xi, rest, ws, j, 1.0)
    if sample is None:
        raise DomainError(f"xi = {xi!r} gives a sample outside the normal double range")
    return sample
