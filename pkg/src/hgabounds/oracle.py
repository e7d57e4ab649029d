"""Brute-force checks of the sharp bounds.

``two_value_search`` walks every split of the indices into two groups, fits
the two common values to the known means and keeps the extreme target
values.  ``random_feasible_search`` samples points of the constraint set
directly.  Neither path calls into :mod:`hgabounds.sharp`: the roots are found
by a vectorized bisection over all subsets (or samples) at once with its own
brackets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import InfeasibleMeansError, OracleError, ValidationError
from .means import WeightedSample, reciprocal_dual, validate_weights
from .sharp import BoundInterval

MAX_N = 12
BOUNDARY = 1e-12
DEGENERATE_TOL = 1e-12
DEFAULT_TOL = 1e-6
BISECT_ITERS = 200

_TARGET_FOR = {
    frozenset("ag"): "h",
    frozenset("ah"): "g",
    frozenset("hg"): "a",
}


@dataclass(frozen=True)
class OracleReport:
    observed_min: float
    observed_max: float
    argmin_sample: WeightedSample
    argmax_sample: WeightedSample
    evaluations: int
    method: str
    # index group of smaller total weight at the extremum (two-value search only)
    argmin_subset: tuple[int, ...] = ()
    argmax_subset: tuple[int, ...] = ()
    boundary_hits: int = 0
    failures: int = 0


@dataclass(frozen=True)
class Verdict:
    passed: bool
    failures: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.passed


def _parse_known(known, target: str) -> dict[str, float]:
    if isinstance(known, Mapping):
        pairs = dict(known)
    else:
        pairs = dict(known)
    if len(pairs) != 2 or not set(pairs) <= set("hga"):
        raise ValidationError(f"known must name exactly two of h, g, a; got {sorted(pairs)}")
    expected = _TARGET_FOR[frozenset(pairs)]
    if target != expected:
        raise ValidationError(f"with {sorted(pairs)} known the target must be {expected!r}, got {target!r}")
    for k, v in pairs.items():
        if not math.isfinite(v) or v <= 0.0:
            raise InfeasibleMeansError(f"{k} must be positive and finite, got {v!r}")
    return {k: float(v) for k, v in pairs.items()}


def _ratio(small: float, large: float) -> float:
    r = small / large
    if r > 1.0 + 1e-9:
        raise InfeasibleMeansError(f"means out of order: ratio {r!r} > 1")
    return min(r, 1.0)


def _vec_bisect(func, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Elementwise root of an increasing ``func`` with ``func(lo) <= 0 <= func(hi)``."""
    lo = lo.astype(float).copy()
    hi = hi.astype(float).copy()
    for _ in range(BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        positive = func(mid) > 0.0
        hi = np.where(positive, mid, hi)
        lo = np.where(positive, lo, mid)
    return 0.5 * (lo + hi)


def _logsumexp(x: np.ndarray, axis: int = -1) -> np.ndarray:
    top = np.max(x, axis=axis, keepdims=True)
    return np.squeeze(top, axis) + np.log(np.sum(np.exp(x - top), axis=axis))


def _light_values(beta: np.ndarray, comp: np.ndarray, r: float, kind: str) -> np.ndarray:
    """Value ``X < 1`` of the group of weight ``beta`` in a unit-mean two-value sample.

    ``comp`` is ``1 - beta`` summed directly from the weights.  ``kind`` names
    the second known mean ("g" or "h") whose normalized value is ``r``.
    """
    if kind == "g":
        log_r = math.log(r)

        def residual(u):
            return beta * u + comp * np.log1p(beta * (1.0 - np.exp(u)) / comp) - log_r

        # -(1-b) ln(1-b) < 1 bounds the second term
        lo = (log_r - 1.0) / beta
    else:
        inv_r = 1.0 / r

        def residual(u):
            x = np.exp(u)
            return inv_r - beta / x - comp * comp / (comp + beta * (1.0 - x))

        lo = np.log(beta * r)
    return np.exp(_vec_bisect(residual, lo, np.zeros_like(beta)))


def _target_of(x: np.ndarray, y: np.ndarray, beta: np.ndarray, comp: np.ndarray, kind: str) -> np.ndarray:
    if kind == "h":
        return 1.0 / (beta / x + comp / y)
    return np.exp(beta * np.log(x) + comp * np.log(y))


def _constant_report(value: float, weights: tuple[float, ...], method: str) -> OracleReport:
    sample = WeightedSample((value,) * len(weights), weights)
    return OracleReport(value, value, sample, sample, 0, method)


def _dual_report(report: OracleReport) -> OracleReport:
    return OracleReport(
        1.0 / report.observed_max,
        1.0 / report.observed_min,
        reciprocal_dual(report.argmax_sample),
        reciprocal_dual(report.argmin_sample),
        report.evaluations,
        report.method,
        report.argmax_subset,
        report.argmin_subset,
        report.boundary_hits,
        report.failures,
    )


def two_value_search(weights: Iterable[float], known, target: str, max_n: int = MAX_N) -> OracleReport:
    """Extremes of ``target`` over all two-value samples matching the ``known`` means.

    Args:
        weights: sample weights, summing to one.
        known: two of ``{"h", "g", "a"}`` with their values, as a mapping or
            pairs.
        target: the remaining mean.
        max_n: refuse larger samples; the search visits ``2**n - 2`` subsets.
    """
    ws = validate_weights(list(weights))
    n = len(ws)
    if n > max_n:
        raise OracleError(f"exhaustive search is capped at n = {max_n}, got {n}")
    means = _parse_known(known, target)
    if target == "a":
        dual = two_value_search(ws, {"a": 1.0 / means["h"], "g": 1.0 / means["g"]}, "h", max_n)
        return _dual_report(dual)

    a = means["a"]
    kind = "g" if target == "h" else "h"
    r = _ratio(means[kind], a)
    if r >= 1.0 - DEGENERATE_TOL:
        return _constant_report(a, ws, "two-value")

    w = np.asarray(ws)
    masks = np.arange(1, 2**n - 1)
    member = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)
    beta = member @ w
    comp = (~member) @ w
    x = _light_values(beta, comp, r, kind)
    y = 1.0 + beta * (1.0 - x) / comp
    with np.errstate(divide="ignore", under="ignore"):
        values = _target_of(x, y, beta, comp, target)

    # tiny values are still exact solutions and are kept; only underflow is dropped
    usable = (x > 0.0) & (y > 0.0) & np.isfinite(values) & (values > 0.0)
    boundary_hits = int(np.count_nonzero(x < BOUNDARY))
    if not usable.any():
        raise OracleError("every two-value configuration underflows to the boundary x = 0")
    idx = np.flatnonzero(usable)
    lo_i = idx[np.argmin(values[idx])]
    hi_i = idx[np.argmax(values[idx])]

    def sample_at(i: int) -> WeightedSample:
        return WeightedSample(tuple(np.where(member[i], x[i], y[i]) * a), ws)

    def light_group(i: int) -> tuple[int, ...]:
        group = member[i] if beta[i] <= comp[i] else ~member[i]
        return tuple(int(k) for k in np.flatnonzero(group))

    return OracleReport(
        float(values[lo_i]) * a,
        float(values[hi_i]) * a,
        sample_at(lo_i),
        sample_at(hi_i),
        int(masks.size),
        "two-value",
        light_group(lo_i),
        light_group(hi_i),
        boundary_hits,
    )


def _family_ratio(s: np.ndarray, z: np.ndarray, logw: np.ndarray, w: np.ndarray, kind: str) -> np.ndarray:
    """log(kind-mean / a) of the shape family ``x_i ~ exp(s z_i)``."""
    sz = s[:, None] * z
    if kind == "g":
        return sz @ w - _logsumexp(sz + logw)
    return -(_logsumexp(-sz + logw) + _logsumexp(sz + logw))


def _correct_pair(x: np.ndarray, w: np.ndarray, p: np.ndarray, q: np.ndarray, r: float, kind: str):
    """Refit coordinates ``p`` and ``q`` so both normalized constraints hold again.

    Returns the corrected array and a boolean mask of rows that could not be
    fixed (the other coordinates already leave no room).
    """
    rows = np.arange(x.shape[0])
    wp, wq = w[p], w[q]
    xp, xq = x[rows, p], x[rows, q]
    keep = np.ones_like(x, dtype=bool)
    keep[rows, p] = False
    keep[rows, q] = False

    room = 1.0 - np.sum(np.where(keep, w * x, 0.0), axis=1)
    ok = room > 0.0
    room = np.where(ok, room, 1.0)
    m = room / (wp + wq)

    swap = xp > xq
    c_idx = np.where(swap, q, p)
    o_idx = np.where(swap, p, q)
    wc = w[c_idx]
    wo = w[o_idx]

    if kind == "g":
        need = math.log(r) - np.sum(np.where(keep, w * np.log(x), 0.0), axis=1)
        ok &= need <= (wp + wq) * np.log(m)

        def residual(u):
            xc = m * np.exp(u)
            return wc * np.log(xc) + wo * np.log(np.maximum(room - wc * xc, 1e-300) / wo) - need

        lo = np.minimum((need - wo * np.log(room / wo)) / wc - np.log(m) - 1.0, -1.0)
    else:
        need = 1.0 / r - np.sum(np.where(keep, w / x, 0.0), axis=1)
        ok &= need >= (wp + wq) / m

        def residual(u):
            xc = m * np.exp(u)
            return need - wc / xc - wo * wo / np.maximum(room - wc * xc, 1e-300)

        lo = np.log(wc / (m * np.where(need > 0.0, need, 1.0))) - 1.0

    lo = np.where(ok, lo, -1.0)
    u = _vec_bisect(residual, lo, np.zeros_like(lo))
    xc = m * np.exp(u)
    xo = (room - wc * xc) / wo
    ok &= (xc > 0.0) & (xo > 0.0) & np.isfinite(xc) & np.isfinite(xo) & np.all(x > 0.0, axis=1)
    out = x.copy()
    out[rows[ok], c_idx[ok]] = xc[ok]
    out[rows[ok], o_idx[ok]] = xo[ok]
    return out, ~ok


def random_feasible_search(
    weights: Iterable[float],
    known,
    target: str,
    samples: int = 1000,
    seed: int = 0,
) -> OracleReport:
    """Extremes of ``target`` over random samples that match the ``known`` means.

    Each sample starts from a random direction ``z``; the family
    ``exp(s z)`` rescaled to the known arithmetic mean is solved for ``s`` to
    hit the second known mean, then jittered and repaired on its smallest and
    largest coordinates.  A failed repair keeps the unjittered point and counts as a
    failure.

    Raises:
        OracleError: more than half of the repairs failed.
    """
    ws = validate_weights(list(weights))
    means = _parse_known(known, target)
    if samples < 1:
        raise ValidationError(f"samples must be positive, got {samples}")
    if target == "a":
        dual = random_feasible_search(ws, {"a": 1.0 / means["h"], "g": 1.0 / means["g"]}, "h", samples, seed)
        return _dual_report(dual)

    a = means["a"]
    kind = "g" if target == "h" else "h"
    r = _ratio(means[kind], a)
    if r >= 1.0 - DEGENERATE_TOL:
        rep = _constant_report(a, ws, "random")
        return OracleReport(a, a, rep.argmin_sample, rep.argmax_sample, samples, "random")

    n = len(ws)
    w = np.asarray(ws)
    logw = np.log(w)
    rng = np.random.Generator(np.random.Philox(seed))
    z = rng.standard_normal((samples, n))
    z -= z @ w[:, None]
    log_r = math.log(r)

    s_hi = np.ones(samples)
    for _ in range(80):
        short = _family_ratio(s_hi, z, logw, w, kind) > log_r
        if not short.any():
            break
        s_hi = np.where(short, 2.0 * s_hi, s_hi)
    else:
        raise OracleError("shape family never reaches the requested mean ratio")
    s = _vec_bisect(lambda t: log_r - _family_ratio(t, z, logw, w, kind), np.zeros(samples), s_hi)
    sz = s[:, None] * z
    base = np.exp(sz - _logsumexp(sz + logw)[:, None])

    jitter = rng.uniform(0.0, 0.2, samples)[:, None] * np.minimum(s, 50.0)[:, None] * rng.standard_normal((samples, n))
    # repair on the extreme pair of the base point; it has the most slack
    p = np.argmin(base, axis=1)
    q = np.argmax(base, axis=1)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore", under="ignore"):
        fixed, failed = _correct_pair(base * np.exp(jitter), w, p, q, r, kind)
    failures = int(np.count_nonzero(failed))
    if failures > samples // 2:
        raise OracleError(f"{failures} of {samples} repairs failed; constraint pair near-degenerate or infeasible")
    x = np.where(failed[:, None], base, fixed)

    # underflowed points sit on the boundary x_i = 0 and are left out
    inside = np.all((x >= BOUNDARY) & np.isfinite(x), axis=1)
    if not inside.any():
        raise OracleError("every generated point underflowed to the boundary")
    x = x[inside]
    logx = np.log(x)
    if target == "h":
        values = np.exp(-_logsumexp(logw - logx))
    else:
        values = np.exp(logx @ w)
    lo_i = int(np.argmin(values))
    hi_i = int(np.argmax(values))
    return OracleReport(
        float(values[lo_i]) * a,
        float(values[hi_i]) * a,
        WeightedSample(tuple(x[lo_i] * a), ws),
        WeightedSample(tuple(x[hi_i] * a), ws),
        samples,
        "random",
        boundary_hits=int(np.count_nonzero(~inside)),
        failures=failures,
    )


def verify_sharpness(interval: BoundInterval, report: OracleReport, tol: float = DEFAULT_TOL) -> Verdict:
    """Check an interval against an oracle report computed for the same problem.

    Containment is always checked.  A two-value report must also reach both
    endpoints, which is what makes the interval sharp.  ``tol`` is relative
    to the endpoint magnitude.
    """
    failures = []
    lo_slack = tol * abs(interval.lower)
    hi_slack = tol * abs(interval.upper)
    if report.observed_min < interval.lower - lo_slack:
        failures.append(f"observed min {report.observed_min!r} below lower bound {interval.lower!r}")
    if report.observed_max > interval.upper + hi_slack:
        failures.append(f"observed max {report.observed_max!r} above upper bound {interval.upper!r}")
    if report.method == "two-value":
        for side, endpoint, observed, slack in (
            ("lower", interval.lower, report.observed_min, lo_slack),
            ("upper", interval.upper, report.observed_max, hi_slack),
        ):
            if abs(observed - endpoint) > slack:
                failures.append(f"{side} bound {endpoint!r} not attained (oracle {observed!r})")
    return Verdict(not failures, tuple(failures))
