"""Bracketed bisection shared by the bound solvers."""

from __future__ import annotations

from typing import Callable

MAX_ITER = 200
REL_TOL = 1e-15


def bisect(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    rel_tol: float = REL_TOL,
    max_iter: int = MAX_ITER,
) -> float:
    """Root of a continuous ``func`` on ``[lo, hi]`` with a sign change.

    Stops when the bracket is narrower than ``rel_tol * max(1, |mid|)``, when
    the midpoint no longer moves in floating point, or after ``max_iter``
    halvings.  An endpoint that is already a root is returned as is.

    Raises:
        ValueError: ``func(lo)`` and ``func(hi)`` share a strict sign.
    """
    flo, fhi = func(lo), func(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise ValueError(f"no sign change on [{lo!r}, {hi!r}]: f={flo!r}, {fhi!r}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi or hi - lo <= rel_tol * max(1.0, abs(mid)):
            break
        fmid = func(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return 0.5 * (lo + hi)

