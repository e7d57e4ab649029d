"""Weighted samples and their harmonic, geometric and arithmetic means."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError

WEIGHT_SUM_TOL = 1e-12


def validate_weights(weights: Sequence[float]) -> tuple[float, ...]:
    """Check a weight vector and return it renormalized to sum exactly to one.

    Raises:
        ValidationError: fewer than two weights, a non-positive or non-finite
            weight, or a sum farther than ``WEIGHT_SUM_TOL`` from one.
    """
    ws = tuple(float(w) for w in weights)
    if len(ws) < 2:
        raise ValidationError(f"need at least two weights, got {len(ws)}")
    for i, w in enumerate(ws):
        if not math.isfinite(w) or w <= 0.0:
            raise ValidationError(f"weight {i} must be positive and finite, got {w!r}")
    total = math.fsum(ws)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ValidationError(f"weights sum to {total!r}, expected 1 within {WEIGHT_SUM_TOL:g}")
    return tuple(w / total for w in ws)


@dataclass(frozen=True)
class WeightedSample:
    """Positive values ``x_i`` with positive weights ``alpha_i`` summing to one."""

    values: tuple[float, ...]
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(x) for x in self.values)
        weights = validate_weights(self.weights)
        if len(values) != len(weights):
            raise ValidationError(
                f"{len(values)} values but {len(weights)} weights"
            )
        for i, x in enumerate(values):
            if not math.isfinite(x) or x <= 0.0:
                raise ValidationError(f"value {i} must be positive and finite, got {x!r}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def equal(cls, values: Sequence[float]) -> "WeightedSample":
        n = len(values)
        return cls(tuple(values), (1.0 / n,) * n)

    @property
    def n(self) -> int:
        return len(self.values)

    def scaled(self, factor: float) -> "WeightedSample":
        return WeightedSample(tuple(x * factor for x in self.values), self.weights)


@dataclass(frozen=True)
class MeanTriple:
    """The harmonic, geometric and arithmetic means ``(h, g, a)`` of a sample."""

    h: float
    g: float
    a: float

    def __iter__(self):
        return iter((self.h, self.g, self.a))


@dataclass(frozen=True)
class NormalizedProblem:
    """A bound problem rescaled to unit arithmetic mean.

    ``ratio`` is g/a for harmonic-bound problems and h/a for geometric-bound
    problems; ``alpha`` is the smallest weight.
    """

    alpha: float
    ratio: float

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 0.5:
            raise ValidationError(f"alpha must lie in (0, 1/2], got {self.alpha!r}")
        if not 0.0 < self.ratio <= 1.0:
            raise ValidationError(f"ratio must lie in (0, 1], got {self.ratio!r}")


def compute_means(sample: WeightedSample) -> MeanTriple:
    """Return ``(h, g, a)`` for a validated sample.

    The geometric mean is accumulated in the log domain so that extreme
    values neither overflow nor underflow.
    """
    xs, ws = sample.values, sample.weights
    h = 1.0 / math.fsum(w / x for x, w in zip(xs, ws))
    g = math.exp(math.fsum(w * math.log(x) for x, w in zip(xs, ws)))
    a = math.fsum(w * x for x, w in zip(xs, ws))
    # rounding can break the ordering by an ulp for near-constant samples
    h = min(h, a)
    g = min(max(g, h), a)
    return MeanTriple(h, g, a)


def normalize(sample: WeightedSample) -> tuple[WeightedSample, float]:
    """Rescale a sample to unit arithmetic mean; also return the original mean."""
    scale = compute_means(sample).a
    return WeightedSample(tuple(x / scale for x in sample.values), sample.weights), scale


def reciprocal_dual(sample: WeightedSample) -> WeightedSample:
    """Replace every value by its reciprocal, keeping the weights.

    The dual sample has means ``(1/a, 1/g, 1/h)``.
    """
    return WeightedSample(tuple(1.0 / x for x in sample.values), sample.weights)


def min_weight(sample_or_weights: WeightedSample | Sequence[float]) -> tuple[float, int]:
    """Smallest weight and the first index attaining it."""
    if isinstance(sample_or_weights, WeightedSample):
        ws = sample_or_weights.weights
    else:
        ws = tuple(sample_or_weights)
    alpha = min(ws)
    return alpha, ws.index(alpha)
