"""Shared hypothesis strategies and helpers."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import strategies as st

from hgabounds import WeightedSample


def rel(x: float, ref: float) -> float:
    return abs(x - ref) / abs(ref)


@st.composite
def weight_vectors(draw, min_n: int = 2, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.lists(st.floats(0.05, 1.0), min_size=n, max_size=n))
    total = math.fsum(raw)
    return tuple(w / total for w in raw)


@st.composite
def samples(draw, min_n: int = 2, max_n: int = 8):
    ws = draw(weight_vectors(min_n, max_n))
    values = draw(st.lists(st.floats(1e-2, 1e2), min_size=len(ws), max_size=len(ws)))
    return WeightedSample(tuple(values), ws)


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(12345))


@pytest.fixture
def thirds():
    return WeightedSample.equal((1.0, 2.0, 3.0))
