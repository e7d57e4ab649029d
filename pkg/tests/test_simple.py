import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hgabounds import (
    DegenerateInputError,
    DomainError,
    InfeasibleMeansError,
    improvement_threshold,
    improves_over_trivial,
    simple_arithmetic_upper,
    simple_geometric_interval,
    simple_harmonic_lower,
)

T0 = 0.27846454276107380


def test_harmonic_lower_thirds():
    r = simple_harmonic_lower(2.0, 6 ** (1 / 3), 1 / 3)
    assert r.bound == pytest.approx(0.90574571962148797, rel=1e-13)
    assert r.is_strict and r.kind == "harmonic-lower"


def test_harmonic_lower_alpha_half():
    assert simple_harmonic_lower(1.0, 0.6, 0.5).bound == pytest.approx(0.20940691773445651, rel=1e-13)


def test_arithmetic_upper_values():
    assert simple_arithmetic_upper(0.36, 0.6, 0.5).bound == pytest.approx(1.7191409142295226, rel=1e-13)
    assert simple_arithmetic_upper(18 / 11, 6 ** (1 / 3), 1 / 3).bound == pytest.approx(
        3.6666852489781084, rel=1e-13
    )


def test_geometric_interval_thirds():
    lo, hi = simple_geometric_interval(2.0, 18 / 11, 1 / 3, 3)
    assert lo.bound == pytest.approx(0.80786480435086331, rel=1e-13)
    assert hi.bound == pytest.approx(4.0510828731510086, rel=1e-13)
    assert lo.bound < 6 ** (1 / 3) < hi.bound


def test_threshold_constant():
    t0 = improvement_threshold()
    assert t0 == pytest.approx(T0, rel=1e-14)
    assert abs(t0 * math.exp(t0 + 1) - 1) <= 1e-12


def test_improvement_examples():
    # 0.1 e^(0.1 + 100/99) is about 0.303, below one
    assert improves_over_trivial(1.0, 0.1, 0.01, 100)
    assert not improves_over_trivial(1.0, 0.9, 0.01, 100)


@given(st.floats(0.01, 0.99), st.integers(2, 10_000))
def test_improvement_matches_threshold_in_the_limit(t, n):
    # the finite-n condition implies the limiting one
    if improves_over_trivial(1.0, t, 1.0 / n, n):
        assert t < T0


@pytest.mark.parametrize(
    "call, error",
    [
        (lambda: simple_harmonic_lower(1.0, 1.0, 0.3), DegenerateInputError),
        (lambda: simple_harmonic_lower(1.0, 2.0, 0.3), InfeasibleMeansError),
        (lambda: simple_arithmetic_upper(2.0, 1.0, 0.3), InfeasibleMeansError),
        (lambda: simple_harmonic_lower(2.0, 1.0, 0.7), DomainError),
        (lambda: simple_geometric_interval(2.0, 1.0, 0.4, 3), DomainError),
        (lambda: simple_geometric_interval(2.0, 1.0, 0.4, 1), DomainError),
        (lambda: improves_over_trivial(1.0, 1.0, 0.1, 10), InfeasibleMeansError),
    ],
)
def test_errors(call, error):
    with pytest.raises(error):
        call()


def test_extreme_ratio_saturates():
    assert simple_harmonic_lower(1.0, 0.1, 1e-3).bound == 0.0
    assert simple_arithmetic_upper(0.1, 1.0, 1e-3).bound == math.inf
