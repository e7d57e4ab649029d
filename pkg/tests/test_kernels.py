import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hgabounds import DomainError, f_kernel, gamma_sign, phi_squared, s_function
from hgabounds.kernels import is_monotone, phi

ALPHAS = [k / 40 for k in range(1, 21)]


@pytest.mark.parametrize("alpha", [0.1, 1 / 3, 0.5])
def test_kernels_peak_at_one(alpha):
    assert f_kernel(1.0, alpha) == pytest.approx(1.0, abs=1e-15)
    assert phi_squared(1.0, alpha) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("alpha", [0.1, 1 / 3, 0.5])
def test_kernels_vanish_at_ends(alpha):
    for x in (0.0, 1.0 / alpha):
        assert f_kernel(x, alpha) == 0.0
        assert phi_squared(x, alpha) == 0.0


def test_f_reference_value():
    # 40-digit reference
    assert f_kernel(0.5, 1 / 3) == pytest.approx(0.92100787466009665, rel=1e-14)


def test_alpha_half_closed_forms():
    assert f_kernel(0.2, 0.5) == pytest.approx(0.6, rel=1e-15)
    assert phi_squared(0.2, 0.5) == pytest.approx(0.36, rel=1e-15)


def test_phi_squared_reference_value():
    assert phi_squared(0.5, 1 / 3) == pytest.approx(5 / 6, rel=1e-15)
    assert phi(0.5, 1 / 3) == pytest.approx(math.sqrt(5 / 6), rel=1e-15)


def test_s_function_values():
    assert s_function(0.0) == 0.0
    assert s_function(0.5) == pytest.approx(-0.026480513893278643, rel=1e-13)
    assert s_function(-1.0) == pytest.approx(0.026480513893278643, rel=1e-13)
    with pytest.raises(DomainError):
        s_function(1.0)


def test_gamma_sign_examples():
    assert gamma_sign(1.0, 1 / 3) == 0.0
    assert gamma_sign(0.5, 1 / 3) < 0.0
    assert gamma_sign(2.0, 1 / 3) > 0.0
    assert gamma_sign(0.0, 1 / 3) == -math.inf
    assert gamma_sign(3.0, 1 / 3) == math.inf


@pytest.mark.parametrize(
    "call",
    [
        lambda: f_kernel(0.5, 0.0),
        lambda: f_kernel(0.5, 0.6),
        lambda: f_kernel(-0.1, 0.3),
        lambda: phi_squared(2.1, 0.5),
        lambda: gamma_sign(0.5, 1.0),
    ],
)
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


@pytest.mark.parametrize("alpha", ALPHAS)
def test_unimodal_on_grid(alpha):
    xs = np.linspace(0.0, 1.0 / alpha, 1000)
    for kernel in (f_kernel, phi_squared):
        assert is_monotone([kernel(x, alpha) for x in xs if x <= 1.0], True)
        assert is_monotone([kernel(x, alpha) for x in xs if x >= 1.0], False)


@pytest.mark.parametrize("alpha", ALPHAS[:-1])
def test_f_phi_ordering_and_ratio(alpha):
    xs = np.linspace(0.0, 1.0 / alpha, 1000)[1:-1]
    f = np.array([f_kernel(x, alpha) for x in xs])
    p = np.sqrt([phi_squared(x, alpha) for x in xs])
    away = np.abs(xs - 1.0) > 0.05
    assert np.all((f > p)[away & (xs < 1.0)])
    assert np.all((f < p)[away & (xs > 1.0)])
    assert is_monotone(f / p, False)


def test_f_equals_phi_at_alpha_half():
    for x in np.linspace(0.0, 2.0, 101):
        assert f_kernel(x, 0.5) == pytest.approx(phi(x, 0.5), rel=1e-14, abs=1e-300)


def test_s_decreasing():
    assert is_monotone([s_function(t) for t in np.linspace(-50.0, 0.9999, 1000)], False)


@given(st.floats(0.01, 0.99), st.floats(0.0, 1.0))
def test_gamma_sign_property(alpha, frac):
    left = frac
    right = 1.0 + frac * (1.0 / alpha - 1.0)
    assert gamma_sign(left, alpha) <= 1e-12
    assert gamma_sign(right, alpha) >= -1e-12


def test_is_monotone_tolerates_ties():
    assert is_monotone([1.0, 1.0 - 1e-13, 2.0], True)
    assert not is_monotone([1.0, 0.9, 2.0], True)
    assert is_monotone([3.0, 2.0, 2.0], False)
