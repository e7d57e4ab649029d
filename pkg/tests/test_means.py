import math

import pytest
from hypothesis import given

from hgabounds import ValidationError, WeightedSample, compute_means, min_weight, normalize, reciprocal_dual
from hgabounds.means import NormalizedProblem, validate_weights

from conftest import rel, samples


def test_means_of_one_two_three(thirds):
    m = compute_means(thirds)
    assert m.h == pytest.approx(18 / 11, rel=1e-15)
    assert m.g == pytest.approx(1.8171205928321397, rel=1e-15)
    assert m.a == pytest.approx(2.0, rel=1e-15)


def test_constant_sample_has_equal_means():
    m = compute_means(WeightedSample((3.5, 3.5, 3.5), (0.2, 0.3, 0.5)))
    assert m.h == m.g == m.a == pytest.approx(3.5)


def test_extreme_values_do_not_overflow():
    m = compute_means(WeightedSample.equal((1e300, 1e300, 1e-300)))
    assert math.isfinite(m.g)
    assert m.g == pytest.approx(1e100, rel=1e-12)


def test_mean_triple_unpacks(thirds):
    h, g, a = compute_means(thirds)
    assert h < g < a


@pytest.mark.parametrize(
    "weights",
    [(1.0,), (0.5, 0.6), (0.5, -0.5, 1.0), (0.5, math.nan, 0.5), (0.5, 0.0, 0.5)],
)
def test_bad_weights_rejected(weights):
    with pytest.raises(ValidationError):
        validate_weights(weights)


def test_weights_renormalized_within_tolerance():
    ws = validate_weights((0.1, 0.2, 0.7 + 5e-13))
    assert math.fsum(ws) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("values", [(1.0, 0.0), (1.0, -2.0), (1.0, math.inf)])
def test_non_positive_values_rejected(values):
    with pytest.raises(ValidationError):
        WeightedSample(values, (0.5, 0.5))


def test_length_mismatch_rejected():
    with pytest.raises(ValidationError):
        WeightedSample((1.0, 2.0, 3.0), (0.5, 0.5))


def test_min_weight_first_index_on_ties():
    assert min_weight((0.4, 0.2, 0.2, 0.2)) == (0.2, 1)
    assert min_weight(WeightedSample((1, 2, 3), (0.5, 0.3, 0.2))) == (0.2, 2)


def test_normalized_problem_validation():
    NormalizedProblem(0.5, 1.0)
    with pytest.raises(ValidationError):
        NormalizedProblem(0.6, 0.5)
    with pytest.raises(ValidationError):
        NormalizedProblem(0.3, 0.0)


@given(samples())
def test_ordering_h_le_g_le_a(sample):
    m = compute_means(sample)
    assert m.h <= m.g <= m.a


@given(samples())
def test_scale_equivariance(sample):
    m = compute_means(sample)
    m2 = compute_means(sample.scaled(7.5))
    for x, y in zip(m, m2):
        assert rel(y, 7.5 * x) < 1e-13


@given(samples())
def test_reciprocal_dual_swaps_means(sample):
    m = compute_means(sample)
    d = compute_means(reciprocal_dual(sample))
    assert rel(d.a, 1 / m.h) < 1e-13
    assert rel(d.g, 1 / m.g) < 1e-13
    assert rel(d.h, 1 / m.a) < 1e-13


@given(samples())
def test_normalize_gives_unit_mean(sample):
    norm, scale = normalize(sample)
    assert compute_means(norm).a == pytest.approx(1.0, rel=1e-14)
    assert scale == pytest.approx(compute_means(sample).a)
