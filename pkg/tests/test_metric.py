import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PI2, rel_close, valid_eigenvalues, valid_mu
from ellipticspec import (
    ChristoffelTriple,
    InvalidChristoffel,
    InvalidMetric,
    MetricClass,
    MetricEigenvalues,
    christoffel_to_eigenvalues,
    classify_metric,
    covering_volume,
    eigenvalues_to_christoffel,
)
from ellipticspec.metric import exact_christoffel, rational_sqrt


@pytest.mark.parametrize("eta_sq, mu", [
    ((1, 1, 1), (0.5, 0.5, 0.5)),
    ((4, 1, 1), (-0.5, 1, 1)),
    ((0.5, 1 / 3, 1 / 6), (0, 1, 2)),
])
def test_eigenvalues_to_christoffel_examples(eta_sq, mu):
    c = eigenvalues_to_christoffel(eta_sq)
    assert c.mu == pytest.approx(mu, abs=1e-15)
    assert christoffel_to_eigenvalues(mu).values == pytest.approx(sorted(eta_sq), rel=1e-15)


def test_symmetric_polynomials_of_round_sphere():
    c = eigenvalues_to_christoffel((1, 1, 1))
    assert c.symmetric == pytest.approx((1.5, 0.75, 0.125))


@pytest.mark.parametrize("mu, volume", [
    ((0.5, 0.5, 0.5), 16 * PI2),
    ((-0.5, 1, 1), 32 * PI2),
    ((0, 1, 2), 16 * PI2 / 6),
])
def test_covering_volume(mu, volume):
    assert covering_volume(mu) == pytest.approx(volume, rel=1e-15)


def test_covering_volume_matches_eigenvalue_product():
    # vol(g) = eta1 eta2 eta3 vol(g0)
    e = (0.3, 1.7, 2.9)
    c = eigenvalues_to_christoffel(e)
    assert covering_volume(c) == pytest.approx(16 * PI2 * math.sqrt(0.3 * 1.7 * 2.9), rel=1e-14)


@pytest.mark.parametrize("e, tag", [
    ((1, 1, 1), MetricClass.CONSTANT_CURVATURE),
    ((4, 1, 1), MetricClass.BERGER_NON_CONSTANT),
    ((0.5, 1 / 3, 1 / 6), MetricClass.GENERIC),
    ((1, 1 + 1e-12, 1), MetricClass.CONSTANT_CURVATURE),
    ((1, 1 + 1e-6, 1), MetricClass.BERGER_NON_CONSTANT),
])
def test_classify_metric(e, tag):
    assert classify_metric(e) is tag


@pytest.mark.parametrize("bad", [(1, 1, 0), (1, -1, 2), (1, 2), (1, math.nan, 1), (1, math.inf, 1)])
def test_invalid_eigenvalues(bad):
    with pytest.raises(InvalidMetric):
        MetricEigenvalues(bad)


@pytest.mark.parametrize("bad", [(1, -1, 2), (-1, -1, 3), (0, 0, 1), (-0.5, 0.5 + 1e-12, 3)])
def test_invalid_christoffel(bad):
    with pytest.raises(InvalidChristoffel):
        ChristoffelTriple(bad)


def test_multiset_equality_is_tolerant_and_order_free():
    assert MetricEigenvalues((3, 1, 2)) == MetricEigenvalues((1, 2, 3 * (1 + 1e-12)))
    assert MetricEigenvalues((3, 1, 2)) != MetricEigenvalues((1, 2, 3.001))
    assert ChristoffelTriple((2, 0, 1)) == ChristoffelTriple((0, 1, 2))


def test_exact_christoffel():
    assert exact_christoffel((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))) == (0, 1, 2)
    assert exact_christoffel((2, 1, 1)) is None
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None


@given(valid_eigenvalues())
def test_roundtrip(e):
    back = christoffel_to_eigenvalues(eigenvalues_to_christoffel(e))
    assert all(math.isclose(x, y, rel_tol=1e-12) for x, y in zip(back.values, sorted(e)))


@given(valid_eigenvalues(1e-3, 1e3))
def test_roundtrip_wide_range(e):
    # pair sums cancel against |mu| ~ max(e) / sqrt(prod(e)), costing digits
    back = christoffel_to_eigenvalues(eigenvalues_to_christoffel(e))
    assert all(math.isclose(x, y, rel_tol=1e-9) for x, y in zip(back.values, sorted(e)))


@given(valid_mu())
def test_pairwise_positive_implies_positive_p1_and_eigenvalues(mu):
    c = ChristoffelTriple(mu)
    assert c.p1 > 0
    assert min(christoffel_to_eigenvalues(c).values) > 0


@given(valid_eigenvalues(), st.floats(0.01, 100))
def test_scaling(e, lam):
    c = eigenvalues_to_christoffel(e)
    scaled = eigenvalues_to_christoffel(tuple(lam * v for v in e))
    assert rel_close(scaled.mu, [m / math.sqrt(lam) for m in c.mu], 1e-12)
    assert math.isclose(covering_volume(scaled), lam**1.5 * covering_volume(c), rel_tol=1e-12)


@given(valid_eigenvalues(), st.permutations(range(3)))
def test_permutation_invariance(e, perm):
    permuted = tuple(e[i] for i in perm)
    assert eigenvalues_to_christoffel(permuted).mu == eigenvalues_to_christoffel(e).mu
    assert classify_metric(permuted) is classify_metric(e)
