import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import ORDERS, PI2, rel_close, valid_mu
from ellipticspec import (
    ChristoffelTriple,
    ExistenceViolated,
    InconsistentCurvature,
    covering_volume,
    curvature_profile,
    principal_curvatures,
    products_from_curvatures,
    recover_from_curvature_and_volume,
    unique_degenerate_metric,
)


@pytest.mark.parametrize("K, products", [
    ((0.25, 0.25, 0.25), (0.25, 0.25, 0.25)),
    ((2, 2, -2), (0, 0, 2)),
    ((1, 1, -1.2), (-0.1, -0.1, 1)),
])
def test_products_from_curvatures(K, products):
    assert products_from_curvatures(K) == pytest.approx(products)


@pytest.mark.parametrize("K, vol, mu", [
    ((0.25, 0.25, 0.25), 16 * PI2, (0.5, 0.5, 0.5)),
    ((1, 1, -1.2), 16 * PI2 / 1.62, (-0.1, 1, 1)),
    ((2, 2, -2), 16 * PI2 / 6, (0, 1, 2)),
])
def test_recover_examples(K, vol, mu):
    assert recover_from_curvature_and_volume(K, vol, 1).mu == pytest.approx(mu, abs=1e-14)


def test_recover_inconsistent():
    with pytest.raises(InconsistentCurvature):
        recover_from_curvature_and_volume((0, 0, 0), 1.0, 1)
    with pytest.raises(InconsistentCurvature):
        # products (0, 1, 2): only one vanishes
        recover_from_curvature_and_volume((3, 1, -1), 1.0, 1)
    with pytest.raises(InconsistentCurvature):
        # products (-1, -1, -1) have a negative product
        recover_from_curvature_and_volume((-1, -1, -1), 1.0, 1)
    with pytest.raises(InconsistentCurvature):
        # curvature of the round sphere, wrong volume
        recover_from_curvature_and_volume((0.25, 0.25, 0.25), 1.0, 1)
    with pytest.raises(InconsistentCurvature):
        # degenerate products whose volume is too large for real roots
        recover_from_curvature_and_volume((2, 2, -2), 1e6, 1)


def test_unique_degenerate_examples():
    assert unique_degenerate_metric(4, 16 * PI2 / 6, 1).mu == pytest.approx((0, 1, 2))
    # beta^2 = 2S: the two nonzero symbols coincide
    S = 2.0
    beta = 2.0
    V = 32 * PI2 / (S * beta)
    assert unique_degenerate_metric(S, V, 1).mu == pytest.approx((0, 1, 1))
    with pytest.raises(ExistenceViolated):
        unique_degenerate_metric(4, 1e6, 1)
    with pytest.raises(ExistenceViolated):
        unique_degenerate_metric(-1, 1, 1)


def _well_conditioned(mu):
    # curvatures fix mu only to about eps * max|mu| / min|mu|
    return min(map(abs, mu)) >= 1e-4 * max(map(abs, mu))


@given(valid_mu(), st.sampled_from(ORDERS))
def test_isocurved_roundtrip(mu, n):
    assume(_well_conditioned(mu))
    c = ChristoffelTriple(mu)
    got = recover_from_curvature_and_volume(principal_curvatures(c), covering_volume(c) / n, n)
    assert rel_close(got.mu, c.mu, 1e-9)


@given(st.floats(0.05, 5), st.floats(0.05, 5), st.sampled_from(ORDERS))
def test_isocurved_roundtrip_degenerate(a, b, n):
    c = ChristoffelTriple((0.0, a, b))
    got = recover_from_curvature_and_volume(principal_curvatures(c), covering_volume(c) / n, n)
    assert rel_close(got.mu, c.mu, 1e-9)
    assert 0.0 in got.mu


@given(valid_mu())
def test_sign_rigidity(mu):
    assume(_well_conditioned(mu))
    c = recover_from_curvature_and_volume(principal_curvatures(mu), covering_volume(mu), 1)
    flipped = tuple(-m for m in c.mu)
    assert sum(flipped) < 0


@given(st.floats(0.1, 10), st.floats(0.1, 1e3), st.sampled_from(ORDERS))
def test_unique_degenerate_forward(S, V, n):
    beta = 32 * PI2 / (S * V * n)
    # keep mu2 / mu3 = S / beta^2 well inside double precision
    assume(beta < 1e3)
    if beta * beta < 2 * S:
        with pytest.raises(ExistenceViolated):
            unique_degenerate_metric(S, V, n)
        return
    c = unique_degenerate_metric(S, V, n)
    assert curvature_profile(c).sc == pytest.approx(S, rel=1e-9)
    assert covering_volume(c) / n == pytest.approx(V, rel=1e-9)
    assert curvature_profile(c).sc > 0
