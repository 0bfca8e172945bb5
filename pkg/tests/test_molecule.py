import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PI2
from ellipticspec import MetricClass, MomentsOfInertia, classify_metric, moments_to_eigenvalues, recover_moments, rotational_invariants
from ellipticspec.errors import InvalidMetric


@pytest.mark.parametrize("I, eta_sq", [
    ((1, 1, 1), (2, 2, 2)),
    ((1, 2, 3), (2 / 3, 1, 2)),
    ((2, 2, 2), (1, 1, 1)),
])
def test_moments_to_eigenvalues(I, eta_sq):
    assert moments_to_eigenvalues(I).values == pytest.approx(eta_sq)


def test_rotational_invariants_examples():
    assert rotational_invariants((1, 1, 1)).a0 == pytest.approx(16 * math.sqrt(2) * PI2)
    h = rotational_invariants((2, 2, 2))
    assert (h.a0, h.a1) == pytest.approx((8 * PI2, 2 * PI2))


def test_rotational_invariants_asymmetric_top():
    # Gilkey's local formulas on the Koszul connection of eta^2 = (2, 1, 2/3), halved for SO(3)
    expected = (91.1715001242249, 14.562114603174807, 4.124613438779678, -0.8131976960889661)
    assert rotational_invariants((1, 2, 3)).as_tuple() == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("I", [(1, 1, 1), (1, 2, 3), (2, 2, 2), (1, 1, 5), (0.5, 3, 3)])
def test_recover_examples(I):
    assert recover_moments(rotational_invariants(I)).values == pytest.approx(sorted(I), rel=1e-12)


def test_invalid_moments():
    with pytest.raises(InvalidMetric):
        MomentsOfInertia((1, 0, 2))


moment = st.floats(0.1, 10)


@st.composite
def bodies(draw):
    kind = draw(st.sampled_from(["spherical", "symmetric", "asymmetric"]))
    a = draw(moment)
    if kind == "spherical":
        return (a, a, a)
    b = draw(moment.filter(lambda b: abs(b - a) > 1e-3 * max(a, b)))
    if kind == "symmetric":
        return (a, a, b)
    c = draw(moment.filter(lambda c: min(abs(c - a), abs(c - b)) > 1e-3 * max(a, b, c)))
    return (a, b, c)


@given(bodies())
def test_moments_roundtrip(I):
    back = recover_moments(rotational_invariants(I))
    assert all(math.isclose(x, y, rel_tol=1e-9) for x, y in zip(back.values, sorted(I)))


@given(bodies())
def test_body_class(I):
    distinct = len({round(v, 12) for v in I})
    expected = {1: MetricClass.CONSTANT_CURVATURE, 2: MetricClass.BERGER_NON_CONSTANT, 3: MetricClass.GENERIC}
    assert classify_metric(moments_to_eigenvalues(I)) is expected[distinct]
