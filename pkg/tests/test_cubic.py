import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rel_close
from ellipticspec.cubic import discriminant, real_roots
from ellipticspec.errors import ComplexRoots
from ellipticspec.metric import elementary_symmetric


@pytest.mark.parametrize("P, roots", [
    ((1.5, 0.75, 0.125), (0.5, 0.5, 0.5)),
    ((3, 2, 0), (0, 1, 2)),
    ((1.9, 0.8, -0.1), (-0.1, 1, 1)),
    ((0, 0, 0), (0, 0, 0)),
    ((6, 11, 6), (1, 2, 3)),
    ((-3, 3, -1), (-1, -1, -1)),
])
def test_examples(P, roots):
    assert real_roots(*P) == pytest.approx(roots, abs=1e-14)


def test_double_root_is_exact():
    # perturbations of size eps would split a double root by ~1e-8 without snapping
    r = real_roots(1.9, 0.8, -0.1)
    assert r[1] == r[2]


def test_complex_roots_rejected():
    with pytest.raises(ComplexRoots):
        real_roots(1, 0.2, -0.2)  # (x^2 + 0.2)(x - 1)
    with pytest.raises(ComplexRoots):
        real_roots(0, 1, 0)  # x^3 + x


def test_discriminant_matches_root_differences():
    a, b, c = 0.3, -1.2, 2.5
    P = elementary_symmetric(a, b, c)
    assert discriminant(*P) == pytest.approx(((a - b) * (a - c) * (b - c)) ** 2)


# products of three roots must not underflow, or P no longer describes them
finite = st.floats(-5, 5, allow_nan=False).filter(lambda x: x == 0 or abs(x) > 1e-90)


@given(finite, finite, finite)
def test_recovers_random_roots(a, b, c):
    P = elementary_symmetric(a, b, c)
    roots = real_roots(*P)
    spread = max(a, b, c) - min(a, b, c)
    scale = max(abs(a), abs(b), abs(c), 1e-300)
    # well separated roots are recovered to near machine precision
    if spread > 1e-3 * scale and min(abs(a - b), abs(a - c), abs(b - c)) > 1e-3 * spread:
        assert rel_close(roots, (a, b, c), 1e-10)
    for r in roots:
        assert abs(((r - P[0]) * r + P[1]) * r - P[2]) <= 1e-9 * scale**3 + 1e-300


@given(finite, st.floats(0.01, 5))
def test_double_roots(a, gap):
    P = elementary_symmetric(a, a + gap, a + gap)
    roots = real_roots(*P)
    assert rel_close(roots, (a, a + gap, a + gap), 1e-12 * max(1, abs(a) + gap) / gap)


def test_tiny_scale_is_not_merged():
    roots = real_roots(*elementary_symmetric(0.0, 0.0, 1.4364804076507816e-60))
    assert roots == (0.0, 0.0, 1.4364804076507816e-60)


@pytest.mark.parametrize("gap", [1e-3, 1e-5, 1e-7])
def test_close_pair_accuracy(gap):
    # exact P, rounded once; the pair then moves by about eps / gap
    roots = (Fraction(1), 1 + Fraction(gap), Fraction(-3, 2))
    P = [float(x) for x in elementary_symmetric(*roots)]
    got = real_roots(*P)
    want = sorted(float(r) for r in roots)
    assert max(abs(a - b) for a, b in zip(got, want)) <= 50 * 2.0**-52 / gap
