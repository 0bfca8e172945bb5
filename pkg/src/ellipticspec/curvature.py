"""Closed-form curvature invariants of a left-invariant metric on S^3.

Everything except the principal curvatures and Ricci eigenvalues is a
polynomial in the elementary symmetric polynomials P1, P2, P3 of the
Christoffel triple, which makes every quantity permutation invariant by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .metric import ChristoffelTriple, _as_christoffel
from .tolerances import DEFAULT, Tolerances


@dataclass(frozen=True)
class CurvatureProfile:
    principal: tuple[float, float, float]
    ricci: tuple[float, float, float]
    sc: float
    r2: float
    ric2: float
    rrr: float
    ric_rr: float
    ricric_r: float
    ricricric: float
    grad_r2: float
    grad_ric2: float


def gradient_bracket(p1, p2, p3):
    """Common factor of |grad R|^2 (times 32) and |grad Ric|^2 (times 8)."""
    return -9 * p3**2 - 4 * p1**3 * p3 + p1**2 * p2**2 + 10 * p1 * p2 * p3 - 2 * p2**3


def scalar_curvature(p1, p2, p3):
    return 2 * p2


def norm_r_squared(p1, p2, p3):
    return 12 * p2**2 - 32 * p1 * p3


def norm_ric_squared(p1, p2, p3):
    return 4 * p2**2 - 8 * p1 * p3


def profile_from_symmetric(p1, p2, p3) -> dict:
    """All scalar invariants as a dict; field-generic (float or Fraction)."""
    grad = gradient_bracket(p1, p2, p3)
    return {
        "sc": scalar_curvature(p1, p2, p3),
        "r2": norm_r_squared(p1, p2, p3),
        "ric2": norm_ric_squared(p1, p2, p3),
        "rrr": 8 * (p2**3 - 24 * p3**2),
        "ric_rr": -48 * p3**2 + 8 * p2**3 - 16 * p1 * p2 * p3,
        "ricric_r": 8 * (p1 * p2 * p3 - 6 * p3**2),
        "ricricric": 24 * p3**2 + 8 * p2**3 - 24 * p1 * p2 * p3,
        "grad_r2": 32 * grad,
        "grad_ric2": 8 * grad,
    }


def _products(mu):
    m1, m2, m3 = mu
    return m1 * m2, m1 * m3, m2 * m3


def principal_curvatures(c, tol: Tolerances = DEFAULT) -> tuple[float, float, float]:
    """(K12, K13, K23) sorted; K = [[-1,1,1],[1,-1,1],[1,1,-1]] (mu1mu2, mu1mu3, mu2mu3)."""
    c = _as_christoffel(c, tol)
    p12, p13, p23 = _products(c.mu)
    return tuple(sorted((-p12 + p13 + p23, p12 - p13 + p23, p12 + p13 - p23)))


def ricci_eigenvalues(c, tol: Tolerances = DEFAULT) -> tuple[float, float, float]:
    c = _as_christoffel(c, tol)
    p12, p13, p23 = _products(c.mu)
    return tuple(sorted((2 * p23, 2 * p13, 2 * p12)))


def curvature_profile(c: ChristoffelTriple, tol: Tolerances = DEFAULT) -> CurvatureProfile:
    c = _as_christoffel(c, tol)
    return CurvatureProfile(
        principal=principal_curvatures(c),
        ricci=ricci_eigenvalues(c),
        **profile_from_symmetric(c.p1, c.p2, c.p3),
    )
