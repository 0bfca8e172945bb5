"""Left-invariant metrics from principal curvatures and volume.

The principal curvatures K = (K12, K13, K23) are linear in the pairwise
products of Christoffel symbols, so the products are recovered by a 3x3
solve.  Away from degenerate Ricci tensors the products fix the mu's up to a
common sign; with a zero Christoffel symbol two products vanish and the
volume supplies the missing equation.
"""

from __future__ import annotations

import math

from .cubic import _EPS, SNAP_DOUBLE
from .errors import BadParameters, ExistenceViolated, InconsistentCurvature
from .metric import SIXTEEN_PI2, ChristoffelTriple, check_order, pair_sums
from .tolerances import DEFAULT, Tolerances


def products_from_curvatures(K) -> tuple[float, float, float]:
    """(mu1 mu2, mu1 mu3, mu2 mu3) from (K12, K13, K23)."""
    k12, k13, k23 = (float(k) for k in K)
    return (k13 + k23) / 2, (k12 + k23) / 2, (k12 + k13) / 2


def _check_positive(name, value, exc=BadParameters):
    if not (math.isfinite(value) and value > 0):
        raise exc(f"{name} must be finite and positive, got {value!r}")


def _sqrt_disc(disc, scale):
    # a discriminant within rounding noise of zero is a double root
    if disc <= SNAP_DOUBLE * _EPS * scale:
        return 0.0
    return math.sqrt(disc)


def _nondegenerate(p12, p13, p23, tol):
    if p12 * p13 * p23 <= 0:
        raise InconsistentCurvature(
            f"products {(p12, p13, p23)} have a non-positive product, so mu1 mu2 mu3 is not real")
    m1 = math.sqrt(p12 * p13 / p23)
    m2 = math.sqrt(p12 * p23 / p13)
    m3 = math.sqrt(p13 * p23 / p12)
    # signs of mu2, mu3 relative to mu1 come from the signs of p12, p13
    base = (m1, math.copysign(m2, p12), math.copysign(m3, p13))
    for sign in (1, -1):
        mu = tuple(sign * m for m in base)
        if min(pair_sums(mu)) > tol.eq * max(m1, m2, m3):
            return mu
    raise InconsistentCurvature(f"no sign choice for |mu| = {(m1, m2, m3)} gives positive pairwise sums")


def recover_from_curvature_and_volume(K, vol: float, n: int, tol: Tolerances = DEFAULT) -> ChristoffelTriple:
    """Christoffel triple with principal curvatures ``K`` and quotient volume ``vol``."""
    n = check_order(n)
    vol = float(vol)
    _check_positive("volume", vol)
    products = products_from_curvatures(K)
    biggest = max(abs(p) for p in products)
    small = [abs(p) <= tol.deg * biggest for p in products]
    if biggest == 0 or sum(small) in (1, 3):
        raise InconsistentCurvature(
            f"curvature products {products} cannot come from a real Christoffel triple")

    covering = vol * n
    if not any(small):
        c = ChristoffelTriple(_nondegenerate(*products, tol), tol)
        if abs(SIXTEEN_PI2 / c.pair_sum_product - covering) > tol.consistency * covering:
            raise InconsistentCurvature(
                f"curvatures determine covering volume {SIXTEEN_PI2 / c.pair_sum_product!r}, "
                f"but vol * n = {covering!r}")
        return c

    # one Christoffel symbol vanishes: P3 = 0, P2 = the surviving product
    p2 = next(p for p, s in zip(products, small) if not s)
    if p2 <= 0:
        raise InconsistentCurvature(f"degenerate Ricci tensor needs mu2 mu3 > 0, got {p2!r}")
    p1 = SIXTEEN_PI2 / (covering * p2)
    disc = p1 * p1 - 4 * p2
    if disc < -tol.disc * p1 * p1:
        raise InconsistentCurvature(
            f"x^2 - {p1!r} x + {p2!r} has no real roots; volume and curvature disagree")
    sq = _sqrt_disc(disc, p1 * p1)
    big = (p1 + sq) / 2
    return ChristoffelTriple((0.0, p2 / big, big), tol)


def unique_degenerate_metric(S: float, V: float, n: int, tol: Tolerances = DEFAULT) -> ChristoffelTriple:
    """The left-invariant metric with degenerate Ricci tensor, scalar curvature S and quotient volume V."""
    n = check_order(n)
    S, V = float(S), float(V)
    _check_positive("scalar curvature", S, ExistenceViolated)
    _check_positive("volume", V)
    beta = 2 * SIXTEEN_PI2 / (S * V * n)
    disc = beta * beta - 2 * S
    if disc < -tol.disc * beta * beta:
        raise ExistenceViolated(
            f"(32 pi^2 / (S V n))^2 = {beta * beta!r} < 2 S = {2 * S!r}: no such metric")
    sq = _sqrt_disc(disc, beta * beta)
    # smaller root S / (beta + sq) avoids cancellation in (beta - sq) / 2
    return ChristoffelTriple((0.0, S / (beta + sq), (beta + sq) / 2), tol)
