"""Real roots of the monic cubic x^3 - P1 x^2 + P2 x - P3.

Every cubic reaching this module comes from a real Christoffel triple, so it
has three real roots and the trigonometric method applies.  Multiple roots
are ill-conditioned (a perturbation of size eps splits a double root by
about sqrt(eps)), so near-multiple roots are snapped to the exact
double/triple root formulas before Newton polishing.
"""

from __future__ import annotations

import math

from .errors import ComplexRoots
from .tolerances import DEFAULT, Tolerances

_EPS = 2.0**-52
# multiples of the estimated rounding noise inside which roots are merged
SNAP_DOUBLE = 1e4
# relative gap below which the closest pair is recomputed by deflation
CLOSE_PAIR = 1e-2
# relative (P1^2 - 3 P2) below which all three roots are merged
SNAP_TRIPLE = 1e-12


def discriminant(p1, p2, p3):
    return (p1**2 * p2**2 - 4 * p2**3 - 4 * p1**3 * p3
            + 18 * p1 * p2 * p3 - 27 * p3**2)


def _discriminant_scale(p1, p2, p3):
    return (p1**2 * p2**2 + 4 * abs(p2)**3 + 4 * abs(p1**3 * p3)
            + 18 * abs(p1 * p2 * p3) + 27 * p3**2)


def _residual(x, p1, p2, p3):
    return ((x - p1) * x + p2) * x - p3


def _polish(x, p1, p2, p3, steps=2):
    # Newton steps, kept only while they reduce the residual
    f = _residual(x, p1, p2, p3)
    for _ in range(steps):
        df = (3 * x - 2 * p1) * x + p2
        if df == 0 or f == 0:
            break
        y = x - f / df
        g = _residual(y, p1, p2, p3)
        if abs(g) >= abs(f):
            break
        x, f = y, g
    return x


def real_roots(p1: float, p2: float, p3: float,
               tol: Tolerances = DEFAULT) -> tuple[float, float, float]:
    """Sorted real roots; raises ComplexRoots when the discriminant is clearly negative."""
    # rescale x by a power of two so the roots are of order one; this is exact
    size = max(abs(p1), math.sqrt(abs(p2)), abs(p3) ** (1 / 3))
    if size == 0:
        return 0.0, 0.0, 0.0
    e = math.frexp(size)[1]
    if e != 0:
        roots = _real_roots(math.ldexp(p1, -e), math.ldexp(p2, -2 * e), math.ldexp(p3, -3 * e), tol)
        return tuple(math.ldexp(r, e) for r in roots)
    return _real_roots(p1, p2, p3, tol)


def _real_roots(p1, p2, p3, tol):
    delta = discriminant(p1, p2, p3)
    scale = _discriminant_scale(p1, p2, p3)
    if delta < -tol.disc * scale:
        raise ComplexRoots(f"cubic with P=({p1!r}, {p2!r}, {p3!r}) has complex roots (discriminant {delta:.3e})")

    spread = p1 * p1 - 3 * p2  # half the sum of squared root differences
    size = p1 * p1 + 3 * abs(p2)
    if spread <= SNAP_TRIPLE * size:
        r = p1 / 3
        return r, r, r

    # depressed cubic t^3 + p t + q with x = t + P1/3
    shift = p1 / 3
    p = -spread / 3
    q = -2 * p1**3 / 27 + p1 * p2 / 3 - p3
    cube = -4 * p**3
    if cube == 0:  # roots are of order one here, so this means they coincide
        r = p1 / 3
        return r, r, r
    arg_sq = 27 * q * q / cube
    # 1 - arg^2 is the discriminant relative to its largest possible value;
    # compare it with the noise carried over from rounding in p and q
    if q != 0:
        q_terms = 2 * abs(p1)**3 / 27 + abs(p1 * p2) / 3 + abs(p3)
        noise = arg_sq * _EPS * (2 * q_terms / abs(q) + size / spread)
        if 1 - arg_sq <= SNAP_DOUBLE * noise:
            double = _polish_double(shift - 1.5 * q / p, p1, p2)
            return tuple(sorted((p1 - 2 * double, double, double)))

    m = 2 * math.sqrt(-p / 3)
    arg = 3 * q / (p * m)
    if abs(arg) > 1:
        if abs(arg) - 1 > tol.clamp:
            raise ComplexRoots(f"arccos argument {arg!r} out of range for P=({p1!r}, {p2!r}, {p3!r})")
        arg = math.copysign(1.0, arg)
    theta = math.acos(arg) / 3
    roots = sorted(_polish(shift + m * math.cos(theta - 2 * math.pi * k / 3), p1, p2, p3) for k in range(3))
    return _split_close_pair(roots, p1, p2, p3)


def _split_close_pair(roots, p1, p2, p3):
    # The arccos loses accuracy when two roots nearly coincide.  The third
    # root is well conditioned, so recover the pair from x^2 - s x + prod.
    lo, mid, hi = roots
    if min(mid - lo, hi - mid) > CLOSE_PAIR * (hi - lo):
        return tuple(roots)
    iso = hi if mid - lo < hi - mid else lo
    s = p1 - iso
    prod = p2 - iso * s
    if iso != 0 and abs(p3 / iso) < abs(p2) + abs(iso * s):
        prod = p3 / iso
    half = math.sqrt(max(s * s / 4 - prod, 0.0))
    big = s / 2 + math.copysign(half, s)
    small = prod / big if big else s / 2 - half
    return tuple(sorted((iso, big, small)))


def _polish_double(r, p1, p2):
    # a double root is a simple root of the derivative 3x^2 - 2 P1 x + P2
    for _ in range(2):
        d = 6 * r - 2 * p1
        if d == 0:
            break
        r -= ((3 * r - 2 * p1) * r + p2) / d
    return r
