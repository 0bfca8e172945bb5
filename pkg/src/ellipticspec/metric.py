"""Left-invariant metrics on S^3 and their Milnor-frame Christoffel symbols.

Metric eigenvalues are measured against the bi-invariant background
``g0 = -1/2 * Killing form`` (the round sphere of radius 2, volume 16*pi^2,
sectional curvature 1/4).  The three Christoffel symbols of a Milnor frame
are related to the eigenvalues by

    eta_i^2 = 1 / ((mu_i + mu_j) * (mu_i + mu_k)),

and the covering volume is ``16*pi^2 / ((mu1+mu2)(mu1+mu3)(mu2+mu3))``.

The small helpers at the top of the module accept any field type
(``float`` or :class:`fractions.Fraction`) so the same closed forms serve
both the floating point path and the exact path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import BadParameters, InvalidChristoffel, InvalidMetric
from .tolerances import DEFAULT, Tolerances

SIXTEEN_PI2 = 16.0 * math.pi**2


def elementary_symmetric(x, y, z):
    return x + y + z, x * y + x * z + y * z, x * y * z


def pair_sums(mu):
    m1, m2, m3 = mu
    return m1 + m2, m1 + m3, m2 + m3


def pair_sum_product(mu):
    """(mu1+mu2)(mu1+mu3)(mu2+mu3), i.e. P1*P2 - P3 without the cancellation."""
    s12, s13, s23 = pair_sums(mu)
    return s12 * s13 * s23


def _close(x: float, y: float, rel: float) -> bool:
    return abs(x - y) <= rel * max(abs(x), abs(y))


def _multisets_close(a: Sequence[float], b: Sequence[float], rel: float) -> bool:
    scale = max(max(abs(v) for v in a), max(abs(v) for v in b))
    return all(abs(x - y) <= rel * max(abs(x), abs(y), scale * rel)
               for x, y in zip(sorted(a), sorted(b)))


class MetricClass(str, enum.Enum):
    CONSTANT_CURVATURE = "ConstantCurvature"
    BERGER_NON_CONSTANT = "BergerNonConstant"
    GENERIC = "Generic"


@dataclass(frozen=True, eq=False)
class MetricEigenvalues:
    """Multiset of metric eigenvalues, kept sorted ascending."""

    values: tuple[float, float, float]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if len(vals) != 3:
            raise InvalidMetric(f"expected three metric eigenvalues, got {len(vals)}")
        if not all(math.isfinite(v) and v > 0 for v in vals):
            raise InvalidMetric(f"metric eigenvalues must be finite and positive: {vals}")
        object.__setattr__(self, "values", tuple(sorted(vals)))

    def isclose(self, other: "MetricEigenvalues", rel: float = DEFAULT.eq) -> bool:
        return all(_close(x, y, rel) for x, y in zip(self.values, other.values))

    def __eq__(self, other):
        if not isinstance(other, MetricEigenvalues):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def __iter__(self):
        return iter(self.values)

    def scaled(self, factor: float) -> "MetricEigenvalues":
        return MetricEigenvalues(tuple(factor * v for v in self.values))


@dataclass(frozen=True, eq=False)
class ChristoffelTriple:
    """Milnor-frame Christoffel symbols with their symmetric polynomials.

    Construction rejects triples with a pairwise sum that is not clearly
    positive, since those correspond to no Riemannian metric.
    """

    mu: tuple[float, float, float]
    tol: Tolerances = field(default=DEFAULT, repr=False)
    p1: float = field(init=False)
    p2: float = field(init=False)
    p3: float = field(init=False)

    def __post_init__(self):
        mu = tuple(sorted(float(m) for m in self.mu))
        if len(mu) != 3 or not all(math.isfinite(m) for m in mu):
            raise InvalidChristoffel(f"expected three finite Christoffel symbols, got {self.mu!r}")
        threshold = self.tol.eq * max(abs(m) for m in mu)
        if min(pair_sums(mu)) <= threshold:
            raise InvalidChristoffel(f"pairwise sums of {mu} must be positive")
        p1, p2, p3 = elementary_symmetric(*mu)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p2", p2)
        object.__setattr__(self, "p3", p3)

    @property
    def symmetric(self) -> tuple[float, float, float]:
        return self.p1, self.p2, self.p3

    @property
    def pair_sum_product(self) -> float:
        return pair_sum_product(self.mu)

    def isclose(self, other: "ChristoffelTriple", rel: float = DEFAULT.eq) -> bool:
        return _multisets_close(self.mu, other.mu, rel)

    def __eq__(self, other):
        if not isinstance(other, ChristoffelTriple):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def __iter__(self):
        return iter(self.mu)


def _as_eigenvalues(e) -> MetricEigenvalues:
    return e if isinstance(e, MetricEigenvalues) else MetricEigenvalues(tuple(e))


def _as_christoffel(c, tol: Tolerances = DEFAULT) -> ChristoffelTriple:
    return c if isinstance(c, ChristoffelTriple) else ChristoffelTriple(tuple(c), tol)


def christoffel_from_squares(eta_sq, eta_product):
    """mu_i = (eta_j^2 + eta_k^2 - eta_i^2) / (2 eta1 eta2 eta3); field-generic."""
    x, y, z = eta_sq
    two_prod = 2 * eta_product
    return ((y + z - x) / two_prod, (x + z - y) / two_prod, (x + y - z) / two_prod)


def eigenvalues_from_christoffel(mu):
    """Field-generic inverse of :func:`christoffel_from_squares`."""
    s12, s13, s23 = pair_sums(mu)
    return 1 / (s12 * s13), 1 / (s12 * s23), 1 / (s13 * s23)


def eigenvalues_to_christoffel(e, tol: Tolerances = DEFAULT) -> ChristoffelTriple:
    e = _as_eigenvalues(e)
    eta_product = math.sqrt(e.values[0] * e.values[1] * e.values[2])
    return ChristoffelTriple(christoffel_from_squares(e.values, eta_product), tol)


def christoffel_to_eigenvalues(c, tol: Tolerances = DEFAULT) -> MetricEigenvalues:
    c = _as_christoffel(c, tol)
    return MetricEigenvalues(eigenvalues_from_christoffel(c.mu))


def covering_volume(c, tol: Tolerances = DEFAULT) -> float:
    """Volume of the left-invariant metric on S^3 (quotient volume times |Gamma|)."""
    c = _as_christoffel(c, tol)
    return SIXTEEN_PI2 / c.pair_sum_product


def classify_metric(e, tol: Tolerances = DEFAULT) -> MetricClass:
    x, y, z = _as_eigenvalues(e).values
    equal_pairs = sum(_close(a, b, tol.eq) for a, b in ((x, y), (y, z), (x, z)))
    if equal_pairs == 3 or (_close(x, y, tol.eq) and _close(y, z, tol.eq)):
        return MetricClass.CONSTANT_CURVATURE
    if equal_pairs:
        return MetricClass.BERGER_NON_CONSTANT
    return MetricClass.GENERIC


def check_order(n) -> int:
    """Validate a fundamental-group order |Gamma|."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise BadParameters(f"group order must be a positive integer, got {n!r}")
    return n


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if it is irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def exact_christoffel(eta_sq) -> tuple[Fraction, Fraction, Fraction] | None:
    """Christoffel symbols of rational eigenvalues, when eta1 eta2 eta3 is rational."""
    eta_sq = tuple(Fraction(v) for v in eta_sq)
    root = rational_sqrt(eta_sq[0] * eta_sq[1] * eta_sq[2])
    if root is None or root == 0:
        return None
    return christoffel_from_squares(eta_sq, root)
