"""Heat invariants a0..a3 of locally homogeneous elliptic three-manifolds.

Forward direction: closed forms in the symmetric polynomials P1, P2, P3 of
the Christoffel triple.  Inverse direction: the invariants give

    A = 3 a1 / a0              = P2
    B = 16 pi^2 / (a0 |Gamma|) = P1 P2 - P3
    C = (27 a1^2 - 30 a0 a2) / (4 a0^2) = P1 P3
    D = 7! a3 / a0

so P1 is a root of q1(x) = A x^2 - B x - C.  Only when A > 0 and C < 0 do
both roots of q1 survive, and D is needed to pick one through a second
polynomial q2 that shares exactly one root with q1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .cubic import real_roots
from .errors import NegativeDiscriminant, NoCommonRoot, NotRealizable, SpectralGeometryError
from .metric import (
    SIXTEEN_PI2,
    ChristoffelTriple,
    MetricEigenvalues,
    _as_christoffel,
    _multisets_close,
    check_order,
    christoffel_to_eigenvalues,
    elementary_symmetric,
    pair_sum_product,
)
from .tolerances import DEFAULT, Tolerances

FACT7 = 5040


@dataclass(frozen=True)
class HeatInvariants:
    a0: float
    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        vals = tuple(float(v) for v in self.as_tuple())
        if not all(math.isfinite(v) for v in vals):
            raise NotRealizable(f"heat invariants must be finite: {vals}")
        if vals[0] <= 0:
            raise NotRealizable(f"a0 is a volume and must be positive, got {vals[0]!r}")
        for name, v in zip(("a0", "a1", "a2", "a3"), vals):
            object.__setattr__(self, name, v)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.a0, self.a1, self.a2, self.a3

    def isclose(self, other: "HeatInvariants", rel: float = DEFAULT.rt) -> bool:
        # a_m has units length^(3-2m); fall back to that scale when a value is ~0
        unit = self.a0 ** (1 / 3)
        for m, (x, y) in enumerate(zip(self.as_tuple(), other.as_tuple())):
            floor = unit ** (3 - 2 * m)
            if abs(x - y) > rel * max(abs(x), abs(y), floor):
                return False
        return True


@dataclass(frozen=True)
class AbcdCoefficients:
    A: float
    B: float
    C: float
    D: float


class Branch(str, enum.Enum):
    A_ZERO = "AZero"
    A_NEGATIVE = "ANegative"
    A_POSITIVE_C_NONNEG = "APositiveCNonneg"
    C_ZERO = "CZero"
    A_POSITIVE_C_NEG_DISTINCT_ROOTS = "APositiveCNegDistinctRoots"
    A_POSITIVE_C_NEG_SHARED_ROOT = "APositiveCNegSharedRoot"
    DISCRIMINANT_ZERO = "DiscriminantZero"

    @property
    def a3_required(self) -> bool:
        return self in (Branch.A_POSITIVE_C_NEG_DISTINCT_ROOTS, Branch.A_POSITIVE_C_NEG_SHARED_ROOT)


@dataclass(frozen=True)
class PRecovery:
    """Outcome of :func:`recover_p`."""

    p1: float
    p2: float
    p3: float
    branch: Branch
    q2_residuals: tuple[float, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def symmetric(self) -> tuple[float, float, float]:
        return self.p1, self.p2, self.p3


@dataclass(frozen=True)
class RecoveryReport:
    christoffel: ChristoffelTriple
    eigenvalues: MetricEigenvalues
    branch: Branch
    a3_required: bool
    degenerate_ricci: bool
    abcd: AbcdCoefficients
    symmetric: tuple[float, float, float]
    q2_residuals: tuple[float, ...] = ()
    warnings: tuple[str, ...] = ()


class Verdict(str, enum.Enum):
    LOCALLY_ISOMETRIC = "LocallyIsometric"
    NOT_LOCALLY_ISOMETRIC = "NotLocallyIsometric"
    INVARIANTS_DIFFER = "InvariantsDiffer"


@dataclass(frozen=True)
class SpectralComparison:
    verdict: Verdict
    diagnostic: str = ""
    reports: tuple[RecoveryReport | None, RecoveryReport | None] = field(default=(None, None), repr=False)


# ----------------------------------------------------------------------------
# forward map


def heat_from_symmetric(p1, p2, p3, a0):
    """(a1, a2, a3) from P and a0; field-generic so it also runs on Fractions."""
    a1 = a0 * p2 / 3
    a2 = a0 * (36 * p2**2 - 48 * p1 * p3) / 360
    a3 = a0 * a3_bracket(p1, p2, p3) / FACT7
    return a1, a2, a3


def a3_bracket(p1, p2, p3):
    return (-240 * p3**2 - 576 * p1 * p2 * p3 + 184 * p2**3
            + 192 * p1**3 * p3 - 48 * p1**2 * p2**2)


def heat_invariants(c, n: int, tol: Tolerances = DEFAULT) -> HeatInvariants:
    c = _as_christoffel(c, tol)
    n = check_order(n)
    a0 = SIXTEEN_PI2 / (n * c.pair_sum_product)
    return HeatInvariants(a0, *heat_from_symmetric(c.p1, c.p2, c.p3, a0))


def exact_heat_coefficients(mu, n: int):
    """Heat invariants divided by pi^2, for exact (e.g. Fraction) Christoffel symbols."""
    n = check_order(n)
    p1, p2, p3 = elementary_symmetric(*mu)
    a0 = 16 / (n * pair_sum_product(mu))
    return (a0, *heat_from_symmetric(p1, p2, p3, a0))


# ----------------------------------------------------------------------------
# inverse map


def abcd(h: HeatInvariants, n: int) -> AbcdCoefficients:
    n = check_order(n)
    a0, a1, a2, a3 = h.as_tuple()
    return AbcdCoefficients(
        A=3 * a1 / a0,
        B=SIXTEEN_PI2 / (a0 * n),
        C=(27 * a1 * a1 - 30 * a0 * a2) / (4 * a0 * a0),
        D=FACT7 * a3 / a0,
    )


def _c_scale(k: AbcdCoefficients) -> float:
    # weight-4 scale in mu, so the test is invariant under rescaling the metric
    return k.A * k.A + k.B ** (4 / 3)


def is_degenerate_ricci(k: AbcdCoefficients, tol: Tolerances = DEFAULT) -> bool:
    """C = P1 P3 vanishes iff some Christoffel symbol (and Ricci eigenvalue) is zero."""
    return abs(k.C) <= tol.c_zero * _c_scale(k)


def q2_coefficients(k: AbcdCoefficients) -> tuple[float, float, float]:
    A, B, C, D = k.A, k.B, k.C, k.D
    return (192 * C - 288 * A * A,
            480 * A * B,
            184 * A**3 - 576 * A * C - 240 * B * B - D)


def q2_relative_residual(x: float, k: AbcdCoefficients) -> float:
    """|q2(x)| over the sum of the magnitudes of its terms."""
    A, B, C, D = k.A, k.B, k.C, k.D
    c2, c1, c0 = q2_coefficients(k)
    value = (c2 * x + c1) * x + c0
    scale = ((192 * abs(C) + 288 * A * A) * x * x + 480 * abs(A * B * x)
             + 184 * abs(A) ** 3 + 576 * abs(A * C) + 240 * B * B + abs(D))
    return abs(value) / scale


def recover_p(k: AbcdCoefficients, tol: Tolerances = DEFAULT) -> PRecovery:
    """Recover (P1, P2, P3) from A, B, C, D following the sign of A and C."""
    A, B, C = k.A, k.B, k.C
    if not B > 0:
        raise NotRealizable(f"B = 16 pi^2 / (a0 |Gamma|) must be positive, got {B!r}")

    def done(p1, branch, residuals=(), warnings=()):
        # P3 = A P1 - B and P3 = C / P1 cancel in different regimes; keep the
        # one with the smaller rounding estimate
        p3 = A * p1 - B
        if p1 != 0 and abs(A * A) + abs(C) < abs(p1) * (abs(A * p1) + abs(B)):
            p3 = C / p1
        return PRecovery(p1, A, p3, branch, tuple(residuals), tuple(warnings))

    if is_degenerate_ricci(k, tol):
        if A <= tol.a_zero * B ** (2 / 3):
            raise NotRealizable(f"degenerate Ricci tensor needs positive scalar curvature, got A={A!r}")
        # P3 = 0 exactly, so P1 = B / A
        p1, p2 = B / A, A
        # dropping C moves P1 by about |C| / A**2, which can push a double
        # root of x^2 - P1 x + P2 slightly complex
        gap = p1 * p1 - 4 * p2
        slack = 4 * tol.c_zero * _c_scale(k) / A + tol.disc * p1 * p1
        if gap < -slack:
            raise NegativeDiscriminant(f"P1^2 - 4 P2 = {gap:.6g} < 0 with P3 = 0")
        if abs(gap) <= slack and gap != 0:
            return PRecovery(p1, p1 * p1 / 4, 0.0, Branch.C_ZERO,
                             warnings=("near-double root snapped after dropping C",))
        return PRecovery(p1, p2, 0.0, Branch.C_ZERO)

    if abs(A) <= tol.a_zero * (B ** (2 / 3) + math.sqrt(abs(C))):
        return done(-C / B, Branch.A_ZERO)

    if A > 0 and C < 0 and abs(C + A * A) <= tol.prop * A * A:
        # q2 is a multiple of q1; the larger root is the metric one
        disc = B * B - 4 * A**3
        if disc < -tol.disc * B * B:
            raise NegativeDiscriminant(f"B^2 - 4A^3 = {disc:.6g} < 0")
        return done((B + math.sqrt(max(disc, 0.0))) / (2 * A), Branch.A_POSITIVE_C_NEG_SHARED_ROOT,
                    warnings=("q2 proportional to q1; larger root of q1 selected",))

    disc = B * B + 4 * A * C
    disc_scale = B * B + 4 * abs(A * C)
    if disc < -tol.disc * disc_scale:
        raise NegativeDiscriminant(f"B^2 + 4AC = {disc:.6g} < 0: no real metric has these invariants")
    sq = math.sqrt(max(disc, 0.0))
    # smaller-magnitude root of q1 without cancellation
    small = -2 * C / (B + sq)

    if A < 0:
        return done(small, Branch.A_NEGATIVE)
    if C >= 0:
        return done((B + sq) / (2 * A), Branch.A_POSITIVE_C_NONNEG)
    if disc <= tol.double_root * disc_scale:
        return done(B / (2 * A), Branch.DISCRIMINANT_ZERO)

    roots = ((B + sq) / (2 * A), small)
    residuals = tuple(q2_relative_residual(x, k) for x in roots)
    passing = [i for i in (0, 1) if residuals[i] <= tol.root]
    if not passing:
        raise NoCommonRoot(
            f"neither root {roots} of q1 is a root of q2 (relative residuals {residuals[0]:.3e}, {residuals[1]:.3e})")
    best = min(passing, key=lambda i: residuals[i])
    if len(passing) == 2:
        return done(roots[best], Branch.A_POSITIVE_C_NEG_SHARED_ROOT, residuals,
                    ("both roots of q1 nearly annihilate q2; smaller residual selected",))
    return done(roots[best], Branch.A_POSITIVE_C_NEG_DISTINCT_ROOTS, residuals)


def symmetric_to_multiset(p1: float, p2: float, p3: float, tol: Tolerances = DEFAULT) -> ChristoffelTriple:
    return ChristoffelTriple(real_roots(p1, p2, p3, tol), tol)


def invert_spectrum(h: HeatInvariants, n: int, tol: Tolerances = DEFAULT) -> RecoveryReport:
    k = abcd(h, n)
    rec = recover_p(k, tol)
    c = symmetric_to_multiset(*rec.symmetric, tol)
    return RecoveryReport(
        christoffel=c,
        eigenvalues=christoffel_to_eigenvalues(c, tol),
        branch=rec.branch,
        a3_required=rec.branch.a3_required,
        degenerate_ricci=rec.branch is Branch.C_ZERO,
        abcd=k,
        symmetric=rec.symmetric,
        q2_residuals=rec.q2_residuals,
        warnings=rec.warnings,
    )


def compare_spectra(h1: HeatInvariants, n1: int, h2: HeatInvariants, n2: int,
                    tol: Tolerances = DEFAULT) -> SpectralComparison:
    """Decide local isometry of two quotients from their first four heat invariants."""
    if not h1.isclose(h2, tol.rt):
        return SpectralComparison(Verdict.INVARIANTS_DIFFER, "heat invariants differ")
    reports = []
    for h, n in ((h1, n1), (h2, n2)):
        try:
            reports.append(invert_spectrum(h, n, tol))
        except SpectralGeometryError as exc:
            if n1 == n2:
                raise
            return SpectralComparison(
                Verdict.NOT_LOCALLY_ISOMETRIC,
                f"no metric of order {n} has these invariants ({exc.code}: {exc})",
            )
    r1, r2 = reports
    if _multisets_close(r1.eigenvalues.values, r2.eigenvalues.values, tol.eq):
        return SpectralComparison(Verdict.LOCALLY_ISOMETRIC, "", (r1, r2))
    return SpectralComparison(
        Verdict.NOT_LOCALLY_ISOMETRIC,
        f"orders {n1} and {n2} yield different metrics",
        (r1, r2),
    )
