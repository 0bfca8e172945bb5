"""Finite subgroups of SO(4) acting freely on S^3 and the quotients they give.

Groups are parameter records in the Seifert-Threlfall normal form (Types
I-VI); nothing here builds actual matrices.  ``quotient_structure`` answers
how many isometry classes of locally homogeneous metrics on Gamma\\S^3 a
given left-invariant metric on S^3 covers, and which of them are
homogeneous.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

from .errors import BadParameters
from .metric import MetricClass


def _positive(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise BadParameters(f"{name} must be a positive integer, got {value!r}")


def _coprime(q, m, what):
    if math.gcd(q, m) != 1:
        raise BadParameters(f"q={q} must be coprime to {what}={m}")


@dataclass(frozen=True)
class TypeI:
    """Cyclic group Gamma_{q;1,p}; the quotient is the lens space L(q;1,p)."""

    q: int
    p: int = 1

    def __post_init__(self):
        _positive("q", self.q)
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise BadParameters(f"p must be an integer, got {self.p!r}")
        _coprime(self.q, self.p, "p")
        object.__setattr__(self, "p", self.p % self.q)

    @property
    def order(self) -> int:
        return self.q

    @property
    def lens_key(self) -> int:
        """Smallest representative of p up to sign and inversion mod q."""
        if self.q <= 2:
            return self.p
        inv = pow(self.p, -1, self.q)
        return min(self.p, self.q - self.p, inv, self.q - inv)


@dataclass(frozen=True)
class TypeII:
    n: int
    k: int
    q: int = 1

    def __post_init__(self):
        for name in ("n", "k", "q"):
            _positive(name, getattr(self, name))
        if self.n < 3 or self.n % 2 == 0:
            raise BadParameters(f"Type II needs n >= 3 odd, got n={self.n}")
        if self.k < 3:
            raise BadParameters(f"Type II needs k >= 3, got k={self.k}")
        _coprime(self.q, 2 * self.n, "2n")

    @property
    def order(self) -> int:
        return 2**self.k * self.n * self.q


@dataclass(frozen=True)
class TypeIII:
    n: int
    q: int = 1

    def __post_init__(self):
        _positive("n", self.n)
        _positive("q", self.q)
        if self.n < 2:
            raise BadParameters(f"Type III needs n >= 2, got n={self.n}")
        _coprime(self.q, 2 * self.n, "2n")

    @property
    def order(self) -> int:
        return 4 * self.n * self.q


@dataclass(frozen=True)
class TypeIV:
    k: int
    q: int = 1

    def __post_init__(self):
        _positive("k", self.k)
        _positive("q", self.q)
        _coprime(self.q, 6, "6")

    @property
    def order(self) -> int:
        return 8 * 3**self.k * self.q


@dataclass(frozen=True)
class TypeV:
    q: int = 1

    def __post_init__(self):
        _positive("q", self.q)
        _coprime(self.q, 6, "6")

    @property
    def order(self) -> int:
        return 48 * self.q


@dataclass(frozen=True)
class TypeVI:
    q: int = 1

    def __post_init__(self):
        _positive("q", self.q)
        _coprime(self.q, 30, "30")

    @property
    def order(self) -> int:
        return 120 * self.q


EllipticGroup = TypeI | TypeII | TypeIII | TypeIV | TypeV | TypeVI

_TYPES = {"I": TypeI, "II": TypeII, "III": TypeIII, "IV": TypeIV, "V": TypeV, "VI": TypeVI}


def parse_group(text: str) -> EllipticGroup:
    """Parse ``"I:5,2"``, ``"III:2,1"``, ``"VI:7"`` and the like."""
    m = re.fullmatch(r"\s*(?:Type)?(I|II|III|IV|V|VI)\s*(?::\s*([-\d,\s]*))?\s*", text)
    if not m:
        raise BadParameters(f"cannot parse group {text!r}; expected e.g. I:5,2 or VI:7")
    params = [s.strip() for s in (m.group(2) or "").split(",") if s.strip()]
    try:
        args = [int(s) for s in params]
    except ValueError:
        raise BadParameters(f"group parameters must be integers: {text!r}") from None
    try:
        return _TYPES[m.group(1)](*args)
    except TypeError:
        raise BadParameters(f"wrong number of parameters for Type {m.group(1)}: {text!r}") from None


def group_label(g: EllipticGroup) -> str:
    name = type(g).__name__.removeprefix("Type")
    fields = {TypeI: ("q", "p"), TypeII: ("n", "k", "q"), TypeIII: ("n", "q"),
              TypeIV: ("k", "q"), TypeV: ("q",), TypeVI: ("q",)}[type(g)]
    return f"{name}:" + ",".join(str(getattr(g, f)) for f in fields)


def group_order(g: EllipticGroup) -> int:
    return g.order


def lens_diffeomorphic(q: int, p1: int, p2: int) -> bool:
    """L(q;1,p1) and L(q;1,p2) are diffeomorphic iff p2 = +-p1 or +-p1^-1 mod q."""
    _positive("q", q)
    for p in (p1, p2):
        if math.gcd(p, q) != 1:
            raise BadParameters(f"p={p} is not a unit mod q={q}")
    if q <= 2:
        return True
    a, b = p1 % q, p2 % q
    inv = pow(a, -1, q)
    return b in {a, q - a, inv, q - inv}


class IsometryLabel(str, enum.Enum):
    FULL_O4 = "FullO4"
    BERGER_PAIR = "BergerPair"
    GENERIC_FOUR = "GenericFour"


class ComponentLabel(str, enum.Enum):
    SO4 = "SO4"
    S3_X_S1 = "S3xS1"
    S3_X_PM1 = "S3xPm1"


@dataclass(frozen=True)
class IsometryGroupDescriptor:
    label: IsometryLabel
    component_label: ComponentLabel


_DESCRIPTORS = {
    MetricClass.CONSTANT_CURVATURE: IsometryGroupDescriptor(IsometryLabel.FULL_O4, ComponentLabel.SO4),
    MetricClass.BERGER_NON_CONSTANT: IsometryGroupDescriptor(IsometryLabel.BERGER_PAIR, ComponentLabel.S3_X_S1),
    MetricClass.GENERIC: IsometryGroupDescriptor(IsometryLabel.GENERIC_FOUR, ComponentLabel.S3_X_PM1),
}


def isometry_group_descriptor(m: MetricClass) -> IsometryGroupDescriptor:
    return _DESCRIPTORS[MetricClass(m)]


@dataclass(frozen=True)
class QuotientStructure:
    class_count: int
    homogeneous_flags: tuple[bool, ...]
    centralizer_descriptor: str
    notes: str = ""


class Row(str, enum.Enum):
    TRIVIAL_OR_Z2 = "trivial_or_z2"
    LENS_GENERAL = "lens_p_not_pm1"
    LENS_PM1 = "lens_p_pm1"
    TYPE_II_VI = "type_ii_vi"
    BINARY = "binary"


def table_row(g: EllipticGroup) -> Row:
    if isinstance(g, TypeI):
        if g.q <= 2:
            return Row.TRIVIAL_OR_Z2
        if g.p in (1, g.q - 1):
            return Row.LENS_PM1
        return Row.LENS_GENERAL
    binary = (
        (isinstance(g, TypeIII) and g.q == 1)
        or (isinstance(g, TypeIV) and g.k == 1 and g.q == 1)
        or (isinstance(g, (TypeV, TypeVI)) and g.q == 1)
    )
    return Row.BINARY if binary else Row.TYPE_II_VI


_CC, _BN, _GE = MetricClass.CONSTANT_CURVATURE, MetricClass.BERGER_NON_CONSTANT, MetricClass.GENERIC
_NONE = QuotientStructure(0, (), "none")
_BINARY_NOTE = "1xS3 centralizes Gamma and acts transitively, so this class is in fact homogeneous"

# Centralizer labels are the identity component of the centralizer of Gamma in
# Isom(S^3, g)^o, written as a pair of factors of S^3 x S^3.
_TABLE = {
    (Row.TRIVIAL_OR_Z2, _CC): QuotientStructure(1, (True,), "S3xS3"),
    (Row.TRIVIAL_OR_Z2, _BN): QuotientStructure(1, (True,), "S3xS1"),
    (Row.TRIVIAL_OR_Z2, _GE): QuotientStructure(1, (True,), "S3x1"),
    (Row.LENS_GENERAL, _CC): QuotientStructure(1, (False,), "S1xS1"),
    (Row.LENS_GENERAL, _BN): QuotientStructure(2, (False, False), "S1xS1;S1xS1"),
    (Row.LENS_GENERAL, _GE): _NONE,
    # LENS_PM1 constant curvature depends on the sign of p; see quotient_structure
    (Row.LENS_PM1, _BN): QuotientStructure(2, (True, False), "S3xS1;S1xS1"),
    (Row.LENS_PM1, _GE): QuotientStructure(1, (False,), "S1x1"),
    (Row.TYPE_II_VI, _CC): QuotientStructure(1, (False,), "1xS1"),
    (Row.TYPE_II_VI, _BN): QuotientStructure(1, (False,), "1xS1"),
    (Row.TYPE_II_VI, _GE): _NONE,
    (Row.BINARY, _CC): QuotientStructure(1, (False,), "1xS3", _BINARY_NOTE),
    (Row.BINARY, _BN): QuotientStructure(1, (False,), "1xS1"),
    (Row.BINARY, _GE): QuotientStructure(1, (False,), "1x1"),
}


def quotient_structure(g: EllipticGroup, m: MetricClass) -> QuotientStructure:
    """Isometry classes on Gamma\\S^3 covered by a left-invariant metric of class ``m``."""
    if not isinstance(g, (TypeI, TypeII, TypeIII, TypeIV, TypeV, TypeVI)):
        raise BadParameters(f"not an elliptic group: {g!r}")
    try:
        m = MetricClass(m)
    except ValueError:
        raise BadParameters(f"unknown metric class {m!r}") from None
    row = table_row(g)
    if row is Row.LENS_PM1 and m is _CC:
        # Gamma_{q;1,-1} commutes with S^3 x S^1, Gamma_{q;1,1} with S^1 x S^3
        return QuotientStructure(1, (True,), "S3xS1" if g.p == g.q - 1 else "S1xS3")
    return _TABLE[row, m]
