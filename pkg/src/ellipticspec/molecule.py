"""Rigid bodies as left-invariant metrics on SO(3).

A body with principal moments I1, I2, I3 has kinetic energy metric
-B(I., .) on so(3), with B the Killing form.  Against the background
g0 = -1/2 B used everywhere else in the package this has eigenvalues
eta_j^2 = 2 / I_j.  The configuration space SO(3) is S^3 / {+-1}, so all
heat invariants are taken with |Gamma| = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidMetric, NotRealizable
from .heat import HeatInvariants, heat_invariants, invert_spectrum
from .metric import MetricEigenvalues, eigenvalues_to_christoffel
from .tolerances import DEFAULT, Tolerances

SO3_ORDER = 2


@dataclass(frozen=True)
class MomentsOfInertia:
    values: tuple[float, float, float]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if len(vals) != 3 or not all(math.isfinite(v) and v > 0 for v in vals):
            raise InvalidMetric(f"moments of inertia must be three finite positive numbers: {self.values!r}")
        object.__setattr__(self, "values", tuple(sorted(vals)))

    def __iter__(self):
        return iter(self.values)


def _as_moments(m) -> MomentsOfInertia:
    return m if isinstance(m, MomentsOfInertia) else MomentsOfInertia(tuple(m))


def moments_to_eigenvalues(m) -> MetricEigenvalues:
    return MetricEigenvalues(tuple(2 / i for i in _as_moments(m)))


def rotational_invariants(m, tol: Tolerances = DEFAULT) -> HeatInvariants:
    c = eigenvalues_to_christoffel(moments_to_eigenvalues(m), tol)
    return heat_invariants(c, SO3_ORDER, tol)


def recover_moments(h: HeatInvariants, tol: Tolerances = DEFAULT) -> MomentsOfInertia:
    eta_sq = invert_spectrum(h, SO3_ORDER, tol).eigenvalues.values
    if min(eta_sq) <= 0:
        raise NotRealizable(f"recovered metric eigenvalues {eta_sq} are not positive")
    return MomentsOfInertia(tuple(2 / e for e in eta_sq))
