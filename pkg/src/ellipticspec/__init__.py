"""Spectral geometry of locally homogeneous elliptic three-manifolds.

Forward maps from left-invariant metrics on S^3 to curvature and heat
invariants, the inverse maps back to the metric, and the classification of
the quotients Gamma\\S^3.
"""

from .classify import (
    IsometryGroupDescriptor,
    QuotientStructure,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeV,
    TypeVI,
    group_order,
    isometry_group_descriptor,
    lens_diffeomorphic,
    parse_group,
    quotient_structure,
)
from .curvature import CurvatureProfile, curvature_profile, principal_curvatures, ricci_eigenvalues
from .errors import (
    BadParameters,
    ComplexRoots,
    ExistenceViolated,
    InconsistentCurvature,
    InvalidChristoffel,
    InvalidMetric,
    NegativeDiscriminant,
    NoCommonRoot,
    NotRealizable,
    SpectralGeometryError,
)
from .heat import (
    AbcdCoefficients,
    Branch,
    HeatInvariants,
    RecoveryReport,
    SpectralComparison,
    Verdict,
    abcd,
    compare_spectra,
    heat_invariants,
    invert_spectrum,
    is_degenerate_ricci,
    recover_p,
    symmetric_to_multiset,
)
from .metric import (
    ChristoffelTriple,
    MetricClass,
    MetricEigenvalues,
    christoffel_to_eigenvalues,
    classify_metric,
    covering_volume,
    eigenvalues_to_christoffel,
)
from .molecule import MomentsOfInertia, moments_to_eigenvalues, recover_moments, rotational_invariants
from .recover import products_from_curvatures, recover_from_curvature_and_volume, unique_degenerate_metric
from .tolerances import DEFAULT, Tolerances
