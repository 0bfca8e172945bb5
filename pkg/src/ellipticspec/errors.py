"""Exception hierarchy.

Every domain error carries a stable ``code`` used by the command line
interface; the codes never change between releases.
"""


class SpectralGeometryError(ValueError):
    code = "domain_error"


class InvalidMetric(SpectralGeometryError):
    code = "invalid_metric"


class InvalidChristoffel(SpectralGeometryError):
    code = "invalid_christoffel"


class ComplexRoots(SpectralGeometryError):
    code = "complex_roots"


class NegativeDiscriminant(SpectralGeometryError):
    code = "negative_discriminant"


class NoCommonRoot(SpectralGeometryError):
    code = "no_common_root"


class InconsistentCurvature(SpectralGeometryError):
    code = "inconsistent_curvature"


class ExistenceViolated(SpectralGeometryError):
    code = "existence_violated"


class BadParameters(SpectralGeometryError):
    code = "bad_parameters"


class NotRealizable(SpectralGeometryError):
    code = "not_realizable"
