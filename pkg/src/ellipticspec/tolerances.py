from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by every operation.

    All values are relative to a scale that is homogeneous in the metric,
    so results do not depend on the overall size of the metric.
    """

    eq: float = 1e-9  # multiset equality
    disc: float = 1e-10  # negative-discriminant rejection
    root: float = 1e-6  # |q2(root)| / scale for accepting a common root
    rt: float = 1e-9  # roundtrip / equality of heat invariants
    a_zero: float = 1e-10  # scalar-flat dispatch
    c_zero: float = 1e-10  # degenerate-Ricci dispatch
    prop: float = 1e-9  # |C + A^2| <= prop * A^2  =>  q2 proportional to q1
    double_root: float = 1e-13  # q1 discriminant treated as exactly zero
    deg: float = 1e-10  # vanishing curvature products
    clamp: float = 1e-12  # arccos argument overshoot that is silently clamped
    consistency: float = 1e-6  # mismatch between redundant inputs (e.g. volume vs curvature)

    def with_overrides(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT = Tolerances()
