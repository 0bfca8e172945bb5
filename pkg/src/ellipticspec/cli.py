"""Command line interface.

Every invocation writes one JSON record to stdout,

    {"command": ..., "inputs": {...}, "outputs": {...}, "branch": ..., "warnings": [...]}

with floats printed to 17 significant digits so that identical invocations
give byte-identical output.  A short human-readable summary goes to stderr.
Exit status: 0 on success, 2 for malformed arguments, 3 for domain errors; in
both failure cases stderr carries a JSON object {"code": ..., "message": ...}.

Moments of inertia follow the kinetic-energy convention: a body with moments
I_j gives metric eigenvalues 2 / I_j relative to the background -1/2 Killing
form (the round sphere of radius 2).
"""

from __future__ import annotations

import argparse
import enum
import json
import math
import sys
from fractions import Fraction

from . import classify as cls
from .curvature import curvature_profile
from .errors import SpectralGeometryError
from .heat import HeatInvariants, compare_spectra, exact_heat_coefficients, heat_invariants, invert_spectrum
from .metric import (
    ChristoffelTriple,
    MetricClass,
    MetricEigenvalues,
    christoffel_to_eigenvalues,
    classify_metric,
    eigenvalues_to_christoffel,
    exact_christoffel,
    pair_sum_product,
)
from .molecule import moments_to_eigenvalues, recover_moments, rotational_invariants
from .recover import recover_from_curvature_and_volume, unique_degenerate_metric
from .tolerances import DEFAULT, Tolerances

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 2, 3

_METRIC_CLASSES = {
    "constant": MetricClass.CONSTANT_CURVATURE,
    "berger": MetricClass.BERGER_NON_CONSTANT,
    "generic": MetricClass.GENERIC,
}
_METRIC_CLASSES.update({m.value.lower(): m for m in MetricClass})

_BODY = {
    MetricClass.CONSTANT_CURVATURE: "spherical",
    MetricClass.BERGER_NON_CONSTANT: "symmetric",
    MetricClass.GENERIC: "asymmetric",
}


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------------
# serialization


def to_json(obj) -> str:
    """Deterministic JSON with 17 significant digits for every float."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, enum.Enum):
        return to_json(obj.value)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return format(obj, ".17g")
    if isinstance(obj, (str, Fraction)):
        return json.dumps(str(obj))
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _error(code: str, message: str, status: int) -> int:
    sys.stderr.write(to_json({"code": code, "message": message}) + "\n")
    return status


# ----------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _number(text: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"group order must be an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"group order must be positive: {text!r}")
    return n


def _tolerance(text: str) -> float:
    try:
        t = float(text)
    except ValueError:
        t = -1.0
    if not (math.isfinite(t) and t >= 0):
        raise argparse.ArgumentTypeError(f"tolerance must be a finite non-negative number: {text!r}")
    return t


def _metric_class(text: str) -> MetricClass:
    try:
        return _METRIC_CLASSES[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"metric class must be one of constant, berger, generic: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ellipticspec", description=__doc__.split("\n\n")[0])
    tol = parser.add_argument_group("tolerances")
    tol.add_argument("--tol-eq", type=_tolerance, help=f"multiset equality (default {DEFAULT.eq})")
    tol.add_argument("--tol-root", type=_tolerance, help=f"common-root residual (default {DEFAULT.root})")
    tol.add_argument("--tol-disc", type=_tolerance, help=f"negative discriminant (default {DEFAULT.disc})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("forward", help="metric -> curvature and heat invariants")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--eigenvalues", nargs=3, type=_number, metavar="ETA2")
    src.add_argument("--mu", nargs=3, type=_number, metavar="MU", help="Christoffel symbols")
    p.add_argument("--order", type=_order, default=1, help="|Gamma| (default 1)")
    p.add_argument("--exact", action="store_true", help="also print volume and heat invariants as rational multiples of pi^2")

    p = sub.add_parser("invert", help="heat invariants -> metric")
    for name in ("a0", "a1", "a2", "a3"):
        p.add_argument(f"--{name}", type=float, required=True)
    p.add_argument("--order", type=_order, required=True)

    p = sub.add_parser("classify", help="isometry classes on Gamma\\S^3 and lens space diffeomorphism")
    p.add_argument("--group", help="e.g. I:5,2  II:3,3,1  III:2,1  IV:1,1  V:1  VI:7")
    p.add_argument("--metric-class", type=_metric_class, help="constant, berger or generic")
    p.add_argument("--lens", nargs=3, type=int, metavar=("Q", "P1", "P2"))

    p = sub.add_parser("isocurved", help="principal curvatures + volume -> metric")
    p.add_argument("--K", nargs=3, type=float, metavar="K")
    p.add_argument("--degenerate", action="store_true", help="use scalar curvature --sc of a degenerate Ricci metric")
    p.add_argument("--sc", type=float)
    p.add_argument("--vol", type=float, required=True, help="volume of the quotient")
    p.add_argument("--order", type=_order, required=True)

    p = sub.add_parser("molecule", help="moments of inertia <-> rotational heat invariants")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--moments", nargs=3, type=float, metavar="I")
    src.add_argument("--invert", nargs=4, type=float, metavar=("A0", "A1", "A2", "A3"))

    p = sub.add_parser("compare", help="decide local isometry from two sets of heat invariants")
    p.add_argument("--h1", nargs=4, type=float, metavar="A")
    p.add_argument("--order1", type=_order)
    p.add_argument("--h2", nargs=4, type=float, metavar="A")
    p.add_argument("--order2", type=_order)
    p.add_argument("--file", help='JSON file {"h1": [...], "order1": n, "h2": [...], "order2": n}')
    return parser


# ----------------------------------------------------------------------------
# commands


def _heat_dict(h: HeatInvariants) -> dict:
    return {"a0": h.a0, "a1": h.a1, "a2": h.a2, "a3": h.a3}


def _metric_outputs(c: ChristoffelTriple, e: MetricEigenvalues, tol: Tolerances) -> dict:
    m = classify_metric(e, tol)
    return {
        "eigenvalues": list(e.values),
        "christoffel": list(c.mu),
        "symmetric": {"p1": c.p1, "p2": c.p2, "p3": c.p3},
        "metric_class": m,
    }


def cmd_forward(args, tol):
    warnings = []
    if args.mu is not None:
        exact = args.mu if all(isinstance(v, Fraction) for v in args.mu) else None
        c = ChristoffelTriple(tuple(float(v) for v in args.mu), tol)
        e = christoffel_to_eigenvalues(c, tol)
        inputs = {"mu": [float(v) for v in args.mu], "order": args.order}
    else:
        e = MetricEigenvalues(tuple(float(v) for v in args.eigenvalues))
        c = eigenvalues_to_christoffel(e, tol)
        exact = None
        if all(isinstance(v, Fraction) for v in args.eigenvalues):
            exact = exact_christoffel(args.eigenvalues)
        inputs = {"eigenvalues": [float(v) for v in args.eigenvalues], "order": args.order}
    h = heat_invariants(c, args.order, tol)
    prof = curvature_profile(c, tol)
    out = _metric_outputs(c, e, tol)
    out["covering_volume"] = h.a0 * args.order
    out["volume"] = h.a0
    out["heat"] = _heat_dict(h)
    out["curvature"] = {
        "principal": list(prof.principal), "ricci": list(prof.ricci), "sc": prof.sc,
        "r2": prof.r2, "ric2": prof.ric2, "rrr": prof.rrr, "ric_rr": prof.ric_rr,
        "ricric_r": prof.ricric_r, "ricricric": prof.ricricric,
        "grad_r2": prof.grad_r2, "grad_ric2": prof.grad_ric2,
    }
    desc = cls.isometry_group_descriptor(out["metric_class"])
    out["isometry_group"] = {"label": desc.label, "component": desc.component_label}
    if args.exact:
        if exact is None:
            warnings.append("exact mode needs rational inputs with eta1*eta2*eta3 rational; printed floats only")
        else:
            a = exact_heat_coefficients(exact, args.order)
            out["exact_pi2"] = {
                "covering_volume": Fraction(16) / pair_sum_product(exact),
                "a0": a[0], "a1": a[1], "a2": a[2], "a3": a[3],
            }
    summary = f"{out['metric_class'].value} metric, volume {h.a0:.6g}, Sc {prof.sc:.6g}"
    return inputs, out, None, warnings, summary


def cmd_invert(args, tol):
    h = HeatInvariants(args.a0, args.a1, args.a2, args.a3)
    r = invert_spectrum(h, args.order, tol)
    out = _metric_outputs(r.christoffel, r.eigenvalues, tol)
    k = r.abcd
    out.update({
        "abcd": {"A": k.A, "B": k.B, "C": k.C, "D": k.D},
        "a3_required": r.a3_required,
        "degenerate_ricci": r.degenerate_ricci,
        "q2_residuals": list(r.q2_residuals),
    })
    inputs = {**_heat_dict(h), "order": args.order}
    summary = f"eigenvalues {', '.join(f'{v:.6g}' for v in r.eigenvalues.values)} via {r.branch.value}"
    return inputs, out, r.branch, list(r.warnings), summary


def cmd_classify(args, tol):
    if args.group is None and args.lens is None:
        raise UsageError("classify needs --group with --metric-class, or --lens")
    if (args.group is None) != (args.metric_class is None):
        raise UsageError("--group and --metric-class go together")
    inputs, out, lines = {}, {}, []
    if args.group is not None:
        g = cls.parse_group(args.group)
        q = cls.quotient_structure(g, args.metric_class)
        desc = cls.isometry_group_descriptor(args.metric_class)
        inputs.update({"group": args.group, "metric_class": args.metric_class})
        out.update({
            "group": cls.group_label(g),
            "order": cls.group_order(g),
            "row": cls.table_row(g),
            "class_count": q.class_count,
            "homogeneous": list(q.homogeneous_flags),
            "centralizer": q.centralizer_descriptor,
            "isometry_group": {"label": desc.label, "component": desc.component_label},
            "notes": q.notes,
        })
        lines.append(f"{cls.group_label(g)} with {args.metric_class.value}: {q.class_count} class(es)")
    if args.lens is not None:
        qq, p1, p2 = args.lens
        same = cls.lens_diffeomorphic(qq, p1, p2)
        inputs["lens"] = [qq, p1, p2]
        out["lens_diffeomorphic"] = same
        lines.append(f"L({qq};1,{p1}) and L({qq};1,{p2}) are {'' if same else 'not '}diffeomorphic")
    return inputs, out, None, [], "; ".join(lines)


def cmd_isocurved(args, tol):
    if args.degenerate:
        if args.sc is None:
            raise UsageError("--degenerate needs --sc")
        c = unique_degenerate_metric(args.sc, args.vol, args.order, tol)
        inputs = {"sc": args.sc, "vol": args.vol, "order": args.order}
        branch = "Degenerate"
    else:
        if args.K is None:
            raise UsageError("isocurved needs --K or --degenerate --sc")
        c = recover_from_curvature_and_volume(args.K, args.vol, args.order, tol)
        inputs = {"K": args.K, "vol": args.vol, "order": args.order}
        branch = "Degenerate" if 0.0 in c.mu else "Nondegenerate"
    e = christoffel_to_eigenvalues(c, tol)
    out = _metric_outputs(c, e, tol)
    prof = curvature_profile(c, tol)
    out["principal"] = list(prof.principal)
    out["sc"] = prof.sc
    out["covering_volume"] = 16 * math.pi**2 / c.pair_sum_product
    summary = f"christoffel symbols {', '.join(f'{v:.6g}' for v in c.mu)}"
    return inputs, out, branch, [], summary


def cmd_molecule(args, tol):
    if args.moments is not None:
        e = moments_to_eigenvalues(args.moments)
        h = rotational_invariants(args.moments, tol)
        m = classify_metric(e, tol)
        inputs = {"moments": args.moments}
        out = {"eigenvalues": list(e.values), "metric_class": m, "body": _BODY[m], "heat": _heat_dict(h)}
        return inputs, out, None, [], f"{_BODY[m]} body, a0 = {h.a0:.6g}"
    h = HeatInvariants(*args.invert)
    moments = recover_moments(h, tol)
    e = moments_to_eigenvalues(moments)
    m = classify_metric(e, tol)
    inputs = {"invert": _heat_dict(h)}
    out = {"moments": list(moments.values), "eigenvalues": list(e.values), "metric_class": m, "body": _BODY[m]}
    return inputs, out, None, [], f"moments {', '.join(f'{v:.6g}' for v in moments.values)}"


def _load_compare(args):
    if args.file is not None:
        try:
            with open(args.file) as f:
                data = json.load(f)
            return ([float(v) for v in data["h1"]], int(data["order1"]),
                    [float(v) for v in data["h2"]], int(data["order2"]))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read comparison file {args.file!r}: {exc}") from None
    if None in (args.h1, args.order1, args.h2, args.order2):
        raise UsageError("compare needs --h1 --order1 --h2 --order2, or --file")
    return args.h1, args.order1, args.h2, args.order2


def cmd_compare(args, tol):
    h1, n1, h2, n2 = _load_compare(args)
    if n1 < 1 or n2 < 1:
        raise UsageError("group orders must be positive")
    res = compare_spectra(HeatInvariants(*h1), n1, HeatInvariants(*h2), n2, tol)
    inputs = {"h1": h1, "order1": n1, "h2": h2, "order2": n2}
    out = {"verdict": res.verdict, "diagnostic": res.diagnostic}
    return inputs, out, None, [], res.verdict.value


COMMANDS = {
    "forward": cmd_forward,
    "invert": cmd_invert,
    "classify": cmd_classify,
    "isocurved": cmd_isocurved,
    "molecule": cmd_molecule,
    "compare": cmd_compare,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _error("invalid_arguments", str(exc), EXIT_USAGE)
    tol = DEFAULT.with_overrides(eq=args.tol_eq, root=args.tol_root, disc=args.tol_disc)
    try:
        inputs, outputs, branch, warnings, summary = COMMANDS[args.command](args, tol)
    except UsageError as exc:
        return _error("invalid_arguments", str(exc), EXIT_USAGE)
    except SpectralGeometryError as exc:
        return _error(exc.code, str(exc), EXIT_DOMAIN)
    record = {"command": args.command, "inputs": inputs, "outputs": outputs,
              "branch": branch, "warnings": warnings}
    sys.stdout.write(to_json(record) + "\n")
    sys.stderr.write(summary + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
