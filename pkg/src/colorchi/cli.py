"""Command-line front end: JSON algebra specs in, JSON reports out.

Spec file format (unknown fields are rejected)::

    {
      "group":   {"invariant_factors": [4]},
      "parity":  [1],
      "epsilon": {"root_order": 4, "exponents": [[1]]},      # optional
      "algebra": {"dims": {"[0]": 1, "[1]": 1}},
      "module":  {"dims": {"[0]": 2}}                        # optional
    }

Element keys are bracketed residue vectors such as ``"[0]"`` or
``"[1,3]"``; the trivial group uses ``"[]"``.  Rationals are serialized
as strings in lowest terms; floating-point values appear only in fields
named ``*_numeric``.  Reports are emitted with sorted keys, so identical
invocations produce byte-identical output.

Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 summation budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from .characteristic import (
    Diverges,
    Exists,
    NoVerdict,
    abel_limit,
    abel_numeric,
    closed_form_for_variant,
    cohomology_characteristic,
    default_deltas,
    exact_complex_characteristic,
    module_dim_for_variant,
    required_order,
    VARIANTS,
)
from .cochain import AlgebraSpec, default_order, with_module
from .enumeration import TooLarge, verify_closed_form
from .groups import (
    CommutationFactor,
    Coords,
    FinAbGroup,
    GroupHom,
    IllDefinedParity,
    NonPositiveFactor,
    ParityMap,
)
from .groupring import GroupRingElem
from .series import TruncatedSeries
from .summation import BudgetExceeded, Summed, abel_numeric_method, cesaro, chi_method, euler_transform


class SpecError(ValueError):
    """Malformed or invalid input document."""


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _expect_mapping(obj: Any, where: str) -> dict:
    if not isinstance(obj, dict):
        raise SpecError(f"{where} must be an object, got {type(obj).__name__}")
    return obj


def _reject_unknown(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SpecError(f"unknown fields in {where}: {sorted(unknown)}")


def parse_element_key(key: str, group: FinAbGroup) -> Coords:
    if not (isinstance(key, str) and key.startswith("[") and key.endswith("]")):
        raise SpecError(f"element key must look like '[1,3]', got {key!r}")
    body = key[1:-1].strip()
    parts = [p.strip() for p in body.split(",")] if body else []
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        raise SpecError(f"non-integer coordinate in element key {key!r}") from None
    try:
        return group.reduce(coords)
    except ValueError as exc:
        raise SpecError(f"element key {key!r}: {exc}") from None


def element_key(coords: Coords) -> str:
    return "[" + ",".join(map(str, coords)) + "]"


def _parse_dims(obj: Any, group: FinAbGroup, where: str) -> dict[Coords, int]:
    obj = _expect_mapping(obj, where)
    _reject_unknown(obj, {"dims"}, where)
    dims_obj = _expect_mapping(obj.get("dims", {}), f"{where}.dims")
    dims: dict[Coords, int] = {}
    for key, val in dims_obj.items():
        if not isinstance(val, int) or isinstance(val, bool) or val < 0:
            raise SpecError(f"{where}.dims[{key!r}] must be a nonnegative integer")
        dims[parse_element_key(key, group)] = val
    return dims


def parse_spec(doc: Any) -> AlgebraSpec:
    doc = _expect_mapping(doc, "spec")
    _reject_unknown(doc, {"group", "parity", "epsilon", "algebra", "module"}, "spec")
    for field in ("group", "parity", "algebra"):
        if field not in doc:
            raise SpecError(f"missing required field {field!r}")

    group_obj = _expect_mapping(doc["group"], "group")
    _reject_unknown(group_obj, {"invariant_factors"}, "group")
    factors = group_obj.get("invariant_factors")
    if not isinstance(factors, list) or not all(
        isinstance(m, int) and not isinstance(m, bool) for m in factors
    ):
        raise SpecError("group.invariant_factors must be a list of integers")
    try:
        group = FinAbGroup(tuple(factors))
    except NonPositiveFactor as exc:
        raise SpecError(str(exc)) from None

    bits = doc["parity"]
    if not isinstance(bits, list):
        raise SpecError("parity must be a list of bits, one per generator")
    try:
        parity = ParityMap(group, tuple(bits))
    except IllDefinedParity as exc:
        raise SpecError(str(exc)) from None

    epsilon = None
    if "epsilon" in doc:
        eps_obj = _expect_mapping(doc["epsilon"], "epsilon")
        _reject_unknown(eps_obj, {"root_order", "exponents"}, "epsilon")
        try:
            epsilon = CommutationFactor(
                group,
                eps_obj.get("root_order", 0),
                tuple(tuple(row) for row in eps_obj.get("exponents", ())),
            )
        except (ValueError, TypeError) as exc:
            raise SpecError(f"epsilon: {exc}") from None

    l_dims = _parse_dims(doc["algebra"], group, "algebra")
    m_dims = _parse_dims(doc["module"], group, "module") if "module" in doc else None
    try:
        return AlgebraSpec(group, parity, l_dims, m_dims, epsilon)
    except ValueError as exc:
        raise SpecError(str(exc)) from None


def load_spec(path: str) -> AlgebraSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON in {path}: {exc}") from None
    return parse_spec(doc)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def rational_str(value) -> str:
    return str(Fraction(value))


def ring_elem_payload(x: GroupRingElem) -> dict[str, str]:
    return {element_key(k): rational_str(v) for k, v in x.items()}


def series_payload(series: TruncatedSeries) -> list[dict]:
    return [
        {"degree": n, "coefficients": ring_elem_payload(series.coefficient(n))}
        for n in range(series.order + 1)
    ]


def spec_payload(spec: AlgebraSpec) -> dict:
    doc: dict[str, Any] = {
        "group": {"invariant_factors": list(spec.group.invariant_factors)},
        "parity": list(spec.parity.bits),
        "algebra": {"dims": {element_key(k): v for k, v in spec.L_dims.items()}},
        "module": {"dims": {element_key(k): v for k, v in spec.M_dims.items()}},
    }
    if spec.epsilon is not None:
        doc["epsilon"] = {
            "root_order": spec.epsilon.root_order,
            "exponents": [list(row) for row in spec.epsilon.exponents],
        }
    return doc


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _variant_series(spec: AlgebraSpec, variant: str, order: int) -> TruncatedSeries:
    from .characteristic import variant_hom
    from .cochain import complex_closed_form

    series = with_module(complex_closed_form(spec).expand(order), spec)
    hom = variant_hom(spec, variant)
    return series if hom is None else series.specialize(hom)


def cmd_series(spec: AlgebraSpec, args) -> tuple[dict, int]:
    order = args.order if args.order is not None else default_order(spec)
    series = _variant_series(spec, args.variant, order)
    report = {
        "command": "series",
        "spec": spec_payload(spec),
        "variant": args.variant,
        "order": order,
        "series": series_payload(series),
    }
    return report, 0


def _parse_method(text: str):
    if text == "abel":
        return None  # exact path
    if text == "euler":
        return euler_transform()
    if text == "cesaro" or text.startswith("cesaro:"):
        k = 1
        if ":" in text:
            try:
                k = int(text.split(":", 1)[1])
            except ValueError:
                raise SpecError(f"bad averaging order in method {text!r}") from None
        return cesaro(k)
    raise SpecError(f"unknown method {text!r}; use abel, cesaro[:k], or euler")


def cmd_chi(spec: AlgebraSpec, args) -> tuple[dict, int]:
    method = _parse_method(args.method)
    report: dict[str, Any] = {
        "command": "chi",
        "spec": spec_payload(spec),
        "variant": args.variant,
        "method": args.method,
    }
    if method is None:
        scale = module_dim_for_variant(spec, args.variant)
        cf = closed_form_for_variant(spec, args.variant)
        exact = abel_limit(cf, scale=scale)
        deltas = default_deltas(4, 12)
        series = cf.expand(required_order(deltas)) * scale
        numeric = abel_numeric(series, deltas)
        report["order"] = series.order
        if isinstance(exact, Exists):
            report["characteristic"] = ring_elem_payload(exact.value)
            report["diverging_components"] = []
        else:
            report["characteristic"] = None
            report["diverging_components"] = sorted(element_key(w) for w in exact.witnesses)
        report["crosscheck_numeric"] = {
            element_key(k): trend.estimate
            for k, trend in numeric.components.items()
            if trend.status == "converged"
        }
        report["crosscheck_status"] = {
            element_key(k): trend.status for k, trend in numeric.components.items()
        }
        if args.assume_boundary_char:
            verdict = cohomology_characteristic(
                spec, args.variant, assume_boundary_char=True
            )
            if isinstance(verdict, NoVerdict):
                report["cohomology_characteristic"] = None
                report["assumption_note"] = verdict.reason
            else:
                report["cohomology_characteristic"] = ring_elem_payload(verdict.value)
                report["assumption_note"] = verdict.note
        return report, 0

    order = args.order if args.order is not None else max(1024, default_order(spec))
    series = _variant_series(spec, args.variant, order)
    result = chi_method(series, method)
    report["order"] = order
    report["components"] = {
        element_key(k): {
            "status": type(r).__name__,
            "value_numeric": r.value if isinstance(r, Summed) else None,
            "note": getattr(r, "note", ""),
        }
        for k, r in result.components.items()
    }
    report["exists"] = result.exists
    return report, 3 if result.budget_exceeded else 0


def cmd_verify(spec: AlgebraSpec, args) -> tuple[dict, int]:
    order = args.order if args.order is not None else 8
    checks: list[dict] = []

    def record(name: str, ok: bool, detail: str) -> None:
        checks.append({"name": name, "status": "pass" if ok else "fail", "detail": detail})

    result = verify_closed_form(spec, order)
    record("closed-form-vs-enumeration", result.ok, str(result))

    exact_by_variant: dict[str, Exists | Diverges] = {}
    for variant in VARIANTS:
        exact = exact_complex_characteristic(spec, variant)
        exact_by_variant[variant] = exact
        numeric = abel_numeric(
            closed_form_for_variant(spec, variant).expand(required_order(default_deltas(4, 12))),
            default_deltas(4, 12),
        )
        if isinstance(exact, Exists):
            bad = None
            for k, trend in numeric.components.items():
                expected = float(Fraction(exact.value.coeff(k)))
                if trend.status != "converged":
                    bad = f"{variant}: component {element_key(k)} is {trend.status}"
                    break
                if abs(trend.estimate - expected) > 1e-3:
                    bad = (
                        f"{variant}: component {element_key(k)} numeric {trend.estimate:.6g} "
                        f"vs exact {expected:.6g}"
                    )
                    break
            record("exact-vs-numeric", bad is None, bad or f"{variant}: agreement within 1e-3")
        else:
            missing = [
                element_key(w)
                for w in sorted(exact.witnesses)
                if numeric.components[w].status != "diverging"
            ]
            record(
                "exact-vs-numeric",
                not missing,
                f"{variant}: witnesses not flagged diverging: {missing}"
                if missing
                else f"{variant}: all divergence witnesses flagged",
            )

    color = exact_by_variant["color"]
    if isinstance(color, Exists):
        parity_hom = spec.parity.to_hom()
        collapse = GroupHom.collapse(spec.group)
        sup = exact_by_variant["super"]
        ordn = exact_by_variant["ordinary"]
        ok = (
            isinstance(sup, Exists)
            and isinstance(ordn, Exists)
            and color.value.pushforward(parity_hom) == sup.value
            and color.value.pushforward(collapse) == ordn.value
        )
        record(
            "variant-coherence",
            ok,
            "color characteristic pushes forward to the super and ordinary values"
            if ok
            else "pushforward of the color value disagrees with a smaller variant",
        )
    else:
        sup = exact_by_variant["super"]
        ok = isinstance(exact_by_variant["ordinary"], Exists) if isinstance(sup, Exists) else True
        record(
            "variant-coherence",
            ok,
            "existence is monotone across variants" if ok else "super exists but ordinary does not",
        )

    ok_all = all(c["status"] == "pass" for c in checks)
    report = {
        "command": "verify",
        "spec": spec_payload(spec),
        "order": order,
        "checks": checks,
        "status": "pass" if ok_all else "fail",
    }
    return report, 0 if ok_all else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorchi",
        description="Poincare series and Euler-Poincare characteristics of "
        "graded (color) Lie algebra cochain complexes, from dimension data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_series = sub.add_parser("series", help="truncated Poincare series of the complex")
    p_series.add_argument("spec", help="path to a JSON algebra spec")
    p_series.add_argument("--order", type=int, default=None, help="truncation order")
    p_series.add_argument(
        "--variant", choices=VARIANTS, default="color", help="grading to report"
    )

    p_chi = sub.add_parser("chi", help="Euler-Poincare characteristic")
    p_chi.add_argument("spec", help="path to a JSON algebra spec")
    p_chi.add_argument("--variant", choices=VARIANTS, default="color")
    p_chi.add_argument(
        "--method",
        default="abel",
        help="abel (exact + numeric crosscheck), cesaro[:k], or euler",
    )
    p_chi.add_argument("--order", type=int, default=None, help="stream length for methods")
    p_chi.add_argument(
        "--assume-boundary-char",
        action="store_true",
        help="assert existence of the coboundary characteristic and report "
        "the conditional cohomology characteristic",
    )

    p_verify = sub.add_parser("verify", help="cross-validate closed forms and limits")
    p_verify.add_argument("spec", help="path to a JSON algebra spec")
    p_verify.add_argument("--order", type=int, default=None, help="enumeration order")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_spec(args.spec)
        if args.command == "series":
            report, code = cmd_series(spec, args)
        elif args.command == "chi":
            report, code = cmd_chi(spec, args)
        else:
            report, code = cmd_verify(spec, args)
    except (SpecError, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
