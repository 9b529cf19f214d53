"""Euler-Poincare characteristics as Abel limits, exact and numeric.

The characteristic of an N-graded space is the limit of its Poincare
series as ``t -> -1`` from above, taken componentwise in ``R[G]``.  For
the closed-form products produced by :func:`colorchi.cochain.complex_closed_form`
this limit can be decided exactly:

    every factor ``(1 - t e^a)^-1`` equals ``(sum_{i<m} t^i e^{ia}) / (1 - t^m)``
    with ``m`` the order of ``a``, so the whole series is ``N(t) / D(t)``
    with a polynomial numerator ``N`` over ``Q[G]`` and a scalar
    denominator ``D = prod (1 - t^m)^d``.  Componentwise, the limit at
    ``t = -1`` exists exactly when the component of ``N`` is divisible by
    ``(1 + t)`` at least as often as ``D`` vanishes there, and its value
    is then a ratio of exact evaluations.

In dimension terms this reproduces the classical classification: writing
``E``/``O`` for the even/odd total dimensions and ``d0`` for the dimension
at the group identity,

* ordinary (trivial group): the limit always exists; it is 0 when the
  even part is nonzero and ``1 / 2**O`` otherwise;
* super (parity grading): exists iff ``E >= O``; 0 when strict, and
  ``((1 - theta)/2) ** s`` at equality, ``s`` the number of supported odd
  degrees;
* full color grading: exists iff ``d0 >= O`` apart from group-ring
  cancellations, 0 when strict, and at equality the product of
  ``(1 - e^a)^{dim L_a}`` over nonzero even degrees and of the scaled
  alternating idempotents over supported odd degrees.

The componentwise pole analysis is strictly finer than the dimension
count: when the leading singular coefficient cancels in the group ring,
the limit can exist even though ``d0 < O``, and this module then reports
the true limit rather than a spurious divergence.

:func:`abel_numeric` is the independent numeric crosscheck: it evaluates
a truncated series along a schedule of points approaching ``-1`` and
classifies each component as converged or diverging.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Mapping, Sequence

from .cochain import AlgebraSpec, complex_closed_form
from .groups import Coords, FinAbGroup, GroupHom
from .groupring import GroupRingElem, Scalar
from .series import ClosedFormSeries, TruncatedSeries, tapered_eval

Variant = Literal["ordinary", "super", "color"]

VARIANTS: tuple[Variant, ...] = ("ordinary", "super", "color")


@dataclass(frozen=True)
class Exists:
    """The limit exists; ``value`` is exact, with rational coefficients."""

    value: GroupRingElem


@dataclass(frozen=True)
class Diverges:
    """The limit does not exist; ``witnesses`` are the diverging components."""

    witnesses: frozenset[Coords]

    def __post_init__(self):
        if not self.witnesses:
            raise ValueError("a divergence verdict needs at least one witness component")


@dataclass(frozen=True)
class ConditionalExists:
    """An exact value valid under a user-asserted hypothesis (see ``note``)."""

    value: GroupRingElem
    note: str


@dataclass(frozen=True)
class NoVerdict:
    """No conclusion; ``reason`` says which hypothesis failed or was missing."""

    reason: str


@dataclass(frozen=True)
class Vanishes:
    """The characteristic is zero under the stated hypothesis."""

    note: str


CharResult = Exists | Diverges | ConditionalExists | NoVerdict


def variant_hom(spec: AlgebraSpec, variant: Variant) -> GroupHom | None:
    """Group homomorphism that realizes a variant; None for the color variant."""
    if variant == "color":
        return None
    if variant == "super":
        return spec.parity.to_hom()
    if variant == "ordinary":
        return GroupHom.collapse(spec.group)
    raise ValueError(f"unknown variant {variant!r}")


def closed_form_for_variant(spec: AlgebraSpec, variant: Variant) -> ClosedFormSeries:
    cf = complex_closed_form(spec)
    hom = variant_hom(spec, variant)
    return cf if hom is None else cf.pushforward(hom)


# ---------------------------------------------------------------------------
# exact Abel limits of closed forms
# ---------------------------------------------------------------------------


def _numerator_polynomial(cf: ClosedFormSeries) -> TruncatedSeries:
    """Exact polynomial ``N(t)`` with ``cf = N(t) / prod (1 - t^m)^d``."""
    group = cf.group
    degree = sum(d for _, d in cf.plus_factors)
    for a, d in cf.minus_factors:
        degree += d * (group.element_order(a) - 1)
    poly = ClosedFormSeries(group, cf.plus_factors, ()).expand(degree)
    for a, d in cf.minus_factors:
        m = group.element_order(a)
        cyc = [GroupRingElem.basis(group, group.scale(i, a)) for i in range(m)]
        cyc += [GroupRingElem.zero(group)] * (degree + 1 - m)
        factor = TruncatedSeries(group, cyc[: degree + 1])
        for _ in range(d):
            poly = poly * factor
    return poly


def _poly_at_minus_one(p: Sequence[Scalar]) -> Scalar:
    total = 0
    for i, c in enumerate(p):
        total += c if i % 2 == 0 else -c
    return total


def _divide_by_one_plus_t(p: list[Scalar]) -> tuple[list[Scalar], Scalar]:
    """Quotient and remainder of a scalar polynomial divided by ``(1 + t)``."""
    if len(p) == 1:
        return [], p[0]
    q = [0] * (len(p) - 1)
    q[-1] = p[-1]
    for i in range(len(p) - 2, 0, -1):
        q[i - 1] = p[i] - q[i]
    rem = p[0] - q[0]
    return q, rem


def abel_limit(
    cf: ClosedFormSeries, scale: GroupRingElem | None = None
) -> Exists | Diverges:
    """Exact componentwise limit of a closed-form series at ``t -> -1+``.

    Components whose numerator polynomial carries fewer factors of
    ``(1 + t)`` than the denominator are the divergence witnesses; if
    there are none, the limit is assembled from exact evaluations.
    ``scale`` multiplies the series by a constant group-ring element
    (e.g. a module dimension) before the limit is taken.
    """
    group = cf.group
    pole_order = 0
    denom_value = 1
    for a, d in cf.minus_factors:
        m = group.element_order(a)
        if m % 2 == 0:
            pole_order += d
            denom_value *= m**d
        else:
            denom_value *= 2**d
    npoly = _numerator_polynomial(cf)
    if scale is not None:
        npoly = npoly * scale
    components: set[Coords] = set()
    for c in npoly.coeffs:
        components.update(c.support)
    witnesses: set[Coords] = set()
    values: dict[Coords, Scalar] = {}
    for beta in sorted(components):
        p: list[Scalar] = [c.coeff(beta) for c in npoly.coeffs]
        diverged = False
        for _ in range(pole_order):
            p, rem = _divide_by_one_plus_t(p)
            if rem != 0:
                witnesses.add(beta)
                diverged = True
                break
        if not diverged:
            values[beta] = Fraction(_poly_at_minus_one(p), denom_value) if p else Fraction(0)
    if witnesses:
        return Diverges(frozenset(witnesses))
    return Exists(GroupRingElem(group, values))


def exact_complex_characteristic(spec: AlgebraSpec, variant: Variant = "color") -> Exists | Diverges:
    """Exact Abel-limit characteristic of the bare cochain complex of ``spec``.

    The module of ``spec`` is *not* applied; see
    :func:`cohomology_characteristic` for the module-scaled statement.
    """
    return abel_limit(closed_form_for_variant(spec, variant))


# ---------------------------------------------------------------------------
# numeric crosscheck
# ---------------------------------------------------------------------------


def default_deltas(k_min: int = 4, k_max: int = 14) -> tuple[float, ...]:
    """Offsets ``2**-k`` for ``k = k_min .. k_max`` (decreasing)."""
    if not (1 <= k_min <= k_max):
        raise ValueError(f"need 1 <= k_min <= k_max, got {k_min}, {k_max}")
    return tuple(2.0**-k for k in range(k_min, k_max + 1))


def required_order(deltas: Sequence[float]) -> int:
    """Truncation order needed by a schedule: ``4 / min(delta)``."""
    return math.ceil(4.0 / min(deltas))


@dataclass(frozen=True)
class ComponentTrend:
    """Evaluations of one component along the schedule and their verdict.

    ``status`` is ``"converged"`` (the delta->0 extrapolations settled
    within the Cauchy tolerance; ``estimate`` carries the limit),
    ``"diverging"`` (the values blow past the magnitude threshold or grow
    steadily as the offset shrinks), or ``"inconclusive"``.
    """

    values: tuple[float, ...]
    extrapolated: tuple[float, ...]
    status: str
    estimate: float | None


@dataclass(frozen=True)
class AbelNumericResult:
    deltas: tuple[float, ...]
    components: Mapping[Coords, ComponentTrend]

    @property
    def all_converged(self) -> bool:
        return all(c.status == "converged" for c in self.components.values())

    @property
    def diverging(self) -> frozenset[Coords]:
        return frozenset(k for k, c in self.components.items() if c.status == "diverging")

    def estimates(self) -> dict[Coords, float]:
        return {
            k: c.estimate
            for k, c in self.components.items()
            if c.status == "converged"
        }


def _extrapolate(deltas: Sequence[float], values: Sequence[float]) -> list[float]:
    # Linear extrapolation of consecutive (delta, value) pairs to delta = 0;
    # kills the leading O(delta) error of the limit approach.
    out = []
    for j in range(1, len(values)):
        d0, d1 = deltas[j - 1], deltas[j]
        out.append((values[j] * d0 - values[j - 1] * d1) / (d0 - d1))
    return out


def abel_numeric(
    series: TruncatedSeries,
    deltas: Sequence[float] | None = None,
    *,
    cauchy_tol: float = 1e-4,
    blowup_tol: float = 1e6,
    growth_factor: float = 1.6,
) -> AbelNumericResult:
    """Evaluate a truncated series at ``t = -1 + delta`` along a schedule.

    The caller is responsible for supplying a series of sufficient order
    (``required_order(deltas)``); offsets needing more terms than the
    series carries are dropped.  A component is ``diverging`` when its
    magnitude exceeds ``blowup_tol`` or keeps growing by ``growth_factor``
    per step, and ``converged`` when the extrapolated values become Cauchy
    within ``cauchy_tol``.
    """
    if deltas is None:
        deltas = default_deltas()
    usable = tuple(d for d in sorted(deltas, reverse=True) if 4.0 / d <= series.order)
    if len(usable) < 3:
        raise ValueError(
            f"series order {series.order} supports only {len(usable)} schedule points; need >= 3"
        )
    points = [-1.0 + d for d in usable]
    comps = series._component_floats()
    window = series.smoothing_window
    components: dict[Coords, ComponentTrend] = {}
    for k in sorted(comps):
        arr = comps[k]
        vals = tuple(tapered_eval(arr, t, window) for t in points)
        extr = tuple(_extrapolate(usable, vals))
        mags = [abs(v) for v in vals]
        floor = max(1.0, 100.0 * cauchy_tol)
        if max(mags) > blowup_tol or (
            len(mags) >= 3
            and mags[-1] > growth_factor * mags[-2]
            and mags[-2] > growth_factor * mags[-3]
            and mags[-1] > floor
        ):
            status, estimate = "diverging", None
        elif len(extr) >= 2 and abs(extr[-1] - extr[-2]) <= cauchy_tol * max(1.0, abs(extr[-1])):
            status, estimate = "converged", extr[-1]
        else:
            status, estimate = "inconclusive", None
        components[k] = ComponentTrend(vals, extr, status, estimate)
    return AbelNumericResult(usable, components)


def abel_numeric_complex(
    spec: AlgebraSpec,
    variant: Variant = "color",
    k_min: int = 4,
    k_max: int = 12,
    max_order: int = 2**16,
    **kwargs,
) -> AbelNumericResult:
    """Numeric Abel limit of the bare complex series, expanding as needed.

    Coefficients of a product with ``p`` geometric factors grow like
    ``n**(p-1)``, so the truncation order per offset scales with ``p``
    (roughly ``(16 + 10 p) / delta``); the schedule is shortened when the
    growth-aware order would exceed ``max_order`` coefficients.
    """
    cf = closed_form_for_variant(spec, variant)
    p = sum(d for _, d in cf.minus_factors)
    multiplier = 4 if p <= 1 else 16 + 10 * p
    while k_max > k_min + 2 and multiplier * 2**k_max > max_order:
        k_max -= 1
    deltas = default_deltas(k_min, k_max)
    series = cf.expand(math.ceil(multiplier / min(deltas)))
    return abel_numeric(series, deltas, **kwargs)


# ---------------------------------------------------------------------------
# characteristic of the cohomology, conditional on the coboundary hypothesis
# ---------------------------------------------------------------------------

_BOUNDARY_NOTE = "conditional on the existence of the coboundary characteristic"


def variant_dimension_condition(spec: AlgebraSpec, variant: Variant) -> tuple[bool, str]:
    """Whether the variant's existence condition on dimensions holds."""
    if variant == "ordinary":
        return True, "no dimension condition in the ordinary variant"
    if variant == "super":
        ok = spec.dim_even >= spec.dim_odd
        return ok, f"dim even = {spec.dim_even} vs dim odd = {spec.dim_odd}"
    if variant == "color":
        ok = spec.dim_zero >= spec.dim_odd
        return ok, f"dim at identity = {spec.dim_zero} vs dim odd = {spec.dim_odd}"
    raise ValueError(f"unknown variant {variant!r}")


def module_dim_for_variant(spec: AlgebraSpec, variant: Variant) -> GroupRingElem:
    dim = spec.module_dim()
    hom = variant_hom(spec, variant)
    return dim if hom is None else dim.pushforward(hom)


def cohomology_characteristic(
    spec: AlgebraSpec,
    variant: Variant = "color",
    *,
    assume_boundary_char: bool = False,
) -> ConditionalExists | NoVerdict:
    """Characteristic of the cohomology of ``spec`` with its module.

    Whether the coboundary characteristic exists cannot be decided from
    dimension data (the differential is out of scope), so the result is
    conditional on the caller asserting it via ``assume_boundary_char``.
    When the variant's dimension condition also holds, the value is the
    complex characteristic times the module dimension in the variant's
    ring, exactly.
    """
    if not assume_boundary_char:
        return NoVerdict(
            "existence of the coboundary characteristic was not asserted; "
            "pass assume_boundary_char=True to state the hypothesis"
        )
    ok, detail = variant_dimension_condition(spec, variant)
    if not ok:
        return NoVerdict(f"dimension condition fails ({detail})")
    base = exact_complex_characteristic(spec, variant)
    if isinstance(base, Diverges):
        return NoVerdict(
            f"complex characteristic diverges at components {sorted(base.witnesses)}"
        )
    value = base.value * module_dim_for_variant(spec, variant)
    return ConditionalExists(value, _BOUNDARY_NOTE)


def vanishing_verdict(
    spec: AlgebraSpec,
    variant: Variant = "color",
    *,
    cohomology_finite_dimensional: bool = False,
) -> Vanishes | NoVerdict:
    """Unconditional vanishing in the strict-inequality regime.

    For finite-dimensional cohomology the coboundary hypothesis becomes
    provable when the inequality is strict, so the characteristic is
    exactly zero; outside that regime nothing is claimed.
    """
    if not cohomology_finite_dimensional:
        return NoVerdict(
            "finite-dimensional cohomology was not asserted; "
            "pass cohomology_finite_dimensional=True to state the hypothesis"
        )
    if variant == "ordinary":
        if spec.dim_even > 0:
            return Vanishes("even part nonzero: ordinary characteristic is 0")
        return NoVerdict("even part is zero; no vanishing statement applies")
    if variant == "super":
        if spec.dim_even > spec.dim_odd:
            return Vanishes("dim even > dim odd: super characteristic is 0")
        return NoVerdict(
            f"dim even = {spec.dim_even} is not greater than dim odd = {spec.dim_odd}"
        )
    if variant == "color":
        if spec.dim_zero > spec.dim_odd:
            return Vanishes("dim at identity > dim odd: color characteristic is 0")
        return NoVerdict(
            f"dim at identity = {spec.dim_zero} is not greater than dim odd = {spec.dim_odd}"
        )
    raise ValueError(f"unknown variant {variant!r}")
