"""Power series with group-ring coefficients.

Two representations:

* :class:`ClosedFormSeries` -- a finite product of factors
  ``(1 + t e^a)^d`` ("plus" factors, one per even degree of a graded
  algebra) and ``(1 - t e^a)^-d`` ("minus" factors, one per odd degree).
  This is the shape every graded exterior/symmetric product series takes.
* :class:`TruncatedSeries` -- explicit coefficients up to a chosen order,
  each an exact :class:`~colorchi.groupring.GroupRingElem`.

Expansion of a closed form is exact: plus factors expand binomially and
minus factors by the negative binomial series, implemented as repeated
shift-and-add passes so that expanding to order ``N`` costs
``O(N * total_degree)`` coefficient operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .groups import Coords, FinAbGroup, GroupHom, TRIVIAL
from .groupring import GroupMismatch, GroupRingElem, Scalar


class BadResidue(ValueError):
    """Residue index outside ``0 <= i < r``."""


def tapered_eval(coeffs: Sequence[float], t, window: int = 2):
    """Average of the last ``window`` partial sums of ``sum coeffs[n] t^n``.

    Equivalent to evaluating with the top ``window`` coefficients linearly
    tapered, so it is exact whenever those coefficients are zero.  For a
    series truncated near a point where its tail oscillates with period
    dividing ``window``, the averaging suppresses the truncation artifact
    by a factor on the order of ``1 - |t|``.  Only the top half of the
    coefficient range is ever averaged over.
    """
    acc = 0.0
    for v in reversed(coeffs):
        acc = acc * t + v
    n = len(coeffs)
    w = max(1, min(window, n // 2))
    if w == 1 or t == 0:
        return acc
    total = acc
    s = acc
    power = t ** (n - 1)
    for j in range(1, w):
        s = s - coeffs[n - j] * power
        power = power / t
        total = total + s
    return total / w


def _merge_factors(factors: Iterable[tuple[Coords, int]], group: FinAbGroup):
    acc: dict[Coords, int] = {}
    for a, d in factors:
        d = int(d)
        if d < 0:
            raise ValueError(f"factor multiplicity must be >= 0, got {d}")
        if d:
            k = group.reduce(a)
            acc[k] = acc.get(k, 0) + d
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class ClosedFormSeries:
    """Product of ``(1 + t e^a)^d`` and ``(1 - t e^a)^-d`` factors.

    Factors with multiplicity zero are dropped, equal degrees merged;
    ``*`` concatenates two products over the same group.
    """

    group: FinAbGroup
    plus_factors: tuple[tuple[Coords, int], ...] = ()
    minus_factors: tuple[tuple[Coords, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "plus_factors", _merge_factors(self.plus_factors, self.group))
        object.__setattr__(self, "minus_factors", _merge_factors(self.minus_factors, self.group))

    def __mul__(self, other: "ClosedFormSeries") -> "ClosedFormSeries":
        if not isinstance(other, ClosedFormSeries):
            return NotImplemented
        if other.group != self.group:
            raise GroupMismatch(f"{other.group} != {self.group}")
        return ClosedFormSeries(
            self.group,
            self.plus_factors + other.plus_factors,
            self.minus_factors + other.minus_factors,
        )

    def pushforward(self, hom: GroupHom) -> "ClosedFormSeries":
        """Apply a group homomorphism to every factor degree.

        Expansion commutes with this operation because the induced
        coefficient map is a ring homomorphism.
        """
        if hom.source != self.group:
            raise GroupMismatch(f"hom source {hom.source} != {self.group}")
        return ClosedFormSeries(
            hom.target,
            tuple((hom.apply(a), d) for a, d in self.plus_factors),
            tuple((hom.apply(a), d) for a, d in self.minus_factors),
        )

    def expand(self, order: int) -> "TruncatedSeries":
        """Exact coefficients of the product through ``t**order``."""
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        group = self.group
        coeffs: list[GroupRingElem] = [GroupRingElem.one(group)] + [
            GroupRingElem.zero(group) for _ in range(order)
        ]
        for a, d in self.plus_factors:
            for _ in range(d):
                # multiply by (1 + t e^a): top-down shift-and-add
                for n in range(order, 0, -1):
                    coeffs[n] = coeffs[n] + coeffs[n - 1].translate(a)
        for a, d in self.minus_factors:
            for _ in range(d):
                # multiply by sum_k t^k e^{ka}: bottom-up prefix recurrence
                for n in range(1, order + 1):
                    coeffs[n] = coeffs[n] + coeffs[n - 1].translate(a)
        return TruncatedSeries(group, coeffs)

    def __str__(self) -> str:
        def fmt(a, d, sign):
            key = ",".join(map(str, a))
            return f"(1 {sign} t*e[{key}])^{d}"

        parts = [fmt(a, d, "+") for a, d in self.plus_factors]
        parts += [fmt(a, -d, "-") for a, d in self.minus_factors]
        return " ".join(parts) if parts else "1"


class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a series, each in ``Q[G]``."""

    __slots__ = ("group", "_coeffs")

    def __init__(self, group: FinAbGroup, coeffs: Sequence[GroupRingElem]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        for c in coeffs:
            if c.group != group:
                raise GroupMismatch(f"coefficient over {c.group}, series over {group}")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, group: FinAbGroup, order: int) -> "TruncatedSeries":
        return cls(
            group,
            [GroupRingElem.one(group)] + [GroupRingElem.zero(group)] * order,
        )

    @classmethod
    def zero(cls, group: FinAbGroup, order: int) -> "TruncatedSeries":
        return cls(group, [GroupRingElem.zero(group)] * (order + 1))

    @classmethod
    def from_scalars(cls, values: Sequence[Scalar], group: FinAbGroup = TRIVIAL) -> "TruncatedSeries":
        """Series over the trivial group (or constant coefficients) from scalars."""
        return cls(group, [GroupRingElem.from_scalar(group, v) for v in values])

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[GroupRingElem, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> GroupRingElem:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self._coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.group, self._coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected a TruncatedSeries, got {type(other)}")
        if other.group != self.group:
            raise GroupMismatch(f"{other.group} != {self.group}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.group, [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.group, [self._coeffs[i] - other._coeffs[i] for i in range(n + 1)]
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, GroupRingElem)):
            return TruncatedSeries(self.group, [c * other for c in self._coeffs])
        self._check(other)
        n = min(self.order, other.order)
        zero = GroupRingElem.zero(self.group)
        out = [zero] * (n + 1)
        for i, ci in enumerate(self._coeffs[: n + 1]):
            if not ci:
                continue
            for j in range(0, n - i + 1):
                cj = other._coeffs[j]
                if cj:
                    out[i + j] = out[i + j] + ci * cj
        return TruncatedSeries(self.group, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.group == other.group
            and self.order == other.order
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    # -- structural operations -------------------------------------------------

    def multisect(self, r: int, i: int) -> "TruncatedSeries":
        """Keep coefficients with index ``== i (mod r)``, zero the rest.

        The sections over all residues partition the series exactly; the
        classical root-of-unity expression for a section is the numeric
        counterpart (see :func:`TruncatedSeries.eval_complex`).
        """
        if not (isinstance(r, int) and r >= 1 and isinstance(i, int) and 0 <= i < r):
            raise BadResidue(f"need r >= 1 and 0 <= i < r, got r={r}, i={i}")
        zero = GroupRingElem.zero(self.group)
        return TruncatedSeries(
            self.group,
            [c if n % r == i else zero for n, c in enumerate(self._coeffs)],
        )

    def specialize(self, hom: GroupHom) -> "TruncatedSeries":
        """Push every coefficient forward along a group homomorphism."""
        if hom.source != self.group:
            raise GroupMismatch(f"hom source {hom.source} != {self.group}")
        return TruncatedSeries(hom.target, [c.pushforward(hom) for c in self._coeffs])

    # -- numeric evaluation ------------------------------------------------------

    def _component_floats(self) -> dict[Coords, list[float]]:
        comps: dict[Coords, list[float]] = {}
        n = len(self._coeffs)
        for idx, c in enumerate(self._coeffs):
            for k, v in c.as_dict().items():
                arr = comps.get(k)
                if arr is None:
                    arr = [0.0] * n
                    comps[k] = arr
                arr[idx] = float(v)
        return comps

    @property
    def smoothing_window(self) -> int:
        """Partial sums averaged by the evaluators: twice the group exponent.

        Truncated near ``t = -1``, a series over ``G`` has componentwise
        tails that are eventually periodic with period dividing twice the
        exponent of ``G``; averaging that many consecutive partial sums
        cancels the tail to first order.
        """
        return 2 * math.lcm(1, *self.group.invariant_factors)

    def eval_real(self, t: float) -> dict[Coords, float]:
        """Componentwise value of the truncated series at a real point.

        Uses the tapered sum (mean of the last ``smoothing_window`` partial
        sums), which agrees with the bare sum whenever the top retained
        coefficients vanish and is far more stable near ``t = -1``.
        """
        w = self.smoothing_window
        return {k: tapered_eval(vals, float(t), w) for k, vals in self._component_floats().items()}

    def eval_complex(self, z: complex) -> dict[Coords, complex]:
        """Same as :meth:`eval_real` at a complex point."""
        w = self.smoothing_window
        return {k: tapered_eval(vals, complex(z), w) for k, vals in self._component_floats().items()}

    def scalar_values(self) -> list[Scalar]:
        """Coefficients of a trivial-group series as plain scalars."""
        if not self.group.is_trivial:
            raise GroupMismatch("scalar_values needs a series over the trivial group")
        return [c.coeff(()) for c in self._coeffs]

    def __str__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"[{shown}{tail}] (order {self.order} over {self.group})"

    __repr__ = __str__


def lift_single_degree(f: TruncatedSeries, group: FinAbGroup, a: Coords) -> TruncatedSeries:
    """Lift a scalar series so its ``n``-th coefficient sits in degree ``n*a``.

    This realizes the series of a graded space concentrated in powers of a
    single degree; over the subgroup generated by ``a`` it agrees with the
    root-of-unity multisection combination.
    """
    if not f.group.is_trivial:
        raise GroupMismatch("lift_single_degree expects a series over the trivial group")
    a = group.reduce(a)
    coeffs = []
    cur = group.zero()
    for c in f.coeffs:
        coeffs.append(GroupRingElem(group, {cur: c.coeff(())}))
        cur = group.add(cur, a)
    return TruncatedSeries(group, coeffs)
