"""Dimension data of graded algebras and their cochain complexes.

An :class:`AlgebraSpec` records everything the series machinery needs
about a color Lie algebra: the grading group, the parity split, optional
commutation factor, and the graded dimensions of the algebra ``L`` and a
module ``M``.  The bracket and the differential are never represented;
all quantities in scope depend on dimensions alone.

The cochain complex of such an algebra has ``n``-cochains
``Hom(E^n L, M)`` where ``E^n`` is the graded exterior power: even-degree
basis vectors multiply exterior-style (multiplicity at most one) and
odd-degree vectors symmetric-style (unbounded multiplicity).  Its
Poincare series is therefore the closed-form product

    prod_{a even} (1 + t e^a)^{dim L_a} * prod_{a odd} (1 - t e^a)^{-dim L_a}

times the constant ``dim_G M``.

:class:`SyntheticComplex` holds the dimension data of an abstract cochain
complex (cochains, cocycles, coboundaries, cohomology) subject to the two
exact sequences that any differential induces, and
:func:`check_one_plus_t` verifies the resulting factorization identity
``chi(C,t) - chi(H,t) = (1+t) chi(B,t)``.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Mapping, Sequence

from .groups import CommutationFactor, Coords, FinAbGroup, GroupHom, ParityMap
from .groupring import GroupMismatch, GroupRingElem, Scalar
from .series import ClosedFormSeries, TruncatedSeries


class InconsistentComplex(ValueError):
    """Dimension data violating the exact-sequence constraints."""


def _clean_dims(group: FinAbGroup, dims: Mapping[Coords, int], what: str) -> dict[Coords, int]:
    out: dict[Coords, int] = {}
    for key, val in dims.items():
        if not isinstance(val, int) or isinstance(val, bool):
            raise ValueError(f"{what} dimension at {key} must be an int, got {val!r}")
        if val < 0:
            raise ValueError(f"{what} dimension at {key} is negative: {val}")
        if val:
            k = group.reduce(key)
            out[k] = out.get(k, 0) + val
    return dict(sorted(out.items()))


class AlgebraSpec:
    """Grading group, parity, optional commutation factor, graded dimensions.

    ``L_dims`` and ``M_dims`` map group elements to nonnegative integers;
    zero entries are dropped.  ``M_dims`` defaults to the trivial module
    (dimension 1 in degree zero).  A supplied commutation factor is
    validated against the parity map at construction time.
    """

    __slots__ = ("group", "parity", "epsilon", "_L", "_M")

    def __init__(
        self,
        group: FinAbGroup,
        parity: ParityMap,
        L_dims: Mapping[Coords, int],
        M_dims: Mapping[Coords, int] | None = None,
        epsilon: CommutationFactor | None = None,
    ):
        if parity.group != group:
            raise GroupMismatch(f"parity over {parity.group}, algebra over {group}")
        if epsilon is not None:
            if epsilon.group != group:
                raise GroupMismatch(f"commutation factor over {epsilon.group}, algebra over {group}")
            report = epsilon.validate(parity)
            if not report.ok:
                raise ValueError(f"invalid commutation factor: {report}")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "epsilon", epsilon)
        object.__setattr__(self, "_L", _clean_dims(group, L_dims, "algebra"))
        if M_dims is None:
            M_dims = {group.zero(): 1}
        object.__setattr__(self, "_M", _clean_dims(group, M_dims, "module"))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraSpec is immutable")

    @property
    def L_dims(self) -> Mapping[Coords, int]:
        return MappingProxyType(self._L)

    @property
    def M_dims(self) -> Mapping[Coords, int]:
        return MappingProxyType(self._M)

    def algebra_dim(self) -> GroupRingElem:
        """``dim_G L`` as a group-ring element."""
        return GroupRingElem(self.group, self._L)

    def module_dim(self) -> GroupRingElem:
        """``dim_G M`` as a group-ring element."""
        return GroupRingElem(self.group, self._M)

    @property
    def dim_even(self) -> int:
        return sum(d for a, d in self._L.items() if self.parity.is_even(a))

    @property
    def dim_odd(self) -> int:
        return sum(d for a, d in self._L.items() if not self.parity.is_even(a))

    @property
    def dim_zero(self) -> int:
        """Dimension of the component at the group identity (not of the even part)."""
        return self._L.get(self.group.zero(), 0)

    @property
    def total_dim(self) -> int:
        return sum(self._L.values())

    def supported_odd_degrees(self) -> tuple[Coords, ...]:
        return tuple(a for a, d in self._L.items() if d and not self.parity.is_even(a))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        return (
            self.group == other.group
            and self.parity == other.parity
            and self.epsilon == other.epsilon
            and self._L == other._L
            and self._M == other._M
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.group,
                self.parity,
                self.epsilon,
                tuple(self._L.items()),
                tuple(self._M.items()),
            )
        )

    def __repr__(self) -> str:
        eps = ", eps" if self.epsilon is not None else ""
        return f"AlgebraSpec({self.group}, L={self._L}, M={self._M}{eps})"


def complex_closed_form(spec: AlgebraSpec) -> ClosedFormSeries:
    """Closed-form Poincare series of the cochain complex of ``spec``.

    Even degrees contribute plus factors, odd degrees minus factors; the
    module is not applied here (see :func:`with_module`).
    """
    plus = []
    minus = []
    for a, d in spec.L_dims.items():
        if spec.parity.is_even(a):
            plus.append((a, d))
        else:
            minus.append((a, d))
    return ClosedFormSeries(spec.group, tuple(plus), tuple(minus))


def with_module(series: TruncatedSeries, spec: AlgebraSpec) -> TruncatedSeries:
    """Multiply every coefficient by ``dim_G M``.

    The series must still live over the grading group of ``spec``;
    specialize to a smaller group only after applying the module (the
    two operations commute, both being coefficientwise ring maps).
    """
    if series.group != spec.group:
        raise GroupMismatch(f"series over {series.group}, algebra over {spec.group}")
    return series * spec.module_dim()


def default_order(spec: AlgebraSpec) -> int:
    """Default truncation order: ``max(32, 4 * |G| * dim L)``."""
    return max(32, 4 * spec.group.order * spec.total_dim)


def cochain_dim(spec: AlgebraSpec, n: int) -> GroupRingElem:
    """``dim_G`` of the ``n``-cochains ``Hom(E^n L, M)``."""
    if n < 0:
        raise ValueError(f"cochain degree must be >= 0, got {n}")
    series = with_module(complex_closed_form(spec).expand(n), spec)
    return series.coefficient(n)


class SyntheticComplex:
    """Dimension data ``(C^n, Z^n, B^n, H^n)`` of a finite cochain complex.

    The four sequences must satisfy, degree by degree in the group ring,

        ``C^n = Z^n + B^{n+1}``   and   ``Z^n = B^n + H^n``,

    with ``B^0 = 0`` and ``B^{top+1} = 0``; these are the dimension
    shadows of the short exact sequences linking a complex, its cocycles,
    coboundaries and cohomology.
    """

    __slots__ = ("group", "cochains", "cocycles", "coboundaries", "cohomology")

    def __init__(
        self,
        group: FinAbGroup,
        cochains: Sequence[GroupRingElem],
        cocycles: Sequence[GroupRingElem],
        coboundaries: Sequence[GroupRingElem],
        cohomology: Sequence[GroupRingElem],
    ):
        rows = (tuple(cochains), tuple(cocycles), tuple(coboundaries), tuple(cohomology))
        length = len(rows[0])
        if length == 0:
            raise InconsistentComplex("a complex needs at least degree 0")
        if any(len(r) != length for r in rows):
            raise InconsistentComplex("C, Z, B, H must have equal length")
        for r in rows:
            for x in r:
                if x.group != group:
                    raise GroupMismatch(f"entry over {x.group}, complex over {group}")
        C, Z, B, H = rows
        zero = GroupRingElem.zero(group)
        if B[0] != zero:
            raise InconsistentComplex("coboundaries must vanish in degree 0")
        for n in range(length):
            next_b = B[n + 1] if n + 1 < length else zero
            if C[n] != Z[n] + next_b:
                raise InconsistentComplex(
                    f"degree {n}: cochains {C[n]} != cocycles {Z[n]} + next coboundaries {next_b}"
                )
            if Z[n] != B[n] + H[n]:
                raise InconsistentComplex(
                    f"degree {n}: cocycles {Z[n]} != coboundaries {B[n]} + cohomology {H[n]}"
                )
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "cochains", C)
        object.__setattr__(self, "cocycles", Z)
        object.__setattr__(self, "coboundaries", B)
        object.__setattr__(self, "cohomology", H)

    def __setattr__(self, name, value):
        raise AttributeError("SyntheticComplex is immutable")

    @property
    def length(self) -> int:
        """Top degree carrying data."""
        return len(self.cochains) - 1

    @classmethod
    def from_free(
        cls,
        group: FinAbGroup,
        coboundaries: Sequence[GroupRingElem],
        cohomology: Sequence[GroupRingElem],
    ) -> "SyntheticComplex":
        """Build a valid complex from freely chosen ``B^1..B^L`` and ``H^0..H^L``.

        ``coboundaries`` lists the data for degrees ``1..L`` (degree 0 is
        forced to zero); cocycles and cochains are derived from the exact
        sequences, so any choice of nonnegative data here is consistent.
        """
        H = tuple(cohomology)
        if not H:
            raise InconsistentComplex("need cohomology data for degree 0 at least")
        length = len(H)
        B = [GroupRingElem.zero(group), *coboundaries]
        if len(B) != length:
            raise InconsistentComplex(
                f"expected {length - 1} coboundary entries for degrees 1..{length - 1}, got {len(B) - 1}"
            )
        zero = GroupRingElem.zero(group)
        Z = [B[n] + H[n] for n in range(length)]
        C = [Z[n] + (B[n + 1] if n + 1 < length else zero) for n in range(length)]
        return cls(group, C, Z, B, H)

    def series(self, kind: str, order: int | None = None) -> TruncatedSeries:
        """Poincare series of one of the four rows, zero-extended to ``order``.

        ``kind`` is one of ``"C"``, ``"Z"``, ``"B"``, ``"H"``, or
        ``"B-shifted"`` for the coboundary series indexed by the degree
        that produces the boundary (coefficient of ``t^n`` is ``B^{n+1}``).
        """
        rows = {
            "C": self.cochains,
            "Z": self.cocycles,
            "B": self.coboundaries,
            "B-shifted": self.coboundaries[1:],
            "H": self.cohomology,
        }
        if kind not in rows:
            raise ValueError(f"kind must be one of C, Z, B, B-shifted, H, got {kind!r}")
        data = list(rows[kind])
        if order is None:
            order = self.length + 1
        zero = GroupRingElem.zero(self.group)
        while len(data) < order + 1:
            data.append(zero)
        return TruncatedSeries(self.group, data[: order + 1])


def check_one_plus_t(complex_: SyntheticComplex) -> tuple[bool, TruncatedSeries]:
    """Verify ``chi(C,t) - chi(H,t) = (1+t) chi(B,t)`` exactly.

    ``chi(B,t)`` is the coboundary series indexed by the degree producing
    the boundary (``sum_n B^{n+1} t^n``); with the subspace-indexed series
    the same identity reads ``t (chi(C) - chi(H)) = (1+t) sum_n B^n t^n``.
    Returns ``(ok, residual)`` where the residual series must vanish for
    any complex satisfying the exact-sequence constraints.
    """
    order = complex_.length + 1
    group = complex_.group
    one_plus_t = TruncatedSeries(
        group,
        [GroupRingElem.one(group), GroupRingElem.one(group)]
        + [GroupRingElem.zero(group)] * (order - 1),
    )
    lhs = complex_.series("C", order) - complex_.series("H", order)
    rhs = one_plus_t * complex_.series("B-shifted", order)
    residual = lhs - rhs
    return residual.is_zero(), residual
