"""Exact arithmetic in the rational group algebra ``Q[G]``.

Elements are finitely supported maps from group elements to rationals,
stored in canonical form (no explicit zeros, integer values kept as
``int``).  This is where graded dimensions and characteristics live: the
dimension of a graded space is ``sum (dim V_a) e^a``, an element of
``Z[G]``, and a characteristic is the same kind of object with rational
coefficients.

>>> from colorchi.groups import Z2
>>> theta = GroupRingElem.basis(Z2, (1,))
>>> (1 + theta) * (1 - theta)
GroupRingElem(Z2, 0)
>>> (2 + 3 * theta).augment()
5
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .groups import Coords, FinAbGroup, GroupHom, Z2

Scalar = Union[int, Fraction]


class GroupMismatch(ValueError):
    """Operands live over different groups."""


class OddOrder(ValueError):
    """An operation requiring an even-order element got an odd-order one."""


class ZeroElement(ValueError):
    """The zero element was passed where a nonzero one is required."""


def _norm_scalar(v: Scalar) -> Scalar:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class GroupRingElem:
    """Immutable element of ``Q[G]`` with exact coefficients.

    Supports ``+``, ``-``, ``*`` (convolution, or scalar multiplication by
    an ``int``/``Fraction``) and ``**`` for small nonnegative powers.
    """

    __slots__ = ("group", "_coeffs")

    def __init__(self, group: FinAbGroup, coeffs: Mapping[Coords, Scalar] | None = None):
        acc: dict[Coords, Scalar] = {}
        if coeffs:
            for key, val in coeffs.items():
                if not isinstance(val, (int, Fraction)):
                    raise TypeError(f"coefficients must be exact rationals, got {type(val)}")
                k = group.reduce(key)
                acc[k] = acc.get(k, 0) + val
        cleaned = {k: _norm_scalar(v) for k, v in acc.items() if v != 0}
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "_coeffs", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElem is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, group: FinAbGroup) -> "GroupRingElem":
        return cls(group)

    @classmethod
    def one(cls, group: FinAbGroup) -> "GroupRingElem":
        return cls(group, {group.zero(): 1})

    @classmethod
    def basis(cls, group: FinAbGroup, a: Coords) -> "GroupRingElem":
        """The basis element ``e^a``."""
        return cls(group, {group.reduce(a): 1})

    @classmethod
    def from_scalar(cls, group: FinAbGroup, c: Scalar) -> "GroupRingElem":
        return cls(group, {group.zero(): c})

    # -- inspection --------------------------------------------------------

    def coeff(self, a: Coords) -> Scalar:
        return self._coeffs.get(self.group.reduce(a), 0)

    @property
    def support(self) -> tuple[Coords, ...]:
        return tuple(sorted(self._coeffs))

    def items(self) -> Iterator[tuple[Coords, Scalar]]:
        return iter(sorted(self._coeffs.items()))

    def as_dict(self) -> dict[Coords, Scalar]:
        return dict(self._coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._coeffs.values())

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "GroupRingElem | None":
        if isinstance(other, GroupRingElem):
            if other.group != self.group:
                raise GroupMismatch(f"{other.group} != {self.group}")
            return other
        if isinstance(other, (int, Fraction)):
            return GroupRingElem.from_scalar(self.group, other)
        return None

    def __add__(self, other) -> "GroupRingElem":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._coeffs)
        for k, v in rhs._coeffs.items():
            out[k] = out.get(k, 0) + v
        return GroupRingElem(self.group, out)

    __radd__ = __add__

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem(self.group, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other) -> "GroupRingElem":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "GroupRingElem":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other) -> "GroupRingElem":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return GroupRingElem.zero(self.group)
            return GroupRingElem(
                self.group, {k: v * other for k, v in self._coeffs.items()}
            )
        if isinstance(other, GroupRingElem):
            if other.group != self.group:
                raise GroupMismatch(f"{other.group} != {self.group}")
            add = self.group.add
            out: dict[Coords, Scalar] = {}
            for ka, va in self._coeffs.items():
                for kb, vb in other._coeffs.items():
                    k = add(ka, kb)
                    out[k] = out.get(k, 0) + va * vb
            return GroupRingElem(self.group, out)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GroupRingElem":
        if n < 0:
            raise ValueError("negative powers are not defined in the group ring")
        result = GroupRingElem.one(self.group)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def translate(self, a: Coords) -> "GroupRingElem":
        """Multiply by the basis element ``e^a`` (a cheap key shift)."""
        add = self.group.add
        a = self.group.reduce(a)
        return GroupRingElem(self.group, {add(k, a): v for k, v in self._coeffs.items()})

    # -- homomorphisms to smaller rings -------------------------------------

    def augment(self) -> Scalar:
        """Sum of all coefficients: the ring homomorphism ``Q[G] -> Q``.

        On a dimension element this is the ordinary (total) dimension.
        """
        return _norm_scalar(sum(self._coeffs.values(), 0))

    def pushforward(self, hom: GroupHom) -> "GroupRingElem":
        """Image under the ring homomorphism induced by a group homomorphism.

        The coefficient of ``b`` in the result is the sum of coefficients
        over the fiber of ``b``.
        """
        if hom.source != self.group:
            raise GroupMismatch(f"hom source {hom.source} != {self.group}")
        out: dict[Coords, Scalar] = {}
        for k, v in self._coeffs.items():
            kk = hom.apply(k)
            out[kk] = out.get(kk, 0) + v
        return GroupRingElem(hom.target, out)

    # -- protocol ----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GroupRingElem.from_scalar(self.group, other)
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.group == other.group and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.group, frozenset(self._coeffs.items())))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, v in sorted(self._coeffs.items()):
            key = "" if k == self.group.zero() else "e[" + ",".join(map(str, k)) + "]"
            if not key:
                term = str(v)
            elif v == 1:
                term = key
            elif v == -1:
                term = f"-{key}"
            else:
                term = f"{v}*{key}"
            parts.append(term)
        text = " + ".join(parts).replace("+ -", "- ")
        return text

    def __repr__(self) -> str:
        return f"GroupRingElem({self.group}, {self})"


def scaled_char(group: FinAbGroup, a: Coords) -> GroupRingElem:
    """The scaled alternating element ``(1/m) sum_{i<m} (-1)^i e^{ia}``.

    Here ``m`` is the order of ``a``, required to be even (odd elements of
    a parity grading always have even order).  These elements are
    idempotent projections and form the odd-degree building blocks of
    equality-case characteristics.
    """
    a = group.reduce(a)
    m = group.element_order(a)
    if m % 2:
        raise OddOrder(f"element {a} has odd order {m}")
    coeffs: dict[Coords, Scalar] = {}
    cur = group.zero()
    for i in range(m):
        coeffs[cur] = coeffs.get(cur, 0) + (Fraction(1, m) if i % 2 == 0 else Fraction(-1, m))
        cur = group.add(cur, a)
    return GroupRingElem(group, coeffs)


def character_values(x: GroupRingElem) -> list[complex]:
    """Evaluate ``x`` at every complex character of its group."""
    group = x.group
    ms = group.invariant_factors
    values = []
    for chi in group.elements():
        total = 0j
        for a, v in x.items():
            phase = sum(Fraction(c * ai, m) for c, ai, m in zip(chi, a, ms))
            total += float(v) * cmath.exp(2j * cmath.pi * float(phase))
        values.append(total)
    return values


def is_zero_divisor_numeric(x: GroupRingElem, tol: float = 1e-9) -> bool:
    """Numerically test whether a nonzero element is a zero divisor.

    ``Q[G]`` diagonalizes over ``C`` through the characters of ``G``, so
    ``x`` is a zero divisor exactly when some character evaluation
    vanishes.  The test accepts a modulus below ``tol`` as zero.
    """
    if not x:
        raise ZeroElement("the zero element is not classified")
    return min(abs(v) for v in character_values(x)) < tol


@dataclass(frozen=True)
class SuperElem:
    """Element ``even + odd * theta`` of ``Q[Z_2]``, with ``theta^2 = 1``.

    A convenience wrapper for superdimension bookkeeping; it converts
    to and from :class:`GroupRingElem` over the two-element group.

    >>> SuperElem(1, 1) * SuperElem(1, -1)
    SuperElem(even=0, odd=0)
    """

    even: Scalar
    odd: Scalar

    def __add__(self, other: "SuperElem") -> "SuperElem":
        return SuperElem(_norm_scalar(self.even + other.even), _norm_scalar(self.odd + other.odd))

    def __sub__(self, other: "SuperElem") -> "SuperElem":
        return SuperElem(_norm_scalar(self.even - other.even), _norm_scalar(self.odd - other.odd))

    def __mul__(self, other: "SuperElem") -> "SuperElem":
        return SuperElem(
            _norm_scalar(self.even * other.even + self.odd * other.odd),
            _norm_scalar(self.even * other.odd + self.odd * other.even),
        )

    def total(self) -> Scalar:
        """Ordinary dimension of a superspace with this superdimension."""
        return _norm_scalar(self.even + self.odd)

    def to_group_ring(self) -> GroupRingElem:
        return GroupRingElem(Z2, {(0,): self.even, (1,): self.odd})

    @classmethod
    def from_group_ring(cls, x: GroupRingElem) -> "SuperElem":
        if x.group != Z2:
            raise GroupMismatch(f"expected an element over {Z2}, got {x.group}")
        return cls(x.coeff((0,)), x.coeff((1,)))

    def __str__(self) -> str:
        return f"({self.even}|{self.odd})"
