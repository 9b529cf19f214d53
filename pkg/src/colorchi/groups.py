"""Finite abelian groups in invariant-factor form.

A group is given as ``Z_{m_1} x ... x Z_{m_k}`` with every ``m_i >= 1``;
the empty factor list is the trivial group.  Elements are plain tuples of
reduced residues, one per factor, so they can be used directly as dict
keys.  The group object itself carries all element arithmetic.

On top of the bare group this module provides:

* :class:`ParityMap` -- a homomorphism to ``Z_2`` splitting the group into
  even and odd elements (the grading used by every dimension formula);
* :class:`GroupHom` -- homomorphisms between groups, given by generator
  images;
* :class:`CommutationFactor` -- a bicharacter stored as an integer
  exponent matrix for a fixed primitive root of unity, with an exact
  axiom checker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterator

Coords = tuple[int, ...]


class NonPositiveFactor(ValueError):
    """An invariant factor smaller than 1 was supplied."""


class IllDefinedParity(ValueError):
    """Parity bits that do not define a homomorphism to Z_2."""


class InvalidHom(ValueError):
    """Generator images incompatible with the generator orders."""


@dataclass(frozen=True)
class FinAbGroup:
    """``Z_{m_1} x ... x Z_{m_k}`` with elements as residue tuples.

    >>> G = FinAbGroup((4, 2))
    >>> G.order
    8
    >>> G.add((3, 1), (2, 1))
    (1, 0)
    >>> G.element_order((1, 0))
    4
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(m) for m in self.invariant_factors)
        if any(m < 1 for m in factors):
            raise NonPositiveFactor(f"invariant factors must be >= 1, got {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def zero(self) -> Coords:
        return (0,) * self.rank

    def generator(self, i: int) -> Coords:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def reduce(self, coords) -> Coords:
        """Reduce arbitrary integer coordinates into canonical residues."""
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise ValueError(
                f"element has {len(coords)} coordinates, group has rank {self.rank}"
            )
        return tuple(int(c) % m for c, m in zip(coords, self.invariant_factors))

    def contains(self, coords) -> bool:
        try:
            return tuple(coords) == self.reduce(coords)
        except ValueError:
            return False

    def add(self, a: Coords, b: Coords) -> Coords:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.invariant_factors))

    def neg(self, a: Coords) -> Coords:
        return tuple((-x) % m for x, m in zip(a, self.invariant_factors))

    def scale(self, n: int, a: Coords) -> Coords:
        return tuple((n * x) % m for x, m in zip(a, self.invariant_factors))

    def elements(self) -> Iterator[Coords]:
        """All elements in lexicographic order."""
        return _cartesian(*(range(m) for m in self.invariant_factors))

    def element_order(self, a: Coords) -> int:
        """Smallest ``n >= 1`` with ``n * a = 0``."""
        a = self.reduce(a)
        n = 1
        for x, m in zip(a, self.invariant_factors):
            n = math.lcm(n, m // math.gcd(m, x))
        return n

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z{m}" for m in self.invariant_factors)


#: The two-element group used as the target of every parity map.
Z2 = FinAbGroup((2,))

#: The trivial group, target of the "ordinary" specialization.
TRIVIAL = FinAbGroup(())


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by the images of the canonical generators.

    Construction validates that each generator image is killed by the
    generator's order, which is exactly the condition for the assignment
    to extend to a homomorphism.
    """

    source: FinAbGroup
    target: FinAbGroup
    images: tuple[Coords, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.source.rank:
            raise InvalidHom(
                f"expected {self.source.rank} generator images, got {len(self.images)}"
            )
        images = tuple(self.target.reduce(im) for im in self.images)
        for i, (m, im) in enumerate(zip(self.source.invariant_factors, images)):
            if self.target.scale(m, im) != self.target.zero():
                raise InvalidHom(
                    f"generator {i} has order {m} but its image {im} is not killed by {m}"
                )
        object.__setattr__(self, "images", images)

    def apply(self, a: Coords) -> Coords:
        a = self.source.reduce(a)
        out = self.target.zero()
        for x, im in zip(a, self.images):
            out = self.target.add(out, self.target.scale(x, im))
        return out

    def __call__(self, a: Coords) -> Coords:
        return self.apply(a)

    @classmethod
    def identity(cls, group: FinAbGroup) -> "GroupHom":
        return cls(group, group, tuple(group.generator(i) for i in range(group.rank)))

    @classmethod
    def collapse(cls, group: FinAbGroup) -> "GroupHom":
        """The unique homomorphism onto the trivial group."""
        return cls(group, TRIVIAL, ((),) * group.rank)


@dataclass(frozen=True)
class ParityMap:
    """Homomorphism ``G -> Z_2`` given by one bit per generator.

    A bit may be set only on a generator of even order; otherwise the
    assignment does not descend to the quotient and construction raises
    :class:`IllDefinedParity`.  Consequently every odd element of a valid
    parity map has even order.

    >>> p = ParityMap(FinAbGroup((2,)), (1,))
    >>> p.parity((0,)), p.parity((1,))
    (0, 1)
    """

    group: FinAbGroup
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if len(bits) != self.group.rank:
            raise IllDefinedParity(
                f"expected {self.group.rank} parity bits, got {len(bits)}"
            )
        if any(b not in (0, 1) for b in bits):
            raise IllDefinedParity(f"parity bits must be 0 or 1, got {bits}")
        for i, (m, b) in enumerate(zip(self.group.invariant_factors, bits)):
            if b and m % 2 == 1:
                raise IllDefinedParity(
                    f"generator {i} has odd order {m}; its parity bit must be 0"
                )
        object.__setattr__(self, "bits", bits)

    @classmethod
    def all_even(cls, group: FinAbGroup) -> "ParityMap":
        return cls(group, (0,) * group.rank)

    def parity(self, a: Coords) -> int:
        a = self.group.reduce(a)
        return sum(b * x for b, x in zip(self.bits, a)) % 2

    def is_even(self, a: Coords) -> bool:
        return self.parity(a) == 0

    def even_elements(self) -> list[Coords]:
        return [a for a in self.group.elements() if self.parity(a) == 0]

    def odd_elements(self) -> list[Coords]:
        return [a for a in self.group.elements() if self.parity(a) == 1]

    def to_hom(self) -> GroupHom:
        """The same map packaged as a homomorphism onto ``Z2``."""
        return GroupHom(self.group, Z2, tuple((b,) for b in self.bits))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a commutation-factor check: empty violations == valid."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "valid commutation factor"
        return "; ".join(self.violations)


@dataclass(frozen=True)
class CommutationFactor:
    """Bicharacter ``eps(a, b) = zeta ** (a . B . b)`` for a fixed root of unity.

    ``zeta`` is a primitive ``root_order``-th root of unity and ``B`` is an
    integer matrix taken modulo ``root_order``, one row/column per
    generator.  Values are never stored as floats; all checks work on the
    integer exponents.
    """

    group: FinAbGroup
    root_order: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        e = int(self.root_order)
        if e < 1:
            raise ValueError(f"root order must be >= 1, got {e}")
        k = self.group.rank
        rows = tuple(tuple(int(x) % e for x in row) for row in self.exponents)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise ValueError(f"exponent matrix must be {k}x{k}")
        object.__setattr__(self, "root_order", e)
        object.__setattr__(self, "exponents", rows)

    def exponent(self, a: Coords, b: Coords) -> int:
        """Exponent of the root of unity in ``eps(a, b)``, modulo root_order."""
        a = self.group.reduce(a)
        b = self.group.reduce(b)
        total = 0
        for i, x in enumerate(a):
            if x:
                row = self.exponents[i]
                total += x * sum(r * y for r, y in zip(row, b))
        return total % self.root_order

    def value(self, a: Coords, b: Coords) -> complex:
        """Numeric value of ``eps(a, b)``; for display and crosschecks only."""
        import cmath

        return cmath.exp(2j * cmath.pi * self.exponent(a, b) / self.root_order)

    def diagonal_sign(self, a: Coords) -> int | None:
        """+1 or -1 when ``eps(a, a)`` is real, else None."""
        q = self.exponent(a, a)
        if q == 0:
            return 1
        if 2 * q == self.root_order:
            return -1
        return None

    def validate(self, parity: ParityMap) -> ValidationReport:
        """Check the bicharacter axioms and the parity of the diagonal.

        Reported violations:

        * ``skew``: some generator pair with ``B_ij + B_ji != 0`` modulo the
          root order, which breaks ``eps(a,b) eps(b,a) = 1``;
        * ``additivity``: some generator whose order does not kill its row
          or column exponents, so the bilinear form is not well defined on
          the quotient (equivalently, bi-additivity fails on wraparound);
        * ``diagonal``: some element with ``eps(a, a)`` different from
          ``(-1)**parity(a)``.
        """
        if parity.group != self.group:
            raise ValueError("parity map belongs to a different group")
        e = self.root_order
        ms = self.group.invariant_factors
        violations: list[str] = []
        k = self.group.rank
        for i in range(k):
            for j in range(k):
                if (self.exponents[i][j] + self.exponents[j][i]) % e:
                    violations.append(
                        f"skew: B[{i}][{j}] + B[{j}][{i}] = "
                        f"{self.exponents[i][j] + self.exponents[j][i]} != 0 (mod {e})"
                    )
                if (ms[i] * self.exponents[i][j]) % e:
                    violations.append(
                        f"additivity: order {ms[i]} of generator {i} does not kill "
                        f"B[{i}][{j}] = {self.exponents[i][j]} (mod {e})"
                    )
        for a in self.group.elements():
            sign = self.diagonal_sign(a)
            if sign is None:
                violations.append(f"diagonal: eps({a},{a}) is not +1 or -1")
            elif sign != (-1) ** parity.parity(a):
                violations.append(
                    f"diagonal: eps({a},{a}) = {sign:+d} but parity({a}) = {parity.parity(a)}"
                )
        return ValidationReport(tuple(violations))


def super_commutation_factor() -> CommutationFactor:
    """The standard sign factor ``eps(a, b) = (-1)**(a*b)`` on ``Z2``."""
    return CommutationFactor(Z2, 2, ((1,),))
