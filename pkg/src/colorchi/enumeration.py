"""Brute-force monomial counting, the ground truth for every closed form.

A graded basis monomial ``x_1 ... x_n`` over the generators of an algebra
uses each even-parity generator at most once and each odd-parity
generator any number of times; its group degree is the sum of the
generator degrees.  :func:`count_basis` enumerates these multisets
directly, generator by generator, with no series arithmetic involved, so
its counts are an independent oracle for the expanded closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochain import AlgebraSpec, complex_closed_form
from .groups import Coords, FinAbGroup
from .groupring import GroupRingElem

MAX_TOTAL_DIM = 12
MAX_ORDER = 24


class TooLarge(ValueError):
    """Inputs beyond the enumeration guardrails."""


@dataclass(frozen=True)
class MonomialCount:
    """Exact basis counts per word length, as group-ring elements."""

    group: FinAbGroup
    counts: tuple[GroupRingElem, ...]

    @property
    def order(self) -> int:
        return len(self.counts) - 1


def count_basis(spec: AlgebraSpec, order: int) -> MonomialCount:
    """Count graded basis monomials of each length ``0..order``.

    Enumerates multiplicity assignments over the generator list (0/1 for
    even generators, up to the remaining length budget for odd ones) and
    tallies one monomial per assignment.
    """
    if spec.total_dim > MAX_TOTAL_DIM:
        raise TooLarge(f"total dimension {spec.total_dim} exceeds {MAX_TOTAL_DIM}")
    if order > MAX_ORDER:
        raise TooLarge(f"order {order} exceeds {MAX_ORDER}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    group = spec.group
    generators: list[tuple[Coords, bool]] = []
    for a, d in spec.L_dims.items():
        generators.extend([(a, spec.parity.is_even(a))] * d)
    tallies: list[dict[Coords, int]] = [{} for _ in range(order + 1)]

    def walk(idx: int, length: int, degree: Coords) -> None:
        if idx == len(generators):
            tallies[length][degree] = tallies[length].get(degree, 0) + 1
            return
        a, even = generators[idx]
        walk(idx + 1, length, degree)  # multiplicity 0
        top = 1 if even else order - length
        step = degree
        for mult in range(1, top + 1):
            step = group.add(step, a)
            walk(idx + 1, length + mult, step)

    walk(0, 0, group.zero())
    return MonomialCount(
        group, tuple(GroupRingElem(group, t) for t in tallies)
    )


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of the oracle comparison; ``mismatch`` holds the first offender."""

    ok: bool
    mismatch: tuple[int, GroupRingElem, GroupRingElem] | None = None

    def __str__(self) -> str:
        if self.ok:
            return "closed form matches enumeration"
        n, counted, expanded = self.mismatch
        return f"mismatch at degree {n}: enumeration {counted}, closed form {expanded}"


def verify_closed_form(spec: AlgebraSpec, order: int) -> VerifyResult:
    """Compare the expanded closed form against brute-force counts, exactly."""
    counted = count_basis(spec, order)
    expanded = complex_closed_form(spec).expand(order)
    for n in range(order + 1):
        if counted.counts[n] != expanded.coefficient(n):
            return VerifyResult(False, (n, counted.counts[n], expanded.coefficient(n)))
    return VerifyResult(True)
