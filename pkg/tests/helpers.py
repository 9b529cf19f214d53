"""Shared generators for randomized tests: groups, parities, specs, complexes.

Everything takes an explicit ``random.Random`` so each test pins a seed.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from colorchi import (
    AlgebraSpec,
    FinAbGroup,
    GroupRingElem,
    ParityMap,
    SyntheticComplex,
)

SMALL_FACTORS = (1, 2, 2, 3, 4, 4, 6)


def random_group(rng: random.Random, max_order: int = 8, max_rank: int = 2) -> FinAbGroup:
    while True:
        rank = rng.randint(0, max_rank)
        factors = tuple(rng.choice(SMALL_FACTORS) for _ in range(rank))
        group = FinAbGroup(factors)
        if group.order <= max_order:
            return group


def random_parity(rng: random.Random, group: FinAbGroup) -> ParityMap:
    bits = tuple(rng.randint(0, 1) if m % 2 == 0 else 0 for m in group.invariant_factors)
    return ParityMap(group, bits)


def random_dims(rng: random.Random, group: FinAbGroup, total: int) -> dict:
    dims: dict = {}
    elements = list(group.elements())
    for _ in range(total):
        a = rng.choice(elements)
        dims[a] = dims.get(a, 0) + 1
    return dims


def random_spec(
    rng: random.Random,
    *,
    max_order: int = 8,
    max_total_dim: int = 5,
    module_dim: int = 0,
) -> AlgebraSpec:
    group = random_group(rng, max_order=max_order)
    parity = random_parity(rng, group)
    total = rng.randint(0, max_total_dim)
    l_dims = random_dims(rng, group, total)
    m_dims = random_dims(rng, group, module_dim) if module_dim else None
    if m_dims is not None and not m_dims:
        m_dims = {group.zero(): 1}
    return AlgebraSpec(group, parity, l_dims, m_dims)


def random_spec_strict_zero_part(
    rng: random.Random, *, max_order: int = 6, max_total_dim: int = 6
) -> AlgebraSpec:
    """Random spec with dim L_0 > dim L_odd (strict vanishing regime)."""
    while True:
        group = random_group(rng, max_order=max_order)
        parity = random_parity(rng, group)
        odd = parity.odd_elements()
        n_odd = rng.randint(0, min(2, len(odd), max_total_dim - 1)) if odd else 0
        zero_dim = rng.randint(n_odd + 1, max(n_odd + 1, max_total_dim - n_odd))
        dims = {group.zero(): zero_dim}
        for _ in range(n_odd):
            a = rng.choice(odd)
            dims[a] = dims.get(a, 0) + 1
        spec = AlgebraSpec(group, parity, dims)
        if spec.total_dim <= max_total_dim and spec.dim_zero > spec.dim_odd:
            return spec


def random_ring_elem(
    rng: random.Random, group: FinAbGroup, max_coeff: int = 4, density: float = 0.5
) -> GroupRingElem:
    coeffs = {}
    for a in group.elements():
        if rng.random() < density:
            coeffs[a] = rng.randint(1, max_coeff)
    return GroupRingElem(group, coeffs)


def random_rational_elem(
    rng: random.Random, group: FinAbGroup, span: int = 6
) -> GroupRingElem:
    coeffs = {}
    for a in group.elements():
        if rng.random() < 0.6:
            coeffs[a] = Fraction(rng.randint(-span, span), rng.randint(1, 4))
    return GroupRingElem(group, coeffs)


def random_synthetic_complex(
    rng: random.Random, *, max_length: int = 10, max_order: int = 6
) -> SyntheticComplex:
    group = random_group(rng, max_order=max_order)
    length = rng.randint(1, max_length)
    boundaries = [random_ring_elem(rng, group, max_coeff=3) for _ in range(length)]
    cohomology = [random_ring_elem(rng, group, max_coeff=3) for _ in range(length + 1)]
    return SyntheticComplex.from_free(group, boundaries, cohomology)


def ordinary_reference_coefficients(dim_even: int, dim_odd: int, order: int) -> list[int]:
    """Coefficients of ``(1+t)^E / (1-t)^O`` computed by binomials alone."""
    out = []
    for n in range(order + 1):
        total = 0
        for j in range(0, min(dim_even, n) + 1):
            rest = n - j
            if dim_odd == 0:
                total += math.comb(dim_even, j) if rest == 0 else 0
            else:
                total += math.comb(dim_even, j) * math.comb(dim_odd + rest - 1, rest)
        out.append(total)
    return out
