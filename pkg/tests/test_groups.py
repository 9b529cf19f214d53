"""Group arithmetic, parity maps, homomorphisms, commutation factors."""

from __future__ import annotations

import random

import pytest

from colorchi import (
    CommutationFactor,
    FinAbGroup,
    GroupHom,
    IllDefinedParity,
    InvalidHom,
    NonPositiveFactor,
    ParityMap,
    TRIVIAL,
    Z2,
    super_commutation_factor,
)

from helpers import random_group, random_parity


def test_trivial_group_is_the_empty_product():
    g = FinAbGroup(())
    assert g.order == 1
    assert list(g.elements()) == [()]


def test_z2_elements():
    assert list(Z2.elements()) == [(0,), (1,)]


def test_z4_order():
    assert FinAbGroup((4,)).order == 4


def test_nonpositive_factor_rejected():
    with pytest.raises(NonPositiveFactor):
        FinAbGroup((0,))
    with pytest.raises(NonPositiveFactor):
        FinAbGroup((4, -2))


@pytest.mark.parametrize(
    "factors, element, order",
    [((4,), (1,), 4), ((4,), (2,), 2), ((2, 2), (1, 1), 2), ((6,), (4,), 3), ((), (), 1)],
)
def test_element_order(factors, element, order):
    assert FinAbGroup(factors).element_order(element) == order


def test_group_axioms_on_random_triples():
    rng = random.Random(11)
    for _ in range(50):
        g = random_group(rng, max_order=64, max_rank=3)
        elems = list(g.elements())
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))
        assert g.add(a, g.zero()) == a
        assert g.add(a, g.neg(a)) == g.zero()
        assert g.add(a, b) == g.add(b, a)


def test_parity_superalgebra_split():
    p = ParityMap(Z2, (1,))
    assert p.parity((0,)) == 0
    assert p.parity((1,)) == 1
    assert p.even_elements() == [(0,)]
    assert p.odd_elements() == [(1,)]


def test_parity_forced_even_on_odd_order_group():
    z3 = FinAbGroup((3,))
    p = ParityMap(z3, (0,))
    assert p.odd_elements() == []
    with pytest.raises(IllDefinedParity):
        ParityMap(z3, (1,))


def test_odd_parity_elements_have_even_order():
    rng = random.Random(23)
    for _ in range(40):
        g = random_group(rng, max_order=64, max_rank=3)
        p = random_parity(rng, g)
        for a in p.odd_elements():
            assert g.element_order(a) % 2 == 0


def test_apply_hom_reduction():
    phi = GroupHom(FinAbGroup((4,)), Z2, ((1,),))
    assert phi.apply((3,)) == (1,)


def test_identity_and_collapse_homs():
    g = FinAbGroup((4, 2))
    ident = GroupHom.identity(g)
    collapse = GroupHom.collapse(g)
    for a in g.elements():
        assert ident.apply(a) == a
        assert collapse.apply(a) == ()


def test_invalid_hom_rejected():
    # a generator of order 2 cannot map to an element of order 3
    with pytest.raises(InvalidHom):
        GroupHom(Z2, FinAbGroup((3,)), ((1,),))


def test_hom_respects_addition_exhaustively():
    rng = random.Random(7)
    for _ in range(20):
        g = random_group(rng, max_order=16, max_rank=2)
        p = random_parity(rng, g)
        phi = p.to_hom()
        for a in g.elements():
            for b in g.elements():
                assert phi.apply(g.add(a, b)) == Z2.add(phi.apply(a), phi.apply(b))


def test_super_commutation_factor_is_valid():
    eps = super_commutation_factor()
    report = eps.validate(ParityMap(Z2, (1,)))
    assert report.ok
    assert eps.exponent((1,), (1,)) == 1  # eps(1,1) = -1


def test_diagonal_consistency_violation():
    eps = CommutationFactor(Z2, 2, ((0,),))
    report = eps.validate(ParityMap(Z2, (1,)))
    assert not report.ok
    assert any("diagonal" in v for v in report.violations)


def test_skew_violation_on_z4():
    # 1 + 1 = 2 is not 0 mod 4
    eps = CommutationFactor(FinAbGroup((4,)), 4, ((1,),))
    report = eps.validate(ParityMap(FinAbGroup((4,)), (1,)))
    assert any("skew" in v for v in report.violations)


def test_additivity_violation_on_wraparound():
    # order-2 generator with an exponent not killed by 2 mod 4
    eps = CommutationFactor(Z2, 4, ((1,),))
    report = eps.validate(ParityMap(Z2, (0,)))
    assert any("additivity" in v for v in report.violations)


def _random_valid_factor(group, parity, rng):
    """Skew matrix with order-compatible entries and parity-matching diagonal."""
    import math

    e = math.lcm(2, *group.invariant_factors) if group.rank else 2
    ms = group.invariant_factors
    k = group.rank
    mat = [[0] * k for _ in range(k)]
    for i in range(k):
        mat[i][i] = (e // 2) * parity.bits[i]
        for j in range(i + 1, k):
            unit = math.lcm(e // ms[i], e // ms[j])
            val = (unit * rng.randint(0, 3)) % e
            mat[i][j] = val
            mat[j][i] = (-val) % e
    return CommutationFactor(group, e, tuple(tuple(row) for row in mat))


def test_valid_factor_axioms_exhaustive():
    rng = random.Random(3)
    for _ in range(30):
        g = random_group(rng, max_order=64, max_rank=2)
        p = random_parity(rng, g)
        eps = _random_valid_factor(g, p, rng)
        assert eps.validate(p).ok
        e = eps.root_order
        elems = list(g.elements())
        probes = elems[:4]
        for a in elems:
            for b in elems:
                assert (eps.exponent(a, b) + eps.exponent(b, a)) % e == 0
                for c in probes:
                    assert eps.exponent(g.add(a, b), c) == (
                        eps.exponent(a, c) + eps.exponent(b, c)
                    ) % e
                    assert eps.exponent(c, g.add(a, b)) == (
                        eps.exponent(c, a) + eps.exponent(c, b)
                    ) % e
