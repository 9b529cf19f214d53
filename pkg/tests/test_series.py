"""Closed-form expansion, series arithmetic, multisection, evaluation."""

from __future__ import annotations

import cmath
import random
from fractions import Fraction

import pytest

from colorchi import (
    BadResidue,
    ClosedFormSeries,
    FinAbGroup,
    GroupHom,
    GroupRingElem,
    ParityMap,
    TRIVIAL,
    TruncatedSeries,
    Z2,
    lift_single_degree,
)

from helpers import random_group


def geometric(order: int) -> TruncatedSeries:
    """1/(1-t) over the trivial group."""
    return ClosedFormSeries(TRIVIAL, (), (((), 1),)).expand(order)


def test_plus_factor_binomial_expansion():
    z4 = FinAbGroup((4,))
    cf = ClosedFormSeries(z4, (((1,), 2),), ())
    s = cf.expand(3)
    e = lambda a: GroupRingElem.basis(z4, (a,))
    assert s.coefficient(0) == GroupRingElem.one(z4)
    assert s.coefficient(1) == 2 * e(1)
    assert s.coefficient(2) == e(2)
    assert s.coefficient(3) == GroupRingElem.zero(z4)


def test_minus_factor_geometric_expansion():
    z4 = FinAbGroup((4,))
    cf = ClosedFormSeries(z4, (), (((1,), 1),))
    s = cf.expand(3)
    for n in range(4):
        assert s.coefficient(n) == GroupRingElem.basis(z4, (n % 4,))


def test_super_odd_line_alternates():
    cf = ClosedFormSeries(Z2, (), (((1,), 1),))
    s = cf.expand(4)
    expected = [
        GroupRingElem.basis(Z2, ((n % 2),)) for n in [0, 1, 0, 1, 0]
    ]
    assert list(s.coeffs) == expected


def test_zero_multiplicity_factors_dropped():
    cf = ClosedFormSeries(Z2, (((0,), 0),), (((1,), 0),))
    assert cf.plus_factors == () and cf.minus_factors == ()
    assert cf.expand(3) == TruncatedSeries.one(Z2, 3)


def test_series_multiplicative_identity():
    rng = random.Random(21)
    g = random_group(rng)
    cf = ClosedFormSeries(g, ((g.zero(), 2),), ())
    s = cf.expand(6)
    assert s * TruncatedSeries.one(g, 6) == s


def test_hand_multiplied_geometric_product():
    # (1+t)/(1-t) = 1 + 2t + 2t^2 + ...
    one_plus_t = TruncatedSeries.from_scalars([1, 1, 0, 0, 0])
    s = one_plus_t * geometric(4)
    assert s.scalar_values() == [1, 2, 2, 2, 2]


def test_expand_is_multiplicative_over_factor_union():
    rng = random.Random(22)
    for _ in range(20):
        g = random_group(rng, max_order=8)
        elems = list(g.elements())

        def rand_cf():
            plus = tuple((rng.choice(elems), rng.randint(0, 2)) for _ in range(2))
            minus = tuple((rng.choice(elems), rng.randint(0, 2)) for _ in range(2))
            return ClosedFormSeries(g, plus, minus)

        cf1, cf2 = rand_cf(), rand_cf()
        n = 12
        assert (cf1 * cf2).expand(n) == cf1.expand(n) * cf2.expand(n)


def test_multisect_even_part_of_geometric():
    s = geometric(6).multisect(2, 0)
    assert s.scalar_values() == [1, 0, 1, 0, 1, 0, 1]


def test_multisect_trivial_section():
    s = geometric(6)
    assert s.multisect(1, 0) == s


def test_multisect_partition():
    rng = random.Random(23)
    for r in (2, 3, 4, 6):
        s = TruncatedSeries.from_scalars([rng.randint(-5, 5) for _ in range(20)])
        total = s.multisect(r, 0)
        for i in range(1, r):
            total = total + s.multisect(r, i)
        assert total == s


def test_multisect_bad_residue():
    s = geometric(4)
    with pytest.raises(BadResidue):
        s.multisect(0, 0)
    with pytest.raises(BadResidue):
        s.multisect(2, 2)


def test_multisect_matches_root_of_unity_filter():
    # index filtering agrees with (1/r) sum_j f(w^j t) / w^{ij} numerically
    rng = random.Random(24)
    s = TruncatedSeries.from_scalars([rng.randint(-3, 3) for _ in range(40)])
    for r in (2, 4, 6):
        omega = cmath.exp(2j * cmath.pi / r)
        for i in range(r):
            section = s.multisect(r, i)
            for _ in range(10):
                t = rng.uniform(-0.95, 0.95)
                direct = section.eval_complex(complex(t))[()]
                combo = sum(
                    s.eval_complex(omega**j * t)[()] / omega ** (i * j) for j in range(r)
                ) / r
                assert abs(direct - combo) < 1e-9


def test_lift_single_degree_wraps_powers():
    f = TruncatedSeries.from_scalars([1, 1, 1])
    lifted = lift_single_degree(f, Z2, (1,))
    assert lifted.coefficient(0) == GroupRingElem.one(Z2)
    assert lifted.coefficient(1) == GroupRingElem.basis(Z2, (1,))
    assert lifted.coefficient(2) == GroupRingElem.one(Z2)


def test_lift_at_identity_keeps_series():
    f = TruncatedSeries.from_scalars([2, 0, 5])
    lifted = lift_single_degree(f, Z2, (0,))
    assert [c.coeff((0,)) for c in lifted.coeffs] == [2, 0, 5]


def test_lift_matches_root_of_unity_combination():
    # the lifted component at i*alpha is the (i mod m)-section of the scalar
    # series; zero padding keeps the evaluation tapers out of the comparison
    rng = random.Random(25)
    z4 = FinAbGroup((4,))
    f = TruncatedSeries.from_scalars([rng.randint(-3, 3) for _ in range(30)] + [0] * 16)
    lifted = lift_single_degree(f, z4, (1,))
    omega = cmath.exp(2j * cmath.pi / 4)
    for i in range(4):
        for _ in range(10):
            t = rng.uniform(-0.9, 0.9)
            combo = sum(f.eval_complex(omega**j * t)[()] / omega ** (i * j) for j in range(4)) / 4
            direct = lifted.eval_complex(complex(t))[(i,)]
            assert abs(direct - combo) < 1e-9


def test_specialize_super_line_to_ordinary():
    cf = ClosedFormSeries(Z2, (), (((1,), 1),))
    s = cf.expand(6).specialize(GroupHom.collapse(Z2))
    assert s.scalar_values() == [1] * 7


def test_specialize_identity():
    rng = random.Random(26)
    g = random_group(rng)
    cf = ClosedFormSeries(g, ((g.zero(), 1),), ())
    s = cf.expand(5)
    assert s.specialize(GroupHom.identity(g)) == s


def test_specialize_even_algebra_has_no_odd_part():
    z4 = FinAbGroup((4,))
    parity = ParityMap(z4, (1,))
    cf = ClosedFormSeries(z4, (((2,), 2), ((0,), 1)), ())
    pushed = cf.expand(6).specialize(parity.to_hom())
    for c in pushed.coeffs:
        assert c.coeff((1,)) == 0


def test_specialize_commutes_with_multiplication():
    rng = random.Random(27)
    for _ in range(15):
        g = random_group(rng, max_order=8)
        hom = GroupHom.collapse(g)
        elems = list(g.elements())
        cf1 = ClosedFormSeries(g, ((rng.choice(elems), 1),), ((rng.choice(elems), 1),))
        cf2 = ClosedFormSeries(g, ((rng.choice(elems), 2),), ())
        a, b = cf1.expand(10), cf2.expand(10)
        assert (a * b).specialize(hom) == a.specialize(hom) * b.specialize(hom)


def test_pushforward_of_closed_form_matches_specialized_expansion():
    rng = random.Random(28)
    for _ in range(15):
        g = random_group(rng, max_order=8)
        parity = ParityMap(g, tuple(m % 2 == 0 and 1 or 0 for m in g.invariant_factors))
        hom = parity.to_hom()
        elems = list(g.elements())
        cf = ClosedFormSeries(
            g,
            ((rng.choice(elems), rng.randint(0, 2)),),
            ((rng.choice(elems), rng.randint(0, 2)),),
        )
        assert cf.pushforward(hom).expand(10) == cf.expand(10).specialize(hom)


def test_eval_real_geometric():
    s = geometric(1000)
    val = s.eval_real(-0.5)[()]
    assert abs(val - 2 / 3) < 1e-6


def test_eval_real_constant():
    s = TruncatedSeries.from_scalars([1])
    for t in (-2.0, -1.0, 0.0, 0.7):
        assert s.eval_real(t)[()] == 1.0


def test_eval_real_near_minus_one():
    one_plus_t = TruncatedSeries.from_scalars([1, 1] + [0] * 4095)
    s = one_plus_t * geometric(4096)
    val = s.eval_real(-1 + 2**-10)[()]
    assert abs(val) < 1e-2


def test_eval_exact_on_padded_polynomial():
    # trailing zero coefficients make the tapered sum exactly the polynomial
    s = TruncatedSeries.from_scalars([1, 2, 1, 0, 0, 0, 0, 0])
    for t in (-0.75, -0.2, 0.5):
        assert abs(s.eval_real(t)[()] - (1 + t) ** 2) < 1e-12
