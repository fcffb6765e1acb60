import random

import pytest

from cmgenus2.cantor import (
    GenusTwoCurve,
    IDENTITY,
    MumfordDivisor,
    all_divisors,
    check_structure_theorem,
    compose,
    enumerate_jacobian,
    is_valid_divisor,
    negate,
    p_add,
    p_divmod,
    p_mul,
    p_xgcd,
    padded_invariant_factors,
    point_count_order,
    random_curve,
    scalar_mul,
)
from cmgenus2.frobenius import hasse_weil_check

C5 = GenusTwoCurve(5, (0, 1, 0, 0, 0, 1))  # y^2 = x^5 + x over F_5


def test_poly_divmod_random():
    rng = random.Random(41)
    for _ in range(300):
        p = rng.choice((5, 7, 11))
        a = tuple(rng.randrange(p) for _ in range(rng.randrange(7)))
        b = tuple(rng.randrange(p) for _ in range(rng.randrange(1, 5)))
        a = tuple(a[: len(a)])
        if not b or all(x == 0 for x in b):
            continue
        from cmgenus2.cantor import _trim

        a, b = _trim(list(a)), _trim(list(b))
        if not b:
            continue
        q, r = p_divmod(a, b, p)
        assert p_add(p_mul(q, b, p), r, p) == a
        assert len(r) < len(b)


def test_poly_xgcd_bezout():
    rng = random.Random(42)
    for _ in range(300):
        p = rng.choice((5, 7, 13))
        from cmgenus2.cantor import _trim

        a = _trim([rng.randrange(p) for _ in range(rng.randrange(6))])
        b = _trim([rng.randrange(p) for _ in range(rng.randrange(6))])
        g, s, t = p_xgcd(a, b, p)
        assert p_add(p_mul(s, a, p), p_mul(t, b, p), p) == g
        if g:
            assert g[-1] == 1
            assert p_divmod(a, g, p)[1] == ()
            assert p_divmod(b, g, p)[1] == ()


def test_curve_validation():
    with pytest.raises(ValueError):
        GenusTwoCurve(4, (0, 1, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        GenusTwoCurve(67, (0, 1, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        GenusTwoCurve(5, (0, 1, 0, 0, 1))  # degree 4
    with pytest.raises(ValueError):
        GenusTwoCurve(5, (0, 0, 0, 0, 0, 1))  # x^5 has multiple root 0


def test_all_divisors_are_valid():
    for curve in (C5, GenusTwoCurve(7, (3, 1, 0, 0, 0, 1))):
        ds = all_divisors(curve)
        assert len(ds) == len(set(ds))
        for d in ds:
            assert is_valid_divisor(d, curve)


def test_identity_and_inverses():
    ds = all_divisors(C5)
    for d in ds:
        assert compose(IDENTITY, d, C5) == d
        assert compose(d, negate(d, C5), C5) == IDENTITY


def test_group_law_commutative_associative():
    rng = random.Random(43)
    for curve in (C5, GenusTwoCurve(11, (5, 2, 0, 1, 0, 1))):
        ds = all_divisors(curve)
        for _ in range(200):
            a, b, c = rng.choice(ds), rng.choice(ds), rng.choice(ds)
            ab = compose(a, b, curve)
            assert ab == compose(b, a, curve)
            assert ab in ds or is_valid_divisor(ab, curve)
            assert compose(ab, c, curve) == compose(a, compose(b, c, curve), curve)


def test_closure():
    ds = set(all_divisors(C5))
    for a in ds:
        for b in ds:
            assert compose(a, b, C5) in ds


def test_element_orders_divide_group_order():
    N, _ = enumerate_jacobian(C5)
    for d in all_divisors(C5):
        assert scalar_mul(N, d, C5) == IDENTITY


def test_enumerate_reference_curve():
    N, factors = enumerate_jacobian(C5)
    assert hasse_weil_check(N, 5)  # (sqrt(5)-1)^4 ~ 2.3, (sqrt(5)+1)^4 ~ 109.7
    assert 3 <= N <= 109
    assert 1 <= len(factors) <= 4
    prod = 1
    for d in factors:
        prod *= d
    assert prod == N


def test_order_against_point_count_identity():
    rng = random.Random(44)
    for _ in range(12):
        curve = random_curve(rng, pmax=23)
        N, _ = enumerate_jacobian(curve)
        assert N == point_count_order(curve), curve


def test_enumeration_at_largest_supported_field():
    rng = random.Random(61)
    curve = random_curve(rng, pmax=61, pmin=53)
    N, factors = enumerate_jacobian(curve)
    assert N == point_count_order(curve)
    assert hasse_weil_check(N, curve.p)
    assert (curve.p - 1) % padded_invariant_factors(factors)[1] == 0


def test_torsion_counts_match_structure():
    # number of d-torsion elements is prod_i gcd(d, d_i)
    rng = random.Random(45)
    for _ in range(6):
        curve = random_curve(rng, pmax=13)
        _, factors = enumerate_jacobian(curve)
        ds = all_divisors(curve)
        for d in (2, 3):
            count = sum(1 for x in ds if scalar_mul(d, x, curve) == IDENTITY)
            expect = 1
            import math

            for fac in factors:
                expect *= math.gcd(d, fac)
            assert count == expect


def test_padded_invariant_factors():
    assert padded_invariant_factors([2, 6]) == (1, 1, 2, 6)
    assert padded_invariant_factors([5]) == (1, 1, 1, 5)
    with pytest.raises(ValueError):
        padded_invariant_factors([3, 4])
    with pytest.raises(ValueError):
        padded_invariant_factors([2, 2, 2, 2, 2])


def test_structure_theorem_on_random_curves():
    rng = random.Random(46)
    for _ in range(10):
        curve = random_curve(rng, pmax=19)
        assert check_structure_theorem(curve)
        N, factors = enumerate_jacobian(curve)
        assert hasse_weil_check(N, curve.p)
        padded = padded_invariant_factors(factors)
        assert (curve.p - 1) % padded[1] == 0


def test_random_curve_determinism():
    a = random_curve(random.Random(7), pmax=31)
    b = random_curve(random.Random(7), pmax=31)
    assert a == b


def test_three_invariant_factors_frozen():
    # expected values frozen from the independent torsion-count oracle:
    # d-torsion size equals prod gcd(d, d_i) for d in 2..12
    curve = GenusTwoCurve(7, (1, 4, 3, 4, 5, 1))
    N, factors = enumerate_jacobian(curve)
    assert N == 64
    assert factors == [2, 2, 16]
    assert padded_invariant_factors(factors) == (1, 2, 2, 16)
    assert (curve.p - 1) % 2 == 0
    import math

    ds = all_divisors(curve)
    for d in (2, 4, 8, 16):
        count = sum(1 for x in ds if scalar_mul(d, x, curve) == IDENTITY)
        expect = 1
        for fac in factors:
            expect *= math.gcd(d, fac)
        assert count == expect
