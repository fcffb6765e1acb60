import math

import pytest

from cmgenus2.cmfield import (
    Basis,
    CMFieldParams,
    FieldCase,
    NonIntegralConversion,
    NotTotallyPositive,
    NotPrimitive,
    NotSquarefree,
    UnsupportedD,
    WrongResidue,
    basis_convert,
    compute_Q,
    field_params_from_basis,
    field_params_to_sqrtd,
    is_primitive,
    require_primitive,
    validate,
)


def test_validate_reference_field():
    field = validate(2, 2, 1)
    assert field.case is FieldCase.CASE23
    assert field.primitive
    assert field.Q == 2


def test_validate_wrong_residue():
    with pytest.raises(WrongResidue):
        validate(4, 1, 1)


def test_validate_not_totally_positive():
    # 1 - sqrt(2) < 0, i.e. a^2 = 1 < b^2 D = 2
    with pytest.raises(NotTotallyPositive):
        validate(2, 1, 1)


def test_validate_not_squarefree():
    with pytest.raises(NotSquarefree):
        validate(18, 5, 1)


def test_validate_unsupported_allowlist():
    with pytest.raises(UnsupportedD):
        validate(10, 4, 1)
    with pytest.raises(UnsupportedD):
        validate(1, 2, 1)


def test_case1_total_positivity():
    # 2a + b = 14 > 0 and 14^2 > 4*5
    assert validate(5, 6, 2).case is FieldCase.CASE1
    with pytest.raises(NotTotallyPositive):
        validate(5, 1, -2)


def test_primitivity():
    assert is_primitive(CMFieldParams(2, 2, 1))  # norm 2, not a square
    assert not is_primitive(CMFieldParams(2, 2, 0))  # norm 4 = 2^2, biquadratic
    assert is_primitive(CMFieldParams(5, 6, 2))  # norm 44


def test_non_primitive_is_flagged_not_fatal():
    field = validate(2, 2, 0)
    assert not field.primitive
    with pytest.raises(NotPrimitive):
        require_primitive(field)


def test_compute_Q_values():
    assert compute_Q(CMFieldParams(2, 2, 1)) == 2
    assert compute_Q(CMFieldParams(5, 6, 2)) == max(6, 5, 192 - 16, 30 + 16) == 176
    assert compute_Q(CMFieldParams(3, 5, 2)) == 13


def test_Q_dominates_a_and_D():
    for D, a, b in [(2, 2, 1), (3, 5, 2), (5, 6, 2), (13, 7, 2), (7, 9, 2)]:
        field = validate(D, a, b)
        assert field.Q >= max(a, D) >= 2


def test_norm_terms_positive_on_validated_fields():
    for D, a, b in [(2, 2, 1), (3, 5, 2), (6, 5, 2), (7, 9, 2)]:
        field = validate(D, a, b)
        assert a * a - b * b * D > 0
    for D, a, b in [(5, 6, 2), (13, 7, 2), (5, 3, 1), (17, 9, 1)]:
        field = validate(D, a, b)
        assert 4 * a * (a + b) - b * b * (D - 1) > 0


def test_basis_convert_case23_identity():
    params = CMFieldParams(2, 2, 1)
    t = (7, -1, 2, 1)
    assert basis_convert(t, Basis.SQRT_D, Basis.XI, params) == t
    assert basis_convert(t, Basis.XI, Basis.SQRT_D, params) == t


def test_basis_convert_case1_reference_value():
    params = CMFieldParams(5, 6, 2)
    printed = (-119599766860084, 5279155, 13860963299, 4898901569)
    converted = basis_convert(printed, Basis.SQRT_D, Basis.XI, params)
    assert converted == (-119599772139239, 10558310, 8962061730, 9797803138)
    # round trip
    assert basis_convert(converted, Basis.XI, Basis.SQRT_D, params) == printed


def test_basis_convert_rejects_non_integral():
    params = CMFieldParams(5, 6, 2)
    with pytest.raises(NonIntegralConversion):
        basis_convert((1, 1, 0, 0), Basis.XI, Basis.SQRT_D, params)


def test_basis_convert_round_trip_random():
    import random

    rng = random.Random(11)
    params = CMFieldParams(13, 7, 2)
    for _ in range(500):
        t = tuple(rng.randrange(-10**6, 10**6) for _ in range(4))
        x = basis_convert(t, Basis.SQRT_D, Basis.XI, params)
        assert basis_convert(x, Basis.XI, Basis.SQRT_D, params) == t


def test_field_params_from_basis():
    # printed radicand 7 + sqrt(5) becomes (a, b) = (6, 2) on the xi-basis
    assert field_params_from_basis(5, 7, 1, Basis.SQRT_D) == (6, 2)
    assert field_params_from_basis(5, 6, 2, Basis.XI) == (6, 2)
    assert field_params_from_basis(2, 2, 1, Basis.SQRT_D) == (2, 1)


def test_field_params_to_sqrtd():
    assert field_params_to_sqrtd(CMFieldParams(5, 6, 2)) == (7, 1)
    assert field_params_to_sqrtd(CMFieldParams(5, 6, 1)) is None
    assert field_params_to_sqrtd(CMFieldParams(2, 2, 1)) == (2, 1)
