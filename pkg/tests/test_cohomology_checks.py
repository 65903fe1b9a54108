import pytest

from lcreg.algebra.bipoly import bipoly_power, generic_form
from lcreg.algebra.parser import parse_bipoly
from lcreg.checks import all_passed
from lcreg.cohomology.checks import dimension_bound_check, duality_check, monotonicity_check
from lcreg.errors import ParameterError


def test_monotonicity_of_lambda_form(f_lambda):
    checks = monotonicity_check(f_lambda, -5, -2)

    assert len(checks) == 6
    assert all_passed(checks)
    assert checks[0].name == "monotonicity j=-5/-4"


def test_monotonicity_on_windows(qq):
    f = parse_bipoly("x1*y1", 2, 2, qq)

    checks = monotonicity_check(f, -4, -3, cap=3)

    assert [check.name for check in checks] == ["monotonicity j=-4/-3"]
    assert checks[0].passed
    assert "checked on window" in checks[0].detail


def test_monotonicity_rejects_positive_components(f_lambda):
    with pytest.raises(ParameterError):
        monotonicity_check(f_lambda, -3, -1)


def test_dimension_bound_for_m_primary_ideal(f_lambda):
    checks = dimension_bound_check(f_lambda, -3)

    assert [check.name for check in checks] == ["dimension bound j=-3", "finite length j=-3"]
    assert checks[0].detail == "dim coker 0 <= dim P_0/I(f) 0"
    assert all_passed(checks)


def test_dimension_bound_without_finite_length(qq):
    checks = dimension_bound_check(parse_bipoly("x1*y1 + x1*y2", 2, 2, qq), -3)

    assert len(checks) == 1
    assert checks[0].passed


@pytest.mark.parametrize("j", [-2, -3, -4])
def test_duality_for_lambda_form(f_lambda, j):
    checks = [duality_check(f_lambda, j, i) for i in range(1, 5)]

    assert all_passed(checks)


def test_duality_for_generic_form_and_powers(qq, f_lambda):
    generic = [duality_check(generic_form(2, 2, qq), -3, i) for i in range(1, 4)]
    square = [duality_check(bipoly_power(f_lambda, 2), -3, i) for i in range(2, 5)]

    assert all_passed(generic + square)


def test_duality_needs_degree_above_shift(f_lambda):
    with pytest.raises(ParameterError):
        duality_check(f_lambda, -3, 0)
