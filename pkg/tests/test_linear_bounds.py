import pytest

from lcreg.algebra.bipoly import generic_form
from lcreg.algebra.parser import parse_bipoly
from lcreg.errors import ParameterError
from lcreg.formulas.linear_bounds import BoundKind, linear_bound_fit, slope


def test_general_bound_of_lambda_form(f_lambda):
    fit = linear_bound_fit(f_lambda, -5, -2, BoundKind.general)

    assert fit.d == 1
    assert fit.q == -1
    assert fit.samples == ((-5, 3), (-4, 2), (-3, 1), (-2, 0))
    assert fit.excluded == ()
    assert fit.bound(2, -5) == 3
    assert [check.name for check in fit.checks] == [f"linear bound j={j}" for j in range(-5, -1)]  # noqa: E501
    assert all(check.passed for check in fit.checks)


def test_generic_kind_adds_offset_check(f_lambda):
    fit = linear_bound_fit(f_lambda, -4, -2, BoundKind.generic)

    assert fit.checks[-1].name == "generic offset"
    assert fit.checks[-1].passed


def test_slopes(qq, f_lambda):
    generic = generic_form(2, 3, qq)
    cubic = parse_bipoly("x1^2*y1^3 + x2^2*y2^3", 2, 2, qq)

    assert slope(generic, BoundKind.generic) == 3
    assert slope(cubic, BoundKind.linear) == 6
    assert slope(f_lambda, BoundKind.general) == 1
    with pytest.raises(ParameterError):
        slope(generic, BoundKind.general)
    with pytest.raises(ParameterError):
        slope(cubic, BoundKind.generic)


def test_components_without_finite_length_are_excluded(qq):
    f = parse_bipoly("x1*y1", 2, 2, qq)

    fit = linear_bound_fit(f, -3, -2, cap=3)

    assert fit.excluded == (-3, -2)
    assert fit.samples == ()
    assert fit.q is None
    assert fit.bound(2, -3) is None
    assert fit.checks == ()


def test_range_is_validated(f_lambda):
    with pytest.raises(ParameterError):
        linear_bound_fit(f_lambda, -3, -1)
    with pytest.raises(ParameterError):
        linear_bound_fit(f_lambda, -2, -3)
