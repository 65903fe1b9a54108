import pytest

from lcreg.cohomology.hilbert import HilbertFunction


def test_finite_length_values():
    hilbert = HilbertFunction.from_scan([3, 2, 1, 0], finite_length=True)

    assert hilbert.values == (3, 2, 1)
    assert hilbert.end == 2
    assert hilbert.regularity == 2
    assert hilbert.length == 6
    assert hilbert.value(7) == 0
    assert hilbert.value(-1) == 0
    assert hilbert.series() == "3 + 2*t + t^2"


def test_zero_module():
    hilbert = HilbertFunction.from_scan([0], finite_length=True)

    assert hilbert.values == ()
    assert hilbert.regularity is None
    assert hilbert.length == 0
    assert hilbert.series() == "0"


def test_window_of_infinite_module():
    hilbert = HilbertFunction.from_scan([1, 1, 1], finite_length=False)

    assert hilbert.regularity is None
    assert hilbert.length is None
    assert hilbert.series() == "1 + t + t^2 + ..."
    with pytest.raises(ValueError):
        hilbert.value(3)


def test_shifted_window():
    hilbert = HilbertFunction(values=(0, 4), finite_length=False, start=2)

    assert hilbert.end == 3
    assert hilbert.value(3) == 4
    assert hilbert.value(1) == 0
    assert hilbert.series() == "4*t^3 + ..."


@pytest.mark.parametrize(
    "upper,lower,violation",
    [
        ((3, 2, 1), (2, 1), None),
        ((2, 1), (2, 1, 1), 2),
        ((1, 5), (2,), 0),
    ],
)
def test_dominates(upper, lower, violation):
    result = HilbertFunction(upper, True).dominates(HilbertFunction(lower, True))

    assert result == violation


def test_dominates_stops_at_the_window():
    window = HilbertFunction((2, 2), finite_length=False)

    assert window.dominates(HilbertFunction((1, 1, 1, 1), True)) is None
