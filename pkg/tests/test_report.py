import json

import pytest

from lcreg.checks import Check
from lcreg.cohomology.components import cohomology_report
from lcreg.cohomology.hilbert import HilbertFunction
from lcreg.presentation.presentation import build_presentation
from lcreg.report import CSV_COLUMNS, Report, ResultEntry


def _report() -> Report:
    entries = [
        ResultEntry.from_hilbert(
            -3,
            HilbertFunction((2, 1), True),
            instance="sum x_i*y_i n=2",
            sub_first_nonzero=3,
            checks=[Check("regularity", True, "oracle 1 == formula 1")],
            extra={"series": "2 + t"},
        ),
        ResultEntry.from_hilbert(
            -2,
            HilbertFunction((1, 1), False),
            checks=[Check("monotonicity j=-3/-2", False, "first violation in degree 1")],
        ),
    ]
    return Report(
        config={"command": "hilbert", "n": 2},
        results=entries,
        caveats=["b", "a", "b"],
        timing={"total": 0.5},
    )


def test_verdicts():
    report = _report()

    assert not report.passed
    assert [check.name for _, check in report.failures] == ["monotonicity j=-3/-2"]
    assert report.results[0].passed


def test_json_shape():
    data = json.loads(_report().to_json())

    assert set(data) == {"config", "results", "caveats", "timing"}
    assert data["caveats"] == ["a", "b"]
    first = data["results"][0]
    assert first["hilbert"] == [2, 1]
    assert first["regularity"] == 1
    assert first["length"] == 3
    assert first["series"] == "2 + t"
    assert first["checks"] == [{"name": "regularity", "pass": True, "detail": "oracle 1 == formula 1"}]  # noqa: E501
    assert data["results"][1]["regularity"] is None


def test_json_without_timing_is_stable():
    a, b = _report(), _report()
    b.timing["total"] = 9.0

    assert "timing" not in json.loads(a.to_json(include_timing=False))
    assert a.to_json(include_timing=False) == b.to_json(include_timing=False)


def test_config_hash_depends_on_config():
    a = Report(config={"n": 2, "m": 2})
    b = Report(config={"m": 2, "n": 2})
    c = Report(config={"m": 2, "n": 3})

    assert a.config_hash == b.config_hash
    assert a.config_hash != c.config_hash
    assert len(a.config_hash) == 12


def test_csv_rows():
    report = _report()

    lines = report.to_csv().splitlines()

    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == f"{report.config_hash},sum x_i*y_i n=2,-3,1,3,2;1,pass"
    assert lines[2] == f"{report.config_hash},,-2,,,1;1,fail"


@pytest.mark.parametrize(
    "sub_cap,window,first_nonzero,beyond",
    [
        (None, [1, 3], 3, False),
        (2, [1, 2], None, True),
    ],
)
def test_entry_flags_a_search_window_without_nonzero_degree(f_lambda, sub_cap, window, first_nonzero, beyond):  # noqa: E501
    report = cohomology_report(build_presentation(f_lambda, -3), sub_cap=sub_cap)

    data = ResultEntry.from_report(report, instance="sum x_i*y_i n=2").to_dict()

    assert data["sub_window"] == window
    assert data["sub_first_nonzero"] == first_nonzero
    assert data["sub_beyond_window"] is beyond
    assert data["hilbert"] == [2, 1]


def test_entry_without_window_omits_the_flag():
    data = _report().results[0].to_dict()

    assert "sub_window" not in data
    assert "sub_beyond_window" not in data
