import json

import pytest

from lcreg.algebra.field import FieldSpec
from lcreg.errors import ParameterError, PolynomialSyntaxError
from lcreg.formulas.linear_bounds import BoundKind
from lcreg.runner import Command, OutputFormat, RunConfig, parse_j_range, run
from lcreg.verification.suites import Suite
from lcreg.verify_config import VerifyConfig


def _hilbert_config(**kwargs) -> RunConfig:
    defaults = dict(command=Command.hilbert, f="x1*y1 + x2*y2", m=2, n=2, j=-3)
    defaults.update(kwargs)
    return RunConfig(**defaults)


def test_hilbert_of_lambda_form():
    report = run(_hilbert_config())

    assert report.passed
    [entry] = report.results
    assert entry.hilbert == (2, 1)
    assert entry.regularity == 1
    assert entry.length == 3
    assert entry.sub_first_nonzero == 3
    assert entry.extra["series"] == "2 + t"
    assert [check.name for check in entry.checks] == ["exactness ledger j=-3"]


def test_lefschetz_family_adds_formula_checks():
    report = run(RunConfig(command=Command.regularity, n=2, r=2, j_range=(-5, -2)))

    assert report.passed
    assert [entry.j for entry in report.results] == [-5, -4, -3, -2]
    assert [entry.regularity for entry in report.results] == [4, 3, 2, 1]
    assert "regularity j=-5" in [check.name for check in report.results[0].checks]
    assert report.config["f"] == "x1^2*y1^2 + 2*x1*x2*y1*y2 + x2^2*y2^2"


def test_initial_reports_ideals():
    report = run(_hilbert_config(command=Command.initial))

    [entry] = report.results
    assert entry.extra["ideals"] == {"z1": ["x1", "x2"], "z2": ["x1^2", "x2"]}
    assert report.passed


def test_betti_of_lambda_form():
    report = run(RunConfig(command=Command.betti, n=2, j_range=(-4, -3)))

    assert report.passed
    assert [entry.extra["betti"] for entry in report.results] == [[4, 1], [3, 1]]
    assert [entry.extra["twists"] for entry in report.results] == [[1, 4], [1, 3]]
    assert report.results[1].extra["printed_betti"] == ["-1"]
    assert len(report.caveats) == 1


def test_betti_rejects_explicit_polynomial():
    with pytest.raises(ParameterError):
        run(RunConfig(command=Command.betti, f="x1*y1 + x2*y2", m=2, n=2, j=-3))


def test_bound_reports_the_fitted_offset():
    report = run(
        RunConfig(
            command=Command.bound,
            n=2,
            j_range=(-5, -2),
            kind=BoundKind.general,
        )
    )

    assert report.passed
    assert {entry.extra["q"] for entry in report.results} == {-1}
    assert [entry.extra["bound"] for entry in report.results] == [3, 2, 1, 0]
    assert report.config["kind"] == "general"


def test_prime_field_adds_caveat():
    report = run(_hilbert_config(field=FieldSpec.prime(32003)))

    assert report.results[0].hilbert == (2, 1)
    assert report.caveats == ["char-p: Lefschetz theorems assume char 0"]


def test_verify_echoes_grids():
    config = RunConfig(command=Command.verify, suite=Suite.lefschetz, n=2, r=1, j_range=(-4, -2))

    report = run(config)

    assert report.passed
    assert len(report.results) == 3
    assert report.config["grids"] == VerifyConfig.create_default().to_dict()
    assert "lefschetz" in report.timing


def test_output_is_deterministic():
    config = _hilbert_config(j_range=(-5, -2), j=None)
    a = run(config)
    b = run(_hilbert_config(j_range=(-5, -2), j=None, threads=2))

    assert a.to_dict(include_timing=False)["results"] == b.to_dict(include_timing=False)["results"]  # noqa: E501
    assert a.to_json(include_timing=False) == run(config).to_json(include_timing=False)


def test_echo_is_canonical():
    report = run(_hilbert_config(f="x2*y2+x1*y1"))

    data = json.loads(report.to_json())
    assert data["config"]["f"] == "x1*y1 + x2*y2"
    assert "output" not in data["config"]


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(j=-1),
        dict(j=None),
        dict(m=None),
        dict(n=None),
    ],
)
def test_invalid_parameters(kwargs):
    with pytest.raises(ParameterError):
        run(_hilbert_config(**kwargs))


def test_invalid_polynomial():
    with pytest.raises(PolynomialSyntaxError):
        run(_hilbert_config(f="x1*y1 +"))


@pytest.mark.parametrize("kwargs", [dict(cap=-1), dict(threads=0), dict(r=0), dict(j_range=(-2, -3))])  # noqa: E501
def test_config_validation(kwargs):
    with pytest.raises(ParameterError):
        _hilbert_config(**kwargs)


def test_lefschetz_form_needs_square_shape():
    with pytest.raises(ParameterError):
        run(RunConfig(command=Command.hilbert, m=3, n=2, j=-3))


@pytest.mark.parametrize("text", ["-2..-5", "a..b", ""])
def test_parse_j_range_rejects(text):
    with pytest.raises(ParameterError):
        parse_j_range(text)


def test_csv_format_flag_is_echoed():
    report = run(_hilbert_config(format=OutputFormat.csv))

    assert report.config["format"] == "csv"
    assert report.to_csv().splitlines()[1].endswith(",-3,1,3,2;1,pass")


def test_regularity_leaves_out_the_series():
    hilbert = run(_hilbert_config()).results[0]
    regularity = run(_hilbert_config(command=Command.regularity)).results[0]

    assert regularity.regularity == hilbert.regularity == 1
    assert regularity.sub_first_nonzero == hilbert.sub_first_nonzero == 3
    assert {"series", "sub_hilbert", "sub_start"} <= set(hilbert.extra)
    assert regularity.extra == {}
