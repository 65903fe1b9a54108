import pytest

from lcreg.env_vars import _read_log_level, _read_threads


@pytest.mark.parametrize("raw,threads", [(None, 1), ("", 1), ("4", 4), (" 2 ", 2)])
def test_threads(raw, threads):
    assert _read_threads(raw) == threads


@pytest.mark.parametrize("raw", ["0", "-1", "many"])
def test_invalid_threads(raw):
    with pytest.raises(RuntimeError):
        _read_threads(raw)


def test_log_level():
    assert _read_log_level(None) == "WARNING"
    assert _read_log_level("debug") == "DEBUG"
    with pytest.raises(RuntimeError):
        _read_log_level("verbose")
