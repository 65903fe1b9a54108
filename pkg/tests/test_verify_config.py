import pytest
import tomli
from dacite import DaciteError

from lcreg.verify_config import VerifyConfig


def test_default_round_trips_through_toml(tmp_path):
    path = tmp_path / "verify.toml"
    config = VerifyConfig.create_default()

    config.to_toml(path)

    assert VerifyConfig.from_toml(path) == config


def test_default_grids():
    config = VerifyConfig.create_default()

    assert config.cap == 60
    assert config.lefschetz.n_values == [2, 3]
    assert config.lefschetz.r_values == [1, 2, 3]
    assert config.monotonicity.prime == 32003
    assert config.bounds.generic_j_lo == -6


def test_edited_toml_is_read(tmp_path):
    path = tmp_path / "verify.toml"
    VerifyConfig.create_default().to_toml(path)
    text = path.read_text().replace("instances = 20", "instances = 3")
    path.write_text(text)

    assert VerifyConfig.from_toml(path).monotonicity.instances == 3


def test_broken_files_raise(tmp_path):
    missing_key = tmp_path / "missing.toml"
    missing_key.write_text("cap = 60\n")
    broken = tmp_path / "broken.toml"
    broken.write_text("cap = \n")

    with pytest.raises(DaciteError):
        VerifyConfig.from_toml(missing_key)
    with pytest.raises(tomli.TOMLDecodeError):
        VerifyConfig.from_toml(broken)
