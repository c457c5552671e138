# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import pytest

from deel.twomode.cli import RunConfig, read_config_file, load_config, parse_bool
from deel.twomode.common import ConfigError


def test_defaults():
    config = RunConfig()
    assert config.tol_num == 1e-12
    assert config.tol_region == 1e-12
    assert config.tail_tol == 1e-8
    assert config.out is None
    assert config.workers == 1
    assert config.seed == 0
    assert not config.verbose

    thresholds = config.thresholds
    assert thresholds.tol_num == config.tol_num
    assert thresholds.tail_tol == config.tail_tol


def test_validation():
    # a zero tolerance is a deliberate forced failure, not an error
    assert RunConfig(tol_num=0.0).tol_num == 0.0
    with pytest.raises(ConfigError):
        RunConfig(tol_num=-1e-3)
    with pytest.raises(ConfigError):
        RunConfig(tol_ode=float("nan"))
    with pytest.raises(ConfigError):
        RunConfig(workers=0)
    with pytest.raises(ConfigError):
        RunConfig(samples=0)


def test_parse_bool():
    assert parse_bool("true") and parse_bool(" Yes ") and parse_bool("1")
    assert not parse_bool("off") and not parse_bool("False")
    with pytest.raises(ConfigError):
        parse_bool("maybe")


def test_read_config_file(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# tolerances\n"
                    "tol_num = 1e-11\n"
                    "\n"
                    "workers = 4   # pool size\n"
                    "out = scan.csv\n"
                    "verbose = yes\n")
    values = read_config_file(str(path))
    assert values == {"tol_num": 1e-11, "workers": 4, "out": "scan.csv", "verbose": True}


@pytest.mark.parametrize("content", ["workers 4\n", "colour = blue\n", "workers = many\n"])
def test_read_config_file_errors(tmp_path, content):
    path = tmp_path / "bad.cfg"
    path.write_text(content)
    with pytest.raises(ConfigError):
        read_config_file(str(path))


def test_load_config_overrides(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("seed = 7\nworkers = 4\n")

    config = load_config(str(path), {"workers": 2, "seed": None})
    assert config.seed == 7
    assert config.workers == 2

    assert load_config() == RunConfig()
    with pytest.raises(ConfigError):
        load_config(str(path), {"workers": -1})
