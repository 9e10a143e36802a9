import logging

import pytest

from zetalab.errors import ConvergenceUnsafe, DomainViolation, PoleHit, ZetaLabError
from zetalab.utils import load_config, parse_complex, parse_int_list, to_complex, to_real
from zetalab.utils.config import CUTOFF_ENV_VAR, DEFAULT_CONFIG


def test_error_hierarchy():
    assert issubclass(PoleHit, DomainViolation)
    assert issubclass(DomainViolation, ZetaLabError)
    assert issubclass(DomainViolation, ValueError)
    assert issubclass(ConvergenceUnsafe, ZetaLabError)
    assert not issubclass(ConvergenceUnsafe, DomainViolation)


def test_default_config():
    config = load_config({})
    assert config == DEFAULT_CONFIG
    assert (config.fourier_cutoff, config.lattice_cutoff, config.quadrature_panels) == (10_000, 2000, 40)


def test_config_cutoff_from_environment():
    assert load_config({CUTOFF_ENV_VAR: "500"}).fourier_cutoff == 500


@pytest.mark.parametrize("raw", ["abc", "0", "-3"])
def test_config_invalid_cutoff_falls_back(raw, caplog):
    with caplog.at_level(logging.WARNING):
        config = load_config({CUTOFF_ENV_VAR: raw})
    assert config.fourier_cutoff == DEFAULT_CONFIG.fourier_cutoff
    assert CUTOFF_ENV_VAR in caplog.text


@pytest.mark.parametrize("text, expected", [
    ("3", 3 + 0j), ("-0.5", -0.5 + 0j), ("1+2i", 1 + 2j), ("-0.5-2i", -0.5 - 2j),
    ("2i", 2j), ("-i", -1j), ("1e-3+1e2i", 0.001 + 100j),
])
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize("bad", ["", "abc", "1+2", "1+2j3", "i2"])
def test_parse_complex_rejects(bad):
    with pytest.raises(ValueError):
        parse_complex(bad)


def test_parse_int_list():
    assert parse_int_list("0,0,2") == [0, 0, 2]
    assert parse_int_list("") == []
    with pytest.raises(ValueError):
        parse_int_list("1,x")


def test_numeric_conversions():
    assert to_complex(2) == 2 + 0j
    assert to_real(0.25) == 0.25
    with pytest.raises(DomainViolation):
        to_complex(float("inf"))
    with pytest.raises(DomainViolation):
        to_real(1j)
    with pytest.raises(TypeError):
        to_complex("1")
