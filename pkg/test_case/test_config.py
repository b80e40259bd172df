from dataclasses import replace

import pytest

from restricted_iso.config import (ConfigError, SolverConfig, ToolkitConfig, load_toolkit_config,
                                   log_level_from_env)
from restricted_iso.errors import RestrictedIsoError
from restricted_iso.main import apply_overrides, build_parser
from restricted_iso.service.luks_solver import LuksSolver
from restricted_iso.service.perm_engine import CapExceeded, set_transporter, setwise_stabilizer, symmetric_chain
from restricted_iso.utils import get_engine_settings


def test_defaults():
    config = ToolkitConfig()
    assert config.solver.brute_cap == 10 ** 4
    assert config.reduction.c1 == 1 and config.reduction.c2 == 10
    assert config.certificate.t_override is None
    assert not config.certificate.allow_small_t


def test_env_file_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv('RESTRICTED_ISO_SOLVER_BRUTE_CAP', '7')
    monkeypatch.setenv('RESTRICTED_ISO_REDUCTION_C2', '3')
    monkeypatch.setenv('RESTRICTED_ISO_CERTIFICATE_ALLOW_SMALL_T', 'false')
    env = tmp_path / '.env'
    env.write_text('RESTRICTED_ISO_SOLVER_BRUTE_CAP=100\n'
                   'RESTRICTED_ISO_REDUCTION_C2=2.5\n'
                   'RESTRICTED_ISO_CERTIFICATE_ALLOW_SMALL_T=yes\n', encoding='utf-8')
    config = load_toolkit_config(env)
    assert config.solver.brute_cap == 100
    assert config.reduction.c2 == 2.5
    assert config.certificate.allow_small_t is True


def test_optional_fields_take_integers(monkeypatch):
    monkeypatch.setenv('RESTRICTED_ISO_CERTIFICATE_T_OVERRIDE', '12')
    assert load_toolkit_config().certificate.t_override == 12


def test_bad_values(tmp_path, monkeypatch):
    with pytest.raises(ConfigError):
        load_toolkit_config(tmp_path / 'missing.env')
    monkeypatch.setenv('RESTRICTED_ISO_SOLVER_BRUTE_CAP', 'many')
    with pytest.raises(ConfigError):
        load_toolkit_config()
    monkeypatch.setenv('RESTRICTED_ISO_SOLVER_BRUTE_CAP', '0')
    with pytest.raises(ConfigError):
        load_toolkit_config()
    monkeypatch.setenv('RESTRICTED_ISO_SOLVER_BRUTE_CAP', '10')
    monkeypatch.setenv('RESTRICTED_ISO_REDUCTION_JOHNSON_GUARD', 'maybe')
    with pytest.raises(ConfigError):
        load_toolkit_config()


def test_log_level(monkeypatch):
    monkeypatch.delenv('RESTRICTED_ISO_LOG_LEVEL', raising=False)
    assert log_level_from_env() == 'WARNING'
    monkeypatch.setenv('RESTRICTED_ISO_LOG_LEVEL', 'debug')
    assert log_level_from_env() == 'DEBUG'




def test_config_error_is_project_error(monkeypatch):
    assert issubclass(ConfigError, RestrictedIsoError)
    monkeypatch.setenv('RESTRICTED_ISO_SOLVER_D_CAP', '0')
    with pytest.raises(RestrictedIsoError):
        load_toolkit_config()


def test_d_cap_override_reaches_engine(monkeypatch):
    monkeypatch.setenv('RESTRICTED_ISO_SOLVER_D_CAP', '3')
    monkeypatch.setenv('RESTRICTED_ISO_SOLVER_RANDOM_SEED', '7')
    settings = get_engine_settings()
    try:
        config = load_toolkit_config()
        LuksSolver(config)
        assert settings.solver.d_cap == 3 and settings.solver.random_seed == 7
        with pytest.raises(CapExceeded):
            setwise_stabilizer(symmetric_chain(8), range(4))
        settings.apply(replace(config.solver, d_cap=4))
        assert setwise_stabilizer(symmetric_chain(8), range(4)).order() == 24 * 24
    finally:
        settings.reset()
    assert settings.solver.d_cap == SolverConfig().d_cap


def test_cli_d_cap_override():
    parser = build_parser()
    settings = get_engine_settings()
    try:
        config = apply_overrides(ToolkitConfig(), parser.parse_args(['--d-cap', '2', 'aut', 'unused']))
        assert config.solver.d_cap == 2
        settings.apply(config.solver)
        with pytest.raises(CapExceeded):
            set_transporter(symmetric_chain(6), [0, 1, 2], [3, 4, 5])
        assert set_transporter(symmetric_chain(6), [0, 1, 2], [3, 4, 5], d_cap=3) is not None
    finally:
        settings.reset()
    with pytest.raises(ConfigError):
        apply_overrides(ToolkitConfig(), parser.parse_args(['--d-cap', '0', 'aut', 'unused']))


if __name__ == "__main__":
    test_defaults()
