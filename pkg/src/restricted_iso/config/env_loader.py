import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from ..errors import ConfigError
from .solver_config import SolverConfig
from .reduction_config import ReductionConfig
from .certificate_config import CertificateConfig
from .oracle_config import OracleConfig

ENV_PREFIX = 'RESTRICTED_ISO_'


@dataclass
class ToolkitConfig:
    '''All configuration sections handed through the solver stack.'''
    solver: SolverConfig = field(default_factory=SolverConfig)
    reduction: ReductionConfig = field(default_factory=ReductionConfig)
    certificate: CertificateConfig = field(default_factory=CertificateConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)


def _convert(raw: str, current, name: str):
    if isinstance(current, bool):
        lowered = raw.strip().lower()
        if lowered in ('1', 'true', 'yes', 'on'):
            return True
        if lowered in ('0', 'false', 'no', 'off'):
            return False
        raise ConfigError(f'{name} expects a boolean, got {raw!r}')
    try:
        if isinstance(current, int) or current is None:
            return int(raw)
        if isinstance(current, float):
            return float(raw)
    except ValueError as e:
        raise ConfigError(f'{name} expects a number, got {raw!r}') from e
    return raw


def _override_section(section, section_name: str):
    changes = {}
    for f in fields(section):
        env_name = f'{ENV_PREFIX}{section_name}_{f.name}'.upper()
        raw = os.getenv(env_name)
        if raw is None or raw == '':
            continue
        changes[f.name] = _convert(raw, getattr(section, f.name), env_name)
    return replace(section, **changes) if changes else section


def load_toolkit_config(env_file: Optional[str | Path] = None) -> ToolkitConfig:
    '''
    Defaults overridden by RESTRICTED_ISO_<SECTION>_<FIELD> variables,
    e.g. RESTRICTED_ISO_SOLVER_BRUTE_CAP=100.
    '''
    if env_file is not None:
        if not Path(env_file).exists():
            raise ConfigError(f'env file not found: {env_file}')
        load_dotenv(env_file, override=True)
    else:
        load_dotenv()
    config = ToolkitConfig()
    config = ToolkitConfig(
        solver=_override_section(config.solver, 'solver'),
        reduction=_override_section(config.reduction, 'reduction'),
        certificate=_override_section(config.certificate, 'certificate'),
        oracle=_override_section(config.oracle, 'oracle'),
    )
    if config.solver.brute_cap < 1 or config.solver.enumeration_cap < 1 or config.solver.d_cap < 1:
        raise ConfigError('caps must be positive')
    if config.oracle.element_cap < 1 or config.oracle.permutation_degree_cap < 1:
        raise ConfigError('oracle caps must be positive')
    return config


def log_level_from_env(default: str = 'WARNING') -> str:
    return os.getenv(f'{ENV_PREFIX}LOG_LEVEL', default).upper()
