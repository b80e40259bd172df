from .solver_config import SolverConfig
from .reduction_config import ReductionConfig
from .certificate_config import CertificateConfig
from .oracle_config import OracleConfig
from .env_loader import ToolkitConfig, ConfigError, load_toolkit_config, log_level_from_env
__all__ = ['SolverConfig', 'ReductionConfig', 'CertificateConfig', 'OracleConfig',
           'ToolkitConfig', 'ConfigError', 'load_toolkit_config', 'log_level_from_env']
