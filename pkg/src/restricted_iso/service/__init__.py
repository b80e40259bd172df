from .perm_engine import PermEngineService
from .partition_lattice import PartitionService
from .luks_solver import LuksSolverService, get_solver
from .giant_certificates import GiantCertificateService
from .group_reduction import GroupReductionService
from .iso_applications import IsoApplicationService
from .brute_oracle import BruteOracleService
__all__ = [
    'PermEngineService',
    'PartitionService',
    'LuksSolverService',
    'get_solver',
    'GiantCertificateService',
    'GroupReductionService',
    'IsoApplicationService',
    'BruteOracleService',
]
