import logging
from dataclasses import replace
from typing import Optional

from ..config import SolverConfig

logger = logging.getLogger(__name__)


class EngineSettings:
    '''Process-wide solver limits read by the permutation engine when a call passes none.'''
    _instance = None
    _is_initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(EngineSettings, cls).__new__(cls)
        return cls._instance

    def __init__(self):
        if self._is_initialized:
            return
        self._is_initialized = True
        self.solver = SolverConfig()

    def apply(self, solver: Optional[SolverConfig]):
        self.solver = replace(solver) if solver is not None else SolverConfig()
        logger.debug('engine settings: d_cap=%d enumeration_cap=%d seed=%d',
                     self.solver.d_cap, self.solver.enumeration_cap, self.solver.random_seed)

    def reset(self):
        self.apply(None)


def get_engine_settings() -> EngineSettings:
    return EngineSettings()
