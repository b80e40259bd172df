import logging
from dataclasses import dataclass, field

logger = logging.getLogger(__name__)


@dataclass
class SubproblemRecord:
    branch: str
    parent_size: int
    sizes: list[int] = field(default_factory=list)
    depth: int = 0


class RecursionTracer:
    '''Process-wide record of solver recursion, read by bench and the accounting checks.'''
    _instance = None
    _is_initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(RecursionTracer, cls).__new__(cls)
        return cls._instance

    def __init__(self):
        if self._is_initialized:
            return
        self._is_initialized = True
        self.reset()

    def reset(self):
        self.calls = 0
        self.depth = 0
        self.max_depth = 0
        self.branches: dict[str, int] = {}
        self.records: list[SubproblemRecord] = []

    def enter(self, branch: str):
        self.calls += 1
        self.depth += 1
        self.max_depth = max(self.max_depth, self.depth)
        self.branches[branch] = self.branches.get(branch, 0) + 1

    def leave(self):
        self.depth -= 1

    def record(self, branch: str, parent_size: int, sizes: list[int]):
        self.records.append(SubproblemRecord(branch, parent_size, list(sizes), self.depth))

    def main_branch(self) -> str:
        if not self.branches:
            return 'none'
        return max(sorted(self.branches), key=lambda b: self.branches[b])

    def summary(self) -> dict:
        return {
            'calls': self.calls,
            'max_depth': self.max_depth,
            'branch': self.main_branch(),
        }


def get_recursion_tracer() -> RecursionTracer:
    '''Get the singleton instance of the RecursionTracer class.'''
    tracer = RecursionTracer()
    logger.debug('recursion tracer: calls=%d max_depth=%d', tracer.calls, tracer.max_depth)
    return tracer
