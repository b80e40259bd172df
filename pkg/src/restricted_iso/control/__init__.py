from .gi import gi_process
from .si import si_process
from .aut import aut_process
from .validate_seq import validate_seq_process
from .reduce import reduce_process
from .certify import certify_process
from .bench import bench_process, generate_suite
__all__ = [
    "gi_process",
    "si_process",
    "aut_process",
    "validate_seq_process",
    "reduce_process",
    "certify_process",
    "bench_process",
    "generate_suite",
]
