from .union_find import UnionFind, find_orbits
from .recursion_trace import RecursionTracer, SubproblemRecord, get_recursion_tracer
from .engine_settings import EngineSettings, get_engine_settings
__all__ = ['UnionFind', 'find_orbits', 'RecursionTracer', 'SubproblemRecord', 'get_recursion_tracer',
           'EngineSettings', 'get_engine_settings']
