import math
from enum import Enum

from .orbits import is_transitive
from .stab_chain import StabChain


class GiantKind(str, Enum):
    SYM = 'SYM'
    ALT = 'ALT'
    NEITHER = 'NEITHER'


def is_giant(chain: StabChain) -> GiantKind:
    '''Exact order test against k! and k!/2 on the chain's own domain.'''
    k = chain.degree
    order = chain.order()
    full = math.factorial(k)
    if order == full:
        return GiantKind.SYM
    if 2 * order == full and is_transitive(chain.strong_gens, k):
        return GiantKind.ALT
    return GiantKind.NEITHER


def contains_alternating(chain: StabChain) -> bool:
    '''Whether the group contains Alt of its domain; always true below degree 3.'''
    k = chain.degree
    if k <= 2:
        return True
    return is_giant(chain) != GiantKind.NEITHER
