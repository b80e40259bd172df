import logging
from typing import Optional

from ...config import ReductionConfig
from ..perm_engine import CapExceeded, Permutation, StabChain, build_chain, trivial_chain

logger = logging.getLogger(__name__)


def normal_closure(chain: StabChain, element: Permutation) -> StabChain:
    '''Smallest normal subgroup of the group containing element.'''
    n = chain.degree
    gens = [element]
    closure = build_chain(gens, n)
    for h in gens:
        for s in chain.strong_gens:
            conj = h.conjugate(s)
            if not closure.contains(conj):
                gens.append(conj)
                closure = build_chain(gens, n)
    return closure


def _element_order(g: Permutation) -> int:
    order, power = 1, g
    while not power.is_identity():
        power = power * g
        order += 1
    return order


def _smallest_prime(m: int) -> int:
    p = 2
    while m % p:
        p += 1
    return p


def minimal_normal_subgroups(chain: StabChain, cap: Optional[int] = None) -> list[StabChain]:
    '''
    Inclusion-minimal normal closures of prime-order elements, one per conjugacy class.
    Every minimal normal subgroup is the closure of any of its prime-order elements.
    '''
    cap = ReductionConfig.socle_cap if cap is None else cap
    if chain.order() > cap:
        raise CapExceeded(f'group order {chain.order()} exceeds the socle cap {cap}')
    seen: set[Permutation] = set()
    closures: list[StabChain] = []
    for g in chain.elements():
        if g in seen or g.is_identity():
            continue
        klass = [g]
        seen.add(g)
        for h in klass:
            for s in chain.strong_gens:
                c = h.conjugate(s)
                if c not in seen:
                    seen.add(c)
                    klass.append(c)
        order = _element_order(g)
        if order != _smallest_prime(order):
            continue
        closure = normal_closure(chain, g)
        if not any(c.same_group(closure) for c in closures):
            closures.append(closure)
    minimal = [c for c in closures
               if not any(o.order() < c.order() and c.contains_group(o) for o in closures)]
    logger.debug('%d normal closures, %d minimal', len(closures), len(minimal))
    return minimal


def socle(chain: StabChain, cap: Optional[int] = None) -> StabChain:
    if chain.is_trivial():
        return chain
    gens = [g for m in minimal_normal_subgroups(chain, cap) for g in m.strong_gens]
    return build_chain(gens, chain.degree) if gens else trivial_chain(chain.degree)
