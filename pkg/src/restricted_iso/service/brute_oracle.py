'''
Reference implementations computed straight from the definitions.

Only the Permutation value type is shared with the solver; group elements are found by
closing generator sets under products. StabChain appears solely to package results as cosets.
'''
import logging
from typing import Hashable, Iterable, Optional, Sequence

from ..config import OracleConfig
from .perm_engine import CapExceeded, Coset, Permutation, build_chain

logger = logging.getLogger(__name__)


def _generators_of(group) -> tuple[int, list[Permutation]]:
    if hasattr(group, 'strong_gens'):
        return group.degree, list(group.strong_gens)
    return group.degree, list(group.gens)


def closure_elements(gens: Sequence[Permutation], degree: int, cap: Optional[int] = None) -> set[Permutation]:
    '''All products of the generators, by breadth-first closure.'''
    cap = OracleConfig.element_cap if cap is None else cap
    identity = Permutation.identity(degree)
    seen = {identity}
    queue = [identity]
    for element in queue:
        for g in gens:
            product = element * g
            if product not in seen:
                seen.add(product)
                if len(seen) > cap:
                    raise CapExceeded(f'closure exceeds {cap} elements')
                queue.append(product)
    return seen


def coset_from_elements(elements: Iterable[Permutation], degree: int) -> Coset:
    '''Package a set known to be a coset as subgroup * rep, with greedily chosen generators.'''
    elements = sorted(elements)
    if not elements:
        return Coset.empty(degree)
    rep = elements[0]
    inverse = ~rep
    quotients = sorted(e * inverse for e in elements)
    gens: list[Permutation] = []
    reached = {Permutation.identity(degree)}
    for q in quotients:
        if q in reached:
            continue
        gens.append(q)
        reached = closure_elements(gens, degree)
    return Coset(degree, build_chain(gens, degree, known_order=len(reached)), rep)


def brute_string_iso_elements(group, x: Sequence[Hashable], y: Sequence[Hashable],
                              window: Optional[Iterable[int]] = None,
                              cap: Optional[int] = None) -> set[Permutation]:
    degree, gens = _generators_of(group)
    window = range(degree) if window is None else list(window)
    return {g for g in closure_elements(gens, degree, cap)
            if all(x[a] == y[g.images[a]] for a in window)}


def brute_string_iso(group, x: Sequence[Hashable], y: Sequence[Hashable],
                     window: Optional[Iterable[int]] = None, cap: Optional[int] = None) -> Coset:
    '''{g in G : x(a) = y(a^g) for all a in W}.'''
    degree, _ = _generators_of(group)
    return coset_from_elements(brute_string_iso_elements(group, x, y, window, cap), degree)


def _adjacency(n: int, edges: Iterable) -> list[set[int]]:
    adjacency = [set() for _ in range(n)]
    for edge in edges:
        u, v = tuple(edge)
        adjacency[u].add(v)
        adjacency[v].add(u)
    return adjacency


def brute_graph_iso_elements(first, second, cap: Optional[int] = None) -> list[Permutation]:
    '''Every vertex bijection preserving adjacency, by exhaustive extension of partial maps.'''
    cap = OracleConfig.permutation_degree_cap if cap is None else cap
    n = first.n
    if n != second.n:
        return []
    if n > cap:
        raise CapExceeded(f'{n} vertices exceeds the exhaustive search cap {cap}')
    a, b = _adjacency(n, first.edges), _adjacency(n, second.edges)
    if sorted(len(s) for s in a) != sorted(len(s) for s in b):
        return []
    found = []
    image = [-1] * n
    used = [False] * n

    def extend(u: int):
        if u == n:
            found.append(Permutation(image))
            return
        for v in range(n):
            if used[v] or len(a[u]) != len(b[v]):
                continue
            if all((image[w] in b[v]) == (w in a[u]) for w in range(u)):
                image[u] = v
                used[v] = True
                extend(u + 1)
                used[v] = False
        image[u] = -1

    extend(0)
    return found


def brute_graph_aut(graph, cap: Optional[int] = None):
    elements = brute_graph_iso_elements(graph, graph, cap)
    return coset_from_elements(elements, graph.n).subgroup


def brute_graph_iso(first, second, cap: Optional[int] = None) -> Coset:
    return coset_from_elements(brute_graph_iso_elements(first, second, cap), first.n)


def coset_equal(a: Coset, b: Coset) -> bool:
    '''Same point set: equal orders, rep quotient inside, generators contained both ways.'''
    if a.degree != b.degree:
        return False
    if a.is_empty() or b.is_empty():
        return a.is_empty() and b.is_empty()
    if a.subgroup.order() != b.subgroup.order():
        return False
    if not a.subgroup.contains(a.rep * ~b.rep):
        return False
    return (all(a.subgroup.contains(g) for g in b.subgroup.strong_gens)
            and all(b.subgroup.contains(g) for g in a.subgroup.strong_gens))


class BruteOracleService:
    @staticmethod
    def brute_string_iso(*args, **kwargs) -> Coset:
        return brute_string_iso(*args, **kwargs)

    @staticmethod
    def brute_graph_iso(*args, **kwargs) -> Coset:
        return brute_graph_iso(*args, **kwargs)

    @staticmethod
    def brute_graph_aut(*args, **kwargs):
        return brute_graph_aut(*args, **kwargs)

    @staticmethod
    def coset_equal(*args, **kwargs) -> bool:
        return coset_equal(*args, **kwargs)
