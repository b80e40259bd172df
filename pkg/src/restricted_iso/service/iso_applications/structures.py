import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from ..perm_engine import (CapExceeded, Coset, Permutation, StabChain, StructurallyInvalid, set_action_hom,
                           symmetric_chain)

logger = logging.getLogger(__name__)


def pad_tuple(tup: tuple, arity: int) -> tuple:
    '''Extend to the given arity by repeating the last coordinate.'''
    if len(tup) > arity:
        raise StructurallyInvalid(f'tuple {tup} is longer than arity {arity}')
    return tuple(tup) + (tup[-1],) * (arity - len(tup))


@dataclass(frozen=True)
class RelationalStructure:
    '''
    Relations of a common arity over a domain D inside {0..domain_size-1};
    D defaults to the whole range.
    '''
    domain_size: int
    arity: int
    relations: tuple[frozenset, ...]
    domain: Optional[frozenset[int]] = None

    def __post_init__(self):
        relations = tuple(frozenset(tuple(t) for t in rel) for rel in self.relations)
        object.__setattr__(self, 'relations', relations)
        if self.domain is not None:
            object.__setattr__(self, 'domain', frozenset(self.domain))
        points = self.points
        for rel in relations:
            for tup in rel:
                if len(tup) != self.arity:
                    raise StructurallyInvalid(f'tuple {tup} does not have arity {self.arity}')
                if any(p not in points for p in tup):
                    raise StructurallyInvalid(f'tuple {tup} leaves the domain')

    @classmethod
    def padded(cls, domain_size: int, arity: int, relations: Iterable[Iterable[tuple]],
               domain: Optional[Iterable[int]] = None) -> 'RelationalStructure':
        rels = [frozenset(pad_tuple(tuple(t), arity) for t in rel) for rel in relations]
        return cls(domain_size, arity, tuple(rels), None if domain is None else frozenset(domain))

    @property
    def points(self) -> frozenset[int]:
        return frozenset(range(self.domain_size)) if self.domain is None else self.domain

    def image(self, g: Permutation) -> 'RelationalStructure':
        rels = tuple(frozenset(tuple(g.images[p] for p in tup) for tup in rel) for rel in self.relations)
        domain = None if self.domain is None else frozenset(g.images[p] for p in self.domain)
        return RelationalStructure(self.domain_size, self.arity, rels, domain)

    def to_dict(self) -> dict:
        return {
            'domain': sorted(self.points),
            'arity': self.arity,
            'relations': [sorted(list(t) for t in rel) for rel in self.relations],
        }


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        edges = frozenset(frozenset(e) for e in self.edges)
        object.__setattr__(self, 'edges', edges)
        for edge in edges:
            if not edge or any(not 0 <= v < self.n for v in edge):
                raise StructurallyInvalid(f'hyperedge {sorted(edge)} is empty or leaves the vertex set')

    @property
    def rank(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def size_profile(self) -> dict[int, int]:
        profile: dict[int, int] = {}
        for edge in self.edges:
            profile[len(edge)] = profile.get(len(edge), 0) + 1
        return profile


def _closure(group: StabChain, seeds: Iterable, cap: int) -> list:
    '''Orbit closure of tuples or frozensets of points under the group.'''
    def move(g, member):
        if isinstance(member, frozenset):
            return frozenset(g.images[p] for p in member)
        return tuple(g.images[p] for p in member)

    seen = set(seeds)
    queue = list(seen)
    for member in queue:
        for g in group.strong_gens:
            image = move(g, member)
            if image not in seen:
                seen.add(image)
                if len(seen) > cap:
                    raise CapExceeded(f'tuple family exceeds {cap} members')
                queue.append(image)
    return sorted(seen, key=lambda m: (len(m), sorted(m)))


def _default_solver(solver):
    if solver is not None:
        return solver
    from ..luks_solver import get_solver
    return get_solver()


def relational_structure_iso(first: RelationalStructure, second: RelationalStructure,
                             group: Optional[StabChain] = None, solver=None, cap: Optional[int] = None) -> Coset:
    '''
    {g in group : first^g = second}, as string isomorphism of membership vectors over the
    group-closed family of tuples spanned by both structures.
    '''
    n = first.domain_size
    if (second.domain_size != n or first.arity != second.arity
            or len(first.relations) != len(second.relations)
            or len(first.points) != len(second.points)
            or [len(r) for r in first.relations] != [len(r) for r in second.relations]):
        return Coset.empty(n)
    solver = _default_solver(solver)
    group = symmetric_chain(n) if group is None else group
    cap = solver.config.solver.transversal_cap if cap is None else cap
    seeds = [(p,) for p in range(n)]
    for structure in (first, second):
        for rel in structure.relations:
            seeds.extend(rel)
    family = _closure(group, seeds, cap)
    hom, _ = set_action_hom(group, family)

    def encode(structure: RelationalStructure) -> tuple:
        points = structure.points
        return tuple((len(m) == 1 and m[0] in points, tuple(m in rel for rel in structure.relations))
                     for m in family)

    part = solver.solve(hom.image, encode(first), encode(second))
    logger.debug('structure isomorphism over %d tuples: %s', len(family), 'found' if part else 'none')
    if part.is_empty():
        return Coset.empty(n)
    return solver.lift(hom, part)


def hypergraph_iso(first: Hypergraph, second: Hypergraph, solver=None, cap: Optional[int] = None) -> Coset:
    '''Vertex bijections mapping the hyperedges of first onto those of second.'''
    n = first.n
    if second.n != n or first.size_profile() != second.size_profile():
        return Coset.empty(n)
    solver = _default_solver(solver)
    cap = solver.config.solver.transversal_cap if cap is None else cap
    group = symmetric_chain(n)
    sizes = sorted(first.size_profile())
    total = sum(math.comb(n, s) for s in sizes)
    if total > cap:
        raise CapExceeded(f'{total} candidate hyperedges exceed the cap {cap}')
    seeds = [frozenset([v]) for v in range(n)] + list(first.edges) + list(second.edges)
    family = _closure(group, seeds, cap)
    hom, _ = set_action_hom(group, family)
    part = solver.solve(hom.image, [m in first.edges for m in family], [m in second.edges for m in family])
    if part.is_empty():
        return Coset.empty(n)
    return solver.lift(hom, part)
