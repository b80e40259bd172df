'''
Recognition of Johnson actions A_m^(t) <= G on t-subsets of [m], and permutations of
[m] induced by automorphisms of the Johnson scheme.
'''
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Optional, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from ...config import ReductionConfig
from ..perm_engine import (AmbiguousSmallM, GiantKind, NotInduced, Permutation, StabChain, is_giant)
from ..perm_engine.orbits import is_transitive, orbits_on

logger = logging.getLogger(__name__)


def johnson_subsets(m: int, t: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in combinations(range(m), t)]


@dataclass(frozen=True)
class JohnsonRecognition:
    '''labels[p] is the t-subset of [m] attached to point p.'''
    m: int
    t: int
    labels: tuple[frozenset[int], ...]

    @cached_property
    def position(self) -> dict[frozenset[int], int]:
        return {label: p for p, label in enumerate(self.labels)}

    @cached_property
    def _containing(self) -> list[list[int]]:
        out = [[] for _ in range(self.m)]
        for p, label in enumerate(self.labels):
            for e in label:
                out[e].append(p)
        return out

    def is_bijection(self) -> bool:
        return (len(self.position) == len(self.labels) == math.comb(self.m, self.t)
                and all(len(label) == self.t and max(label, default=0) < self.m for label in self.labels))

    def induced(self, g: Permutation) -> Permutation:
        '''The permutation of [m] whose action on t-subsets is g read through the labels.'''
        images = []
        for e in range(self.m):
            common = None
            for p in self._containing[e]:
                label = self.labels[g.images[p]]
                common = label if common is None else common & label
            if common is None or len(common) != 1:
                raise NotInduced(f'element does not act on [{self.m}] through the labels')
            images.append(next(iter(common)))
        sigma = Permutation(images)
        if self.johnson_permutation(sigma) != g:
            raise NotInduced('element is not induced by a permutation of the ground set')
        return sigma

    def johnson_permutation(self, sigma: Permutation) -> Permutation:
        '''Action of sigma in Sym(m) on the points through the labels.'''
        return Permutation([self.position[frozenset(sigma.images[e] for e in label)] for label in self.labels])

    def verify(self, chain: StabChain) -> bool:
        '''Labels are a bijection and the standard generators of A_m, carried over, lie in the group.'''
        if not self.is_bijection():
            return False
        for i in range(2, self.m):
            three_cycle = Permutation.from_cycles(self.m, [[0, 1, i]])
            if not chain.contains(self.johnson_permutation(three_cycle)):
                return False
        return True

    def to_dict(self) -> dict:
        return {'m': self.m, 't': self.t, 'labels': [sorted(e + 1 for e in label) for label in self.labels]}


def _orbital_graphs(chain: StabChain, size: int) -> list[dict[int, set[int]]]:
    '''Orbital graphs whose suborbit at point 0 has the given size.'''
    n = chain.degree
    based = chain.with_base_prefix([0])
    transversal = based.levels[0].transversal if based.levels else {0: Permutation.identity(n)}
    stab = based.stabilizer_chain(1)
    graphs = []
    for suborbit in orbits_on(stab.strong_gens, range(n)):
        if len(suborbit) != size or 0 in suborbit:
            continue
        adjacency = {p: {u.images[q] for q in suborbit} for p, u in transversal.items()}
        if len(adjacency) == n and all(a in adjacency[b] for a in adjacency for b in adjacency[a]):
            graphs.append(adjacency)
    return graphs


def _labels_from_graph(adjacency: dict, m: int, t: int) -> Optional[dict]:
    '''
    Rebuild the t-subsets from a Johnson graph: stars {Y+e} of (t-1)-sets Y are the cliques
    through an edge on the side of size m-t+1, and the stars themselves form J(m, t-1).
    '''
    vertices = sorted(adjacency)
    if t == 1:
        if len(vertices) != m:
            return None
        return {v: frozenset([i]) for i, v in enumerate(vertices)}
    if m - t - 1 == t - 1:
        return None
    stars = set()
    for a in vertices:
        for b in adjacency[a]:
            if b < a:
                continue
            common = adjacency[a] & adjacency[b]
            if not common:
                part = set()
            else:
                pivot = min(common)
                part = {pivot} | (common & adjacency[pivot])
                if len(part) != m - t - 1:
                    part = common - part
            if len(part) != m - t - 1:
                return None
            stars.add(frozenset(part | {a, b}))
    if len(stars) != math.comb(m, t - 1):
        return None
    stars = sorted(stars, key=sorted)
    star_adjacency = {i: {j for j, other in enumerate(stars) if j != i and len(star & other) == 1}
                      for i, star in enumerate(stars)}
    star_labels = _labels_from_graph(star_adjacency, m, t - 1)
    if star_labels is None:
        return None
    labels = {v: frozenset() for v in vertices}
    for i, star in enumerate(stars):
        for v in star:
            labels[v] = labels[v] | star_labels[i]
    if any(len(label) != t for label in labels.values()) or len(set(labels.values())) != len(vertices):
        return None
    return labels


def _labels_by_matching(adjacency: dict, m: int, t: int) -> Optional[dict]:
    graph = nx.Graph()
    graph.add_nodes_from(adjacency)
    graph.add_edges_from((a, b) for a in adjacency for b in adjacency[a] if a < b)
    subsets = johnson_subsets(m, t)
    johnson = nx.Graph()
    johnson.add_nodes_from(range(len(subsets)))
    johnson.add_edges_from((i, j) for i, j in combinations(range(len(subsets)), 2)
                           if len(subsets[i] & subsets[j]) == t - 1)
    matcher = GraphMatcher(graph, johnson)
    for mapping in matcher.isomorphisms_iter():
        return {v: subsets[mapping[v]] for v in adjacency}
    return None


def johnson_recognize(chain: StabChain, d: Optional[int] = None,
                      config: Optional[ReductionConfig] = None) -> Optional[JohnsonRecognition]:
    '''(m, t, labels) with A_m^(t) <= G through the labels, or None when G is not Johnson.'''
    config = config or ReductionConfig()
    n = chain.degree
    if n == 0 or n > config.johnson_cap or not is_transitive(chain.strong_gens, n):
        return None
    bound = n if d is None else min(d, n)
    if n <= bound and is_giant(chain) != GiantKind.NEITHER:
        return JohnsonRecognition(n, 1, tuple(frozenset([p]) for p in range(n)))
    for m in range(4, bound + 1):
        for t in range(2, m // 2 + 1):
            if math.comb(m, t) != n:
                continue
            for adjacency in _orbital_graphs(chain, t * (m - t)):
                labels = _labels_from_graph(adjacency, m, t)
                if labels is None and n <= config.johnson_fallback:
                    labels = _labels_by_matching(adjacency, m, t)
                if labels is None:
                    continue
                found = JohnsonRecognition(m, t, tuple(labels[p] for p in range(n)))
                if found.verify(chain):
                    logger.debug('recognized a Johnson action with m=%d t=%d on %d points', m, t, n)
                    return found
    return None


def johnson_induced_permutation(gamma: Permutation, m: int, t: int) -> Permutation:
    '''
    The unique sigma in Sym(m) with X^gamma = X^sigma on the lexicographically indexed t-subsets.
    Below m = 7 every candidate is tried so that ambiguity is reported.
    '''
    labels = tuple(johnson_subsets(m, t))
    if gamma.degree != len(labels):
        raise NotInduced(f'permutation of degree {gamma.degree} does not act on {len(labels)} subsets')
    reading = JohnsonRecognition(m, t, labels)
    if m >= 7:
        return reading.induced(gamma)
    found = [sigma for sigma in (Permutation(p) for p in permutations(range(m)))
             if reading.johnson_permutation(sigma) == gamma]
    if not found:
        raise NotInduced('no permutation of the ground set induces the element')
    if len(found) > 1:
        raise AmbiguousSmallM(f'{len(found)} permutations of [{m}] induce the element')
    return found[0]


def johnson_action(m: int, t: int, gens: Sequence[Permutation]) -> list[Permutation]:
    '''Generators of Sym(m) acting on the lexicographically indexed t-subsets.'''
    reading = JohnsonRecognition(m, t, tuple(johnson_subsets(m, t)))
    return [reading.johnson_permutation(g) for g in gens]
