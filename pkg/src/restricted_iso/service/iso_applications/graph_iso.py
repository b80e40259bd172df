'''
Graph isomorphism for graphs of bounded degree, reduced to string isomorphism.

For connected graphs a fixed edge of the first graph is sent to every oriented edge of the
second; around each pair the graphs are grown layer by layer in breadth-first order. The
isomorphisms of the balls are kept as a coset of position permutations, and each new layer
is attached through the edges leaving the previous one: a structure on edge slots whose
group is the current coset lifted by a symmetric group on the slots of each vertex.
Disconnected graphs are matched component by component.
'''
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import networkx as nx

from ..perm_engine import Coset, Permutation, StabChain, StructurallyInvalid, build_chain, trivial_chain
from .structures import RelationalStructure, _default_solver, relational_structure_iso

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    '''Simple undirected graph on {0..n-1}.'''
    n: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        edges = frozenset(frozenset(e) for e in self.edges)
        object.__setattr__(self, 'edges', edges)
        for edge in edges:
            if len(edge) != 2:
                raise StructurallyInvalid(f'edge {sorted(edge)} is a loop or not a pair')
            if any(not 0 <= v < self.n for v in edge):
                raise StructurallyInvalid(f'edge {sorted(edge)} leaves the vertex set of size {self.n}')

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> 'Graph':
        return cls(n, frozenset(frozenset(p) for p in pairs))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        '''Vertices relabelled by sorted position.'''
        nodes = sorted(graph.nodes)
        position = {v: i for i, v in enumerate(nodes)}
        return cls.from_pairs(len(nodes), [(position[u], position[v]) for u, v in graph.edges if u != v])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(tuple(e) for e in self.edges)
        return graph

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours = [set() for _ in range(self.n)]
        for edge in self.edges:
            u, v = tuple(edge)
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(s) for s in self.adjacency), default=0)

    def degree_sequence(self) -> list[int]:
        return sorted(len(s) for s in self.adjacency)

    def components(self) -> list[list[int]]:
        '''Connected components as sorted vertex lists, ordered by minimum vertex.'''
        return sorted((sorted(c) for c in nx.connected_components(self.to_networkx())), key=lambda c: c[0])

    def induced(self, points: Sequence[int]) -> 'Graph':
        '''Induced subgraph on points, relabelled by sorted position.'''
        position = {p: i for i, p in enumerate(sorted(points))}
        return Graph.from_pairs(len(position), [[position[v] for v in e] for e in self.edges
                                                if all(v in position for v in e)])

    def image(self, g: Permutation) -> 'Graph':
        return Graph(self.n, frozenset(frozenset(g.images[v] for v in e) for e in self.edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def _bfs_layers(graph: Graph, edge: tuple[int, int]) -> list[list[int]]:
    '''Distance layers around an oriented edge; layer 0 is [u, v] in that order.'''
    u, v = edge
    layers = [[u, v]]
    seen = {u, v}
    while True:
        nxt = sorted({w for p in layers[-1] for w in graph.adjacency[p]} - seen)
        if not nxt:
            return layers
        seen.update(nxt)
        layers.append(nxt)


class _LayerSlots:
    '''Edge slots from layer r to layer r+1 of one graph; cap slots per layer-r vertex.'''

    def __init__(self, graph: Graph, layers: list[list[int]], r: int, offset: int, cap: int):
        self.offset = offset
        self.cap = cap
        self.new_position = {w: i for i, w in enumerate(layers[r + 1])}
        self.endpoint: dict[int, int] = {}
        for j, v in enumerate(layers[r]):
            targets = sorted(w for w in graph.adjacency[v] if w in self.new_position)
            for i, w in enumerate(targets):
                self.endpoint[offset + j * cap + i] = w
        self.first_slot: dict[int, int] = {}
        for s in sorted(self.endpoint):
            self.first_slot.setdefault(self.endpoint[s], s)
        self.size = offset + len(layers[r]) * cap
        self.graph = graph

    def structure(self) -> RelationalStructure:
        occupied = sorted(self.endpoint)
        adjacency = self.graph.adjacency
        same = frozenset((s, t) for s in occupied for t in occupied
                         if s != t and self.endpoint[s] == self.endpoint[t])
        adjacent = frozenset((s, t) for s in occupied for t in occupied
                             if self.endpoint[t] in adjacency[self.endpoint[s]])
        return RelationalStructure(self.size, 2, (frozenset((s, s) for s in occupied), same, adjacent))


def _max_boundary(graph: Graph, layers: list[list[int]], r: int) -> int:
    nxt = set(layers[r + 1])
    return max(len(graph.adjacency[v] & nxt) for v in layers[r])


def _lift(h: Permutation, start: int, old: int, width: int, cap: int) -> Permutation:
    '''h on positions [0, old), carried to the slots by moving each slot block with its vertex.'''
    images = list(h.images)
    for j in range(width):
        target = h.images[start + j] - start
        images.extend(old + target * cap + i for i in range(cap))
    return Permutation._trusted(tuple(images))


def _slot_symmetries(old: int, width: int, cap: int) -> list[Permutation]:
    size = old + width * cap
    gens = []
    for j in range(width):
        block = [old + j * cap + i for i in range(cap)]
        if cap >= 2:
            gens.append(Permutation.from_cycles(size, [block[:2]]))
        if cap >= 3:
            gens.append(Permutation.from_cycles(size, [block]))
    return gens


def _extend_layer(coset: Coset, first: Graph, second: Graph, layers1: list[list[int]],
                  layers2: list[list[int]], r: int, solver) -> Coset:
    old = coset.degree
    width = len(layers1[r])
    start = old - width
    cap = max(_max_boundary(first, layers1, r), _max_boundary(second, layers2, r))
    slots1 = _LayerSlots(first, layers1, r, old, cap)
    slots2 = _LayerSlots(second, layers2, r, old, cap)
    group = coset.subgroup
    gens = [_lift(h, start, old, width, cap) for h in group.strong_gens]
    gens.extend(_slot_symmetries(old, width, cap))
    lifted = build_chain(gens, slots1.size, known_order=group.order() * math.factorial(cap) ** width)
    shift = _lift(coset.rep, start, old, width, cap)
    found = relational_structure_iso(slots1.structure(), slots2.structure().image(~shift), group=lifted,
                                     solver=solver)
    if found.is_empty():
        return Coset.empty(old + len(layers1[r + 1]))
    found = found.shifted(shift)
    grown = old + len(layers1[r + 1])

    def restrict(rho: Permutation, target: _LayerSlots) -> Permutation:
        images = list(rho.images[:old])
        for w in layers1[r + 1]:
            images.append(old + target.new_position[target.endpoint[rho.images[slots1.first_slot[w]]]])
        return Permutation._trusted(tuple(images))

    subgroup = build_chain([restrict(h, slots1) for h in found.subgroup.strong_gens], grown)
    logger.debug('layer %d: %d slots, ball isomorphisms of order %d', r + 1, slots1.size, subgroup.order())
    return Coset(grown, subgroup, restrict(found.rep, slots2))


def _relabel(order: list[int]) -> Permutation:
    images = [0] * len(order)
    for i, v in enumerate(order):
        images[v] = i
    return Permutation._trusted(tuple(images))


def _iso_fixing_edge(first: Graph, second: Graph, e1: tuple[int, int], e2: tuple[int, int], solver) -> Coset:
    '''Isomorphisms of connected graphs sending u1 -> u2 and v1 -> v2.'''
    n = first.n
    layers1, layers2 = _bfs_layers(first, e1), _bfs_layers(second, e2)
    if [len(layer) for layer in layers1] != [len(layer) for layer in layers2]:
        return Coset.empty(n)
    coset = Coset.single(Permutation.identity(2))
    for r in range(len(layers1) - 1):
        coset = _extend_layer(coset, first, second, layers1, layers2, r, solver)
        if coset.is_empty():
            return Coset.empty(n)
    order1 = [v for layer in layers1 for v in layer]
    order2 = [v for layer in layers2 for v in layer]
    to_position = _relabel(order1)
    back1, back2 = ~to_position, ~_relabel(order2)
    gens = [to_position * h * back1 for h in coset.subgroup.strong_gens]
    subgroup = build_chain(gens, n, known_order=coset.subgroup.order())
    return Coset(n, subgroup, to_position * coset.rep * back2)


def _connected_iso(first: Graph, second: Graph, solver) -> Coset:
    from ..luks_solver import coset_union
    n = first.n
    if n != second.n or len(first.edges) != len(second.edges) or first.degree_sequence() != second.degree_sequence():
        return Coset.empty(n)
    if n == 1:
        return Coset.single(Permutation.identity(1))
    e1 = first.sorted_edges()[0]
    parts = []
    for a, b in second.sorted_edges():
        for e2 in ((a, b), (b, a)):
            parts.append(_iso_fixing_edge(first, second, e1, e2, solver))
    return coset_union(parts, n)


def _embed(n: int, source: Sequence[int], target: Sequence[int], local: Permutation,
           images: Optional[list[int]] = None) -> list[int]:
    '''Write the component map source[a] -> target[local(a)] into images.'''
    images = list(range(n)) if images is None else images
    for a, v in enumerate(source):
        images[v] = target[local.images[a]]
    return images


def graph_iso_bounded_degree(first: Graph, second: Graph, solver=None) -> Coset:
    '''Iso(first, second) as Aut(first) * g, or the empty coset.'''
    n = first.n
    if n != second.n or len(first.edges) != len(second.edges) or first.degree_sequence() != second.degree_sequence():
        return Coset.empty(n)
    solver = _default_solver(solver)
    comps1, comps2 = first.components(), second.components()
    if len(comps1) != len(comps2):
        return Coset.empty(n)
    if len(comps1) == 1:
        return _connected_iso(first, second, solver)
    parts1 = [first.induced(c) for c in comps1]
    parts2 = [second.induced(c) for c in comps2]
    # classes of mutually isomorphic components of first: (leader, members with leader -> member isos)
    classes: list[tuple[int, dict[int, Permutation], StabChain]] = []
    for i, part in enumerate(parts1):
        for leader, members, _ in classes:
            found = _connected_iso(parts1[leader], part, solver)
            if found:
                members[i] = found.rep
                break
        else:
            aut = _connected_iso(part, part, solver).subgroup
            classes.append((i, {i: Permutation.identity(part.n)}, aut))
    images = list(range(n))
    unused = [sorted(members) for _, members, _ in classes]
    for j, part in enumerate(parts2):
        for c, (leader, members, _) in enumerate(classes):
            if not unused[c]:
                continue
            found = _connected_iso(parts1[leader], part, solver)
            if found:
                i = unused[c].pop(0)
                _embed(n, comps1[i], comps2[j], ~members[i] * found.rep, images)
                break
        else:
            logger.debug('component %d of the second graph has no partner', j)
            return Coset.empty(n)
    gens = []
    for leader, members, aut in classes:
        ordered = sorted(members)
        for i in ordered:
            to_i = members[i]
            for h in aut.strong_gens:
                gens.append(Permutation._trusted(tuple(_embed(n, comps1[i], comps1[i], ~to_i * h * to_i))))
        for i, k in zip(ordered, ordered[1:]):
            swap = ~members[i] * members[k]
            images_swap = _embed(n, comps1[i], comps1[k], swap)
            _embed(n, comps1[k], comps1[i], ~swap, images_swap)
            gens.append(Permutation._trusted(tuple(images_swap)))
    subgroup = build_chain(gens, n) if gens else trivial_chain(n)
    logger.debug('%d components in %d classes, automorphism group of order %d',
                 len(comps1), len(classes), subgroup.order())
    return Coset(n, subgroup, Permutation(images))


def graph_aut_bounded_degree(graph: Graph, solver=None) -> StabChain:
    return graph_iso_bounded_degree(graph, graph, solver).subgroup
