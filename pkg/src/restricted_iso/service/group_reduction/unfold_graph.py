'''
The unfold graph: the partition tree of a sequence with the subset lattice of [m] squeezed
between a Johnson block and its children. Maximal branches of the graph become the points
of the second change of action.
'''
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

import networkx as nx

from ..partition_lattice import PartitionSequence
from .johnson import JohnsonRecognition

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class BlockNode:
    level: int
    block: tuple[int, ...]

    def label(self) -> str:
        return '{%s}' % ','.join(str(p + 1) for p in self.block)


@dataclass(frozen=True, order=True)
class LatticeNode:
    level: int
    block: tuple[int, ...]
    subset: tuple[int, ...]

    def label(self) -> str:
        block = '{%s}' % ','.join(str(p + 1) for p in self.block)
        subset = '{%s}' % ','.join(str(e + 1) for e in self.subset)
        return f'({self.level},{block},{subset})'


Node = Union[BlockNode, LatticeNode]


def _sort_key(node: Node) -> tuple:
    if isinstance(node, BlockNode):
        return (node.level, node.block, 0, ())
    return (node.level, node.block, 1, node.subset)


@dataclass
class UnfoldGraph:
    '''
    recognitions[i][B] labels the blocks of B_i inside B (in order of their minimum)
    with t-subsets of [m]; levels without an entry keep their tree edges.
    '''
    seq: PartitionSequence
    recognitions: dict[int, dict[tuple[int, ...], JohnsonRecognition]]
    graph: nx.DiGraph
    root: BlockNode

    @property
    def johnson_levels(self) -> list[int]:
        return sorted(self.recognitions)

    def children(self, node: Node) -> list[Node]:
        return sorted(self.graph.successors(node), key=_sort_key)


def build_unfold_graph(seq: PartitionSequence,
                       recognitions: Optional[dict[int, dict[tuple[int, ...], JohnsonRecognition]]] = None
                       ) -> UnfoldGraph:
    recognitions = recognitions or {}
    graph = nx.DiGraph()
    root = BlockNode(0, seq.chain[0].blocks[0])
    graph.add_node(root)
    for level in range(1, len(seq.chain)):
        for block in seq.chain[level - 1].blocks:
            parent = BlockNode(level - 1, block)
            subs = [BlockNode(level, b) for b in seq.sub_blocks(level, block)]
            rec = recognitions.get(level, {}).get(block)
            if rec is None:
                graph.add_edges_from((parent, child) for child in subs)
                continue
            graph.add_edge(parent, LatticeNode(level, block, ()))
            for size in range(rec.t):
                for subset in combinations(range(rec.m), size):
                    here = LatticeNode(level, block, subset)
                    for e in range(rec.m):
                        if e not in subset:
                            graph.add_edge(here, LatticeNode(level, block, tuple(sorted(subset + (e,)))))
            for child, label in zip(subs, rec.labels):
                graph.add_edge(LatticeNode(level, block, tuple(sorted(label))), child)
    logger.debug('unfold graph: %d vertices, %d edges, Johnson levels %s',
                 graph.number_of_nodes(), graph.number_of_edges(), sorted(recognitions))
    return UnfoldGraph(seq, recognitions, graph, root)


def maximal_branches(unfold: UnfoldGraph) -> list[tuple[Node, ...]]:
    '''Longest paths from the root along edges that increase the distance by one, children in sorted order.'''
    distance = nx.single_source_shortest_path_length(unfold.graph, unfold.root)
    height = max(distance.values())
    branches = []
    stack = [(unfold.root,)]
    while stack:
        path = stack.pop()
        node = path[-1]
        if len(path) - 1 == height:
            branches.append(path)
            continue
        forward = [c for c in unfold.children(node) if distance[c] == distance[node] + 1]
        stack.extend(path + (c,) for c in reversed(forward))
    return branches


def unfold_graph_to_dot(unfold: UnfoldGraph, name: str = 'unfold') -> str:
    '''DOT text with 1-indexed labels, nodes and edges in sorted order.'''
    nodes = sorted(unfold.graph.nodes, key=_sort_key)
    ids = {node: f'v{i}' for i, node in enumerate(nodes)}
    lines = [f'digraph {name} {{']
    for node in nodes:
        shape = 'box' if isinstance(node, BlockNode) else 'ellipse'
        lines.append(f'  {ids[node]} [label="{node.label()}", shape={shape}];')
    for node in nodes:
        for child in unfold.children(node):
            lines.append(f'  {ids[node]} -> {ids[child]};')
    lines.append('}')
    return '\n'.join(lines) + '\n'
