from .structures import RelationalStructure, Hypergraph, pad_tuple, relational_structure_iso, hypergraph_iso
from .graph_iso import Graph, graph_iso_bounded_degree, graph_aut_bounded_degree


class IsoApplicationService:
    @staticmethod
    def graph_iso(*args, **kwargs):
        '''Isomorphisms between two graphs of bounded degree.
        params:
            first: Graph
            second: Graph
        return: Coset of vertex bijections, empty when not isomorphic
        '''
        return graph_iso_bounded_degree(*args, **kwargs)

    @staticmethod
    def graph_aut(*args, **kwargs):
        return graph_aut_bounded_degree(*args, **kwargs)

    @staticmethod
    def relational_structure_iso(*args, **kwargs):
        return relational_structure_iso(*args, **kwargs)

    @staticmethod
    def hypergraph_iso(*args, **kwargs):
        return hypergraph_iso(*args, **kwargs)


__all__ = [
    'IsoApplicationService', 'RelationalStructure', 'Hypergraph', 'pad_tuple', 'relational_structure_iso',
    'hypergraph_iso', 'Graph', 'graph_iso_bounded_degree', 'graph_aut_bounded_degree',
]
