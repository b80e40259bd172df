'''
File formats. Points are 1-indexed in every file and 0-indexed in memory; permutations
are written in cycle notation.
'''
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..service.iso_applications import Graph, Hypergraph, RelationalStructure
from ..service.luks_solver import StringInstance
from ..service.partition_lattice import Partition, PartitionSequence
from ..service.perm_engine import Coset, GroupHom, StabChain, build_chain, format_cycles, parse_cycles


def _zero_based(points: list[int], n: int, what: str) -> list[int]:
    for p in points:
        if not 1 <= p <= n:
            raise ValueError(f'{what}: point {p} outside 1..{n}')
    return [p - 1 for p in points]


class GroupModel(BaseModel):
    n: int = Field(ge=0)
    gens: list[str] = Field(default_factory=list)

    @model_validator(mode='after')
    def check_gens(self):
        for text in self.gens:
            parse_cycles(text, self.n)
        return self

    def to_chain(self) -> StabChain:
        return build_chain([parse_cycles(text, self.n) for text in self.gens], self.n)

    @classmethod
    def from_chain(cls, chain: StabChain) -> 'GroupModel':
        return cls(n=chain.degree, gens=[format_cycles(g) for g in chain.strong_gens])


class PartitionModel(BaseModel):
    n: int = Field(ge=0)
    blocks: list[list[int]]

    def to_partition(self) -> Partition:
        return Partition(self.n, [_zero_based(b, self.n, 'partition') for b in self.blocks])

    @classmethod
    def from_partition(cls, partition: Partition) -> 'PartitionModel':
        return cls(n=partition.degree, blocks=[[p + 1 for p in b] for b in partition.blocks])


class SequenceModel(BaseModel):
    d: Optional[int] = Field(default=None, ge=1)
    partitions: list[list[list[int]]]

    @field_validator('partitions')
    @classmethod
    def check_nonempty(cls, value):
        if not value:
            raise ValueError('a partition sequence needs at least one partition')
        return value

    def to_sequence(self, group: StabChain) -> PartitionSequence:
        n = group.degree
        chain = [Partition(n, [_zero_based(b, n, 'sequence') for b in blocks]) for blocks in self.partitions]
        if self.d is not None:
            return PartitionSequence(group, chain, self.d)
        d = max((PartitionSequence._sub_count(chain, i, b) for i in range(1, len(chain))
                 for b in chain[i - 1].blocks), default=1)
        return PartitionSequence(group, chain, d)

    @classmethod
    def from_sequence(cls, seq: PartitionSequence) -> 'SequenceModel':
        return cls(d=seq.d, partitions=[[[p + 1 for p in b] for b in partition.blocks] for partition in seq.chain])


class InstanceModel(BaseModel):
    n: int = Field(ge=0)
    sigma: Optional[list[Any]] = None
    x: list[Any]
    y: list[Any]
    group: GroupModel
    sequence: Optional[SequenceModel] = None
    window: Optional[list[int]] = None

    @field_validator('sequence', mode='before')
    @classmethod
    def accept_bare_list(cls, value):
        if isinstance(value, list):
            return {'partitions': value}
        return value

    @model_validator(mode='after')
    def check_strings(self):
        if len(self.x) != self.n or len(self.y) != self.n:
            raise ValueError(f'strings of length {len(self.x)}, {len(self.y)} for n = {self.n}')
        if self.group.n != self.n:
            raise ValueError(f'group acts on {self.group.n} points, instance has {self.n}')
        if self.sigma is not None:
            alphabet = set(map(repr, self.sigma))
            stray = [s for s in self.x + self.y if repr(s) not in alphabet]
            if stray:
                raise ValueError(f'symbols {stray[:5]} are not in sigma')
        if self.window is not None:
            _zero_based(self.window, self.n, 'window')
        return self

    def to_instance(self, group: Optional[StabChain] = None) -> StringInstance:
        group = self.group.to_chain() if group is None else group
        window = None if self.window is None else frozenset(p - 1 for p in self.window)
        return StringInstance(tuple(_hashable(s) for s in self.x), tuple(_hashable(s) for s in self.y), group, window)

    def to_sequence(self, group: StabChain) -> Optional[PartitionSequence]:
        return None if self.sequence is None else self.sequence.to_sequence(group)


def _hashable(symbol):
    if isinstance(symbol, list):
        return tuple(_hashable(s) for s in symbol)
    return symbol


class ResultModel(BaseModel):
    empty: bool
    aut_gens: list[str] = Field(default_factory=list)
    rep: Optional[str] = None
    order: Optional[int] = None

    @model_validator(mode='after')
    def check_empty(self):
        if self.empty and (self.rep is not None or self.aut_gens):
            raise ValueError('an empty result carries no generators and no representative')
        if not self.empty and self.rep is None:
            raise ValueError('a nonempty result needs a representative')
        return self

    @classmethod
    def from_coset(cls, coset: Coset) -> 'ResultModel':
        if coset.is_empty():
            return cls(empty=True)
        return cls(empty=False, aut_gens=[format_cycles(g) for g in coset.subgroup.strong_gens],
                   rep=format_cycles(coset.rep), order=coset.subgroup.order())


class StructureModel(BaseModel):
    n: Optional[int] = Field(default=None, ge=0)
    domain: list[int]
    arity: int = Field(ge=1)
    relations: list[list[list[int]]]

    @model_validator(mode='after')
    def check_domain(self):
        if self.n is None:
            self.n = max(self.domain, default=0)
        _zero_based(self.domain, self.n, 'domain')
        return self

    def to_structure(self, pad: bool = False) -> RelationalStructure:
        relations = [[tuple(_zero_based(t, self.n, 'relation')) for t in rel] for rel in self.relations]
        domain = frozenset(p - 1 for p in self.domain)
        if pad:
            return RelationalStructure.padded(self.n, self.arity, relations, domain)
        return RelationalStructure(self.n, self.arity, tuple(frozenset(rel) for rel in relations), domain)


class HypergraphModel(BaseModel):
    n: int = Field(ge=0)
    edges: list[list[int]]

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, frozenset(frozenset(_zero_based(e, self.n, 'hyperedge')) for e in self.edges))


class GraphModel(BaseModel):
    n: int = Field(ge=0)
    edges: list[list[int]]

    @field_validator('edges')
    @classmethod
    def check_pairs(cls, value):
        for edge in value:
            if len(edge) != 2 or edge[0] == edge[1]:
                raise ValueError(f'edge {edge} is not a pair of distinct vertices')
        return value

    def to_graph(self) -> Graph:
        return Graph.from_pairs(self.n, [_zero_based(e, self.n, 'edge') for e in self.edges])

    @classmethod
    def from_graph(cls, graph: Graph) -> 'GraphModel':
        return cls(n=graph.n, edges=[[u + 1, v + 1] for u, v in graph.sorted_edges()])


class PhiModel(BaseModel):
    k: int = Field(ge=1)
    images: list[str]


class CertifyModel(BaseModel):
    '''A group with generators, a string, a giant representation given by generator images and a test set.'''
    model_config = ConfigDict(populate_by_name=True)

    group: GroupModel
    x: list[Any]
    phi: PhiModel
    test_set: list[int] = Field(alias='T')
    d: int = Field(ge=1)

    @model_validator(mode='after')
    def check_shapes(self):
        if len(self.x) != self.group.n:
            raise ValueError(f'string of length {len(self.x)} for a group on {self.group.n} points')
        if len(self.phi.images) != len(self.group.gens):
            raise ValueError(f'{len(self.group.gens)} generators but {len(self.phi.images)} images')
        _zero_based(self.test_set, self.phi.k, 'test set')
        return self

    def to_hom(self) -> GroupHom:
        n, k = self.group.n, self.phi.k
        gens = [parse_cycles(text, n) for text in self.group.gens]
        images = [parse_cycles(text, k) for text in self.phi.images]
        return GroupHom(build_chain(gens, n), k, images, gens=gens)

    @property
    def points(self) -> list[int]:
        return [p - 1 for p in self.test_set]


class CertificateModel(BaseModel):
    kind: Literal['FULL', 'NONFULL']
    generators: list[str]
    window_trace: list[int] = Field(default_factory=list)
