'''
Aggregation of the local certificates of all t-element test sets into either a family of
canonical t-ary structures on [k] or a large set on which the certified automorphisms act as a giant.
'''
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from typing import Hashable, Optional, Sequence

from ...config import CertificateConfig
from ...utils import UnionFind
from ..iso_applications.structures import RelationalStructure
from ..perm_engine import PreconditionViolated, StabChain, build_chain, contains_alternating, restrict_hom, trivial_chain
from ..perm_engine.orbits import orbits_on
from .giant_rep import GiantRep
from .local_certificates import CertOutcome, check_test_set_size, compare_local_certificates, local_certificates
from .symmetry import orbital_configuration, transitivity_degree

logger = logging.getLogger(__name__)


class AggregateKind(str, Enum):
    STRUCTURES = 'STRUCTURES'
    SYMMETRY = 'SYMMETRY'


@dataclass
class SideOutcome:
    kind: AggregateKind
    structures: list[RelationalStructure] = field(default_factory=list)
    delta: tuple[int, ...] = ()
    group: Optional[StabChain] = None
    case: str = ''


@dataclass
class AggregateOutcome:
    first: SideOutcome
    second: SideOutcome

    @property
    def kind(self) -> AggregateKind:
        return self.first.kind

    @property
    def consistent(self) -> bool:
        '''False when the two strings already differ in their canonical outcome, so Iso is empty.'''
        a, b = self.first, self.second
        if a.kind != b.kind or a.case != b.case:
            return False
        if a.kind == AggregateKind.SYMMETRY:
            return len(a.delta) == len(b.delta)
        return len(a.structures) == len(b.structures) > 0


def _full_group(rep: GiantRep, certificates: dict[tuple, CertOutcome]) -> StabChain:
    n = rep.hom.source_degree
    gens = [g for cert in certificates.values() if cert.is_full for g in cert.group.strong_gens]
    return build_chain(gens, n) if gens else trivial_chain(n)


def _orbit_structure(k: int, t: int, orbits: list[list[int]]) -> RelationalStructure:
    pairs = [(a, b) for orb in orbits for a in orb for b in orb]
    return RelationalStructure.padded(k, t, [pairs])


def _orbital_structures(k: int, t: int, image: StabChain, orbit: list[int], bound: int) -> list[RelationalStructure]:
    '''
    Individualize I of size d(F)-1 on the big orbit, then encode each nontrivial orbital of the
    stabilizer as an undirected graph, or by individualizing one more vertex when it is dense and directed.
    '''
    s = transitivity_degree(image, orbit, cap=bound)
    out = []
    for chosen in permutations(orbit, max(s - 1, 0)):
        stab = image.pointwise_stabilizer(chosen)
        rest = [p for p in orbit if p not in chosen]
        marks = [[(p,)] for p in chosen]
        for orbital in orbital_configuration(stab, rest):
            if orbital[0][0] == orbital[0][1]:
                continue
            relation = set(orbital)
            symmetric = all((b, a) in relation for a, b in relation)
            out_degree = len(relation) / max(len(rest), 1)
            if symmetric:
                out.append(RelationalStructure.padded(k, t, marks + [relation], orbit))
            elif out_degree < (len(rest) - 1) / 2:
                both = relation | {(b, a) for a, b in relation}
                out.append(RelationalStructure.padded(k, t, marks + [both], orbit))
            else:
                for v in rest:
                    succ = [(w,) for a, w in relation if a == v]
                    pred = [(a,) for a, w in relation if w == v]
                    out.append(RelationalStructure.padded(k, t, marks + [[(v,)], succ, pred], orbit))
    return out


def _large_support(rep: GiantRep, full: StabChain, t: int, bound: int) -> SideOutcome:
    k = rep.k
    image = rep.hom.image_of_subgroup(full)
    orbits = orbits_on(image.strong_gens, range(k))
    big = [orb for orb in orbits if 4 * len(orb) >= 3 * k]
    if not big:
        return SideOutcome(AggregateKind.STRUCTURES, [_orbit_structure(k, t, orbits)], case='orbits')
    orbit = big[0]
    if contains_alternating(restrict_hom(image, orbit).image):
        return SideOutcome(AggregateKind.SYMMETRY, delta=tuple(orbit), group=full, case='giant')
    return SideOutcome(AggregateKind.STRUCTURES, _orbital_structures(k, t, image, orbit, bound), case='orbital')


def _small_support(solver, strings: Sequence[Sequence[Hashable]], rep: GiantRep, t: int, d: int,
                   supports: list[frozenset[int]], certificates: list[dict], config: CertificateConfig
                   ) -> tuple[SideOutcome, SideOutcome]:
    '''
    Tuple classes of the category of non-full test sets outside the supports, with morphisms
    from compare_local_certificates; both strings share the class numbering.
    '''
    k = rep.k
    domains = [[p for p in range(k) if p not in support] for support in supports]
    objects = [(side, test_set) for side in (0, 1) for test_set in combinations(domains[side], t)
               if not certificates[side][test_set].is_full]
    uf = UnionFind((side, ordered) for side, test_set in objects for ordered in permutations(test_set))
    for side_a, set_a in objects:
        for side_b, set_b in objects:
            found = compare_local_certificates(solver, strings[side_a], strings[side_b], rep, set_a, set_b, d, config)
            if found is None:
                continue
            group, sigma = found
            for pi in group.elements():
                bijection = pi * sigma
                for ordered in permutations(range(t)):
                    source = tuple(set_a[i] for i in ordered)
                    target = tuple(set_b[bijection.images[i]] for i in ordered)
                    uf.union((side_a, source), (side_b, target))
    classes = uf.classes()
    logger.debug('%d test-set objects give %d tuple classes', len(objects), len(classes))
    outcomes = []
    for side in (0, 1):
        relations = [[tup for s, tup in cls if s == side] for cls in classes]
        structure = RelationalStructure(k, t, tuple(frozenset(rel) for rel in relations), frozenset(domains[side]))
        outcomes.append(SideOutcome(AggregateKind.STRUCTURES, [structure], case='tuples'))
    return outcomes[0], outcomes[1]


def aggregate_certificates(solver, x1: Sequence[Hashable], x2: Sequence[Hashable], rep: GiantRep, t: int, d: int,
                           config: Optional[CertificateConfig] = None) -> AggregateOutcome:
    config = config or solver.config.certificate
    k = rep.k
    check_test_set_size(t, d, config)
    if 10 * t >= k and not config.allow_small_t:
        raise PreconditionViolated(f'test sets of size {t} need t < k/10 = {k / 10:.1f}')
    if t > k:
        raise PreconditionViolated(f'test sets of size {t} do not fit into [{k}]')
    strings = (tuple(x1), tuple(x2))
    test_sets = list(combinations(range(k), t))
    certificates = [{T: local_certificates(solver, x, rep, T, d, config) for T in test_sets} for x in strings]
    sides: list[Optional[SideOutcome]] = [None, None]
    supports = []
    for side in (0, 1):
        full = _full_group(rep, certificates[side])
        image = rep.hom.image_of_subgroup(full)
        support = frozenset(p for g in image.strong_gens for p in g.support())
        supports.append(support)
        if 4 * len(support) < k:
            continue
        if 4 * len(support) <= 3 * k:
            structure = RelationalStructure.padded(k, t, [[(p,) for p in sorted(support)]])
            sides[side] = SideOutcome(AggregateKind.STRUCTURES, [structure], case='support')
        else:
            sides[side] = _large_support(rep, full, t, config.transitivity_bound)
    if sides[0] is None and sides[1] is None:
        first, second = _small_support(solver, strings, rep, t, d, supports, certificates, config)
        return AggregateOutcome(first, second)
    if sides[0] is None or sides[1] is None:
        missing = SideOutcome(AggregateKind.STRUCTURES, case='tuples')
        return AggregateOutcome(sides[0] or missing, sides[1] or missing)
    logger.debug('aggregated %d test sets per string: %s / %s', len(test_sets), sides[0].case, sides[1].case)
    return AggregateOutcome(sides[0], sides[1])
