import logging
from collections import Counter
from typing import Callable, Hashable, Iterable, Optional, Sequence

from ...config import ToolkitConfig
from ...utils import get_engine_settings, get_recursion_tracer
from ..partition_lattice import Partition, PartitionSequence, is_semi_regular, restrict_sequence
from ..perm_engine import (Coset, GroupHom, Permutation, StabChain, TransversalCapExceeded, build_chain,
                           induced_action, restrict_hom, trivial_chain)
from ..perm_engine.orbits import orbits_on
from .instance import StringInstance, restrict_instance
from .recursion import certificate_recursion
from .union import coset_union

logger = logging.getLogger(__name__)

_RESTRICTION_CACHE_SIZE = 4096


class LuksSolver:
    '''
    String isomorphism over permutation groups with an almost d-ary sequence:
    orbit-by-orbit processing, the standard Luks reduction over G_(B_1) when the top
    quotient is semi-regular, and the certificate-driven recursion otherwise.
    '''

    def __init__(self, config: Optional[ToolkitConfig] = None, structure_iso: Optional[Callable] = None,
                 certificates: bool = True):
        self.config = config or ToolkitConfig()
        self.structure_iso = structure_iso
        self.certificates = certificates
        self._plain: Optional['LuksSolver'] = None
        self.tracer = get_recursion_tracer()
        self._restrictions: dict = {}
        get_engine_settings().apply(self.config.solver)

    # entry points

    def solve(self, group: StabChain, x: Sequence[Hashable], y: Sequence[Hashable],
              window: Optional[Iterable[int]] = None, seq: Optional[PartitionSequence] = None) -> Coset:
        '''Iso_G^W(x, y) as a coset, or the empty coset.'''
        n = group.degree
        x, y = tuple(x), tuple(y)
        window = None if window is None else frozenset(window)
        if window is not None and len(window) == n:
            window = None
        points = range(n) if window is None else sorted(window)
        if not points:
            return Coset.of_group(group)
        orbits = orbits_on(group.strong_gens, points)
        for orb in orbits:
            if Counter(x[p] for p in orb) != Counter(y[p] for p in orb):
                return Coset.empty(n)
        if group.order() <= self.config.solver.brute_cap or n <= 2:
            branch = 'base'
        elif window is None and len(orbits) == 1:
            branch = 'transitive'
        else:
            branch = 'orbits'
        self.tracer.enter(branch)
        try:
            if branch == 'base':
                return self.base_case(group, x, y, window)
            if branch == 'orbits':
                return self.orbit_by_orbit(group, x, y, orbits, seq)
            return self._transitive(group, x, y, seq)
        finally:
            self.tracer.leave()

    def solve_coset(self, coset: Coset, x: Sequence[Hashable], y: Sequence[Hashable],
                    window: Optional[Iterable[int]] = None, seq: Optional[PartitionSequence] = None) -> Coset:
        '''Iso over the coset G*g: Iso_G(x, y o g) * g.'''
        if coset.is_empty():
            return coset
        g = coset.rep
        z = tuple(y[g.images[a]] for a in range(coset.degree))
        return self.solve(coset.subgroup, x, z, window, seq).shifted(g)

    def plain(self) -> 'LuksSolver':
        '''Same configuration without the certificate recursion, for structure isomorphism inside it.'''
        if not self.certificates:
            return self
        if self._plain is None:
            self._plain = LuksSolver(self.config, self.structure_iso, certificates=False)
        return self._plain

    # branches

    def base_case(self, group: StabChain, x: Sequence[Hashable], y: Sequence[Hashable],
                  window: Optional[Iterable[int]] = None) -> Coset:
        n = group.degree
        points = range(n) if window is None else sorted(window)
        rep = None
        inverse = None
        gens: list[Permutation] = []
        subgroup = trivial_chain(n)
        for g in group.elements(self.config.solver.enumeration_cap):
            if any(x[a] != y[g.images[a]] for a in points):
                continue
            if rep is None:
                rep, inverse = g, ~g
                continue
            quotient = g * inverse
            if not subgroup.contains(quotient):
                gens.append(quotient)
                subgroup = build_chain(gens, n)
        if rep is None:
            return Coset.empty(n)
        return Coset(n, subgroup, rep)

    def orbit_by_orbit(self, group: StabChain, x: tuple, y: tuple, orbits: list[list[int]],
                       seq: Optional[PartitionSequence]) -> Coset:
        n = group.degree
        self.tracer.record('orbits', n, [len(orb) for orb in orbits])
        current = Coset.of_group(group)
        for orb in orbits:
            current = self._iso_on_orbit(current, x, y, orb, seq)
            if current.is_empty():
                logger.debug('orbit %s admits no isomorphism', orb)
                return current
        return current

    def _iso_on_orbit(self, coset: Coset, x: tuple, y: tuple, orb: list[int],
                      seq: Optional[PartitionSequence]) -> Coset:
        '''Iso_K^O(x, y) for K = H*r and an H-orbit O, solved on the action of H on O.'''
        n = coset.degree
        r = coset.rep
        z = tuple(y[r.images[a]] for a in range(n))
        if all(x[p] == z[p] for p in orb) and len(set(x[p] for p in orb)) == 1:
            return coset
        sub, hom = restrict_instance(StringInstance(x, z, coset.subgroup), orb,
                                     self.restriction(coset.subgroup, orb))
        sub_seq = restrict_sequence(seq, coset.subgroup, orb) if seq is not None else None
        part = self.solve(sub.group, sub.x, sub.y, None, sub_seq)
        if part.is_empty():
            return Coset.empty(n)
        return self.lift(hom, part).shifted(r)

    def lift(self, hom: GroupHom, part: Coset) -> Coset:
        '''Full preimage of a coset of the image.'''
        kernel = hom.kernel
        gens = list(kernel.strong_gens)
        gens.extend(hom.preimage(g) for g in part.subgroup.strong_gens)
        subgroup = build_chain(gens, hom.source_degree, known_order=kernel.order() * part.subgroup.order())
        return Coset(hom.source_degree, subgroup, hom.preimage(part.rep))

    def restriction(self, group: StabChain, points: Sequence[int]) -> GroupHom:
        key = (id(group), tuple(points))
        cached = self._restrictions.get(key)
        if cached is not None and cached[0] is group:
            return cached[1]
        hom = restrict_hom(group, points)
        if len(self._restrictions) >= _RESTRICTION_CACHE_SIZE:
            self._restrictions.clear()
        self._restrictions[key] = (group, hom)
        return hom

    def _transitive(self, group: StabChain, x: tuple, y: tuple, seq: Optional[PartitionSequence]) -> Coset:
        n = group.degree
        if seq is None or seq.degree != n or len(seq.chain) < 2:
            seq = PartitionSequence.from_block_tower(group)
        elif seq.group is not group:
            seq = PartitionSequence(group, seq.chain, seq.d)
        hom = induced_action(group, seq.chain[1].blocks)
        if is_semi_regular(hom.image) or not self.certificates:
            logger.debug('top quotient of size %d: standard Luks reduction', hom.target_degree)
            return self.standard_luks(group, x, y, None, hom, seq)
        return certificate_recursion(self, group, x, y, seq, hom)

    def standard_luks(self, group: StabChain, x: tuple, y: tuple, window: Optional[frozenset],
                      hom: GroupHom, seq: Optional[PartitionSequence]) -> Coset:
        '''Union over a transversal of ker(hom) of the isomorphisms inside each coset.'''
        n = group.degree
        cosets = hom.image.order()
        if cosets > self.config.solver.transversal_cap:
            raise TransversalCapExceeded(f'{cosets} cosets exceed the transversal cap '
                                         f'{self.config.solver.transversal_cap}')
        kernel = hom.kernel
        sub_seq = PartitionSequence(kernel, seq.chain, seq.d) if seq is not None else None
        self.tracer.record('luks', n, [len(orb) for orb in orbits_on(kernel.strong_gens, range(n))])
        if kernel.is_trivial():
            points = range(n) if window is None else sorted(window)
            return coset_union((Coset.single(g) for g, _ in hom.image_transversal()
                                if all(x[a] == y[g.images[a]] for a in points)), n)
        parts = []
        for g, _ in hom.image_transversal():
            parts.append(self.solve_coset(Coset(n, kernel, g), x, y, window, sub_seq))
        return coset_union(parts, n)


_default_solver: Optional[LuksSolver] = None


def get_solver(config: Optional[ToolkitConfig] = None) -> LuksSolver:
    global _default_solver
    if config is not None:
        return LuksSolver(config)
    if _default_solver is None:
        _default_solver = LuksSolver()
    return _default_solver


def string_iso_main(inst: StringInstance, seq: Optional[PartitionSequence] = None,
                    solver: Optional[LuksSolver] = None) -> Coset:
    solver = solver or get_solver()
    if inst.shift is not None:
        return iso_window_shift(inst, seq, solver)
    return solver.solve(inst.group, inst.x, inst.y, inst.window, seq)


def iso_window_shift(inst: StringInstance, seq: Optional[PartitionSequence] = None,
                     solver: Optional[LuksSolver] = None) -> Coset:
    solver = solver or get_solver()
    shift = inst.shift if inst.shift is not None else Permutation.identity(inst.degree)
    return solver.solve_coset(Coset(inst.degree, inst.group, shift), inst.x, inst.y, inst.window, seq)


def orbit_by_orbit(inst: StringInstance, seq: Optional[PartitionSequence] = None,
                   solver: Optional[LuksSolver] = None) -> Coset:
    solver = solver or get_solver()
    orbits = orbits_on(inst.group.strong_gens, sorted(inst.points))
    return solver.orbit_by_orbit(inst.group, inst.x, inst.y, orbits, seq)


def standard_luks_reduction(inst: StringInstance, blocks: Partition,
                            solver: Optional[LuksSolver] = None) -> Coset:
    solver = solver or get_solver()
    hom = induced_action(inst.group, blocks.blocks)
    return solver.standard_luks(inst.group, inst.x, inst.y, inst.window, hom, None)


def base_case(inst: StringInstance, solver: Optional[LuksSolver] = None) -> Coset:
    solver = solver or get_solver()
    return solver.base_case(inst.group, inst.x, inst.y, inst.window)
