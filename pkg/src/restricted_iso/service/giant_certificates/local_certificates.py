'''
Local certificates of fullness and non-fullness for test sets of a giant representation,
and their comparison across two strings.
'''
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Optional, Sequence

from ...config import CertificateConfig
from ..perm_engine import (Coset, GroupHom, Permutation, PreconditionViolated, StabChain, T1FullViolation,
                           contains_alternating, format_cycles, set_transporter, setwise_stabilizer)
from .giant_rep import GiantRep, affected_points

logger = logging.getLogger(__name__)


class CertKind(str, Enum):
    FULL = 'FULL'
    NONFULL = 'NONFULL'


@dataclass
class CertOutcome:
    '''FULL carries K <= Aut_{G_T}(x) with (K^phi)^T >= Alt(T); NONFULL carries M on the t positions of T.'''
    kind: CertKind
    group: StabChain
    test_set: tuple[int, ...]
    window_trace: list[int] = field(default_factory=list)

    @property
    def is_full(self) -> bool:
        return self.kind == CertKind.FULL

    def to_dict(self) -> dict:
        return {
            'kind': self.kind.value,
            'generators': [format_cycles(g) for g in self.group.strong_gens],
            'window_trace': list(self.window_trace),
        }


def check_test_set_size(t: int, d: int, config: CertificateConfig):
    bound = max(8.0, 2 + math.log2(max(d, 1)))
    if t <= bound and not config.allow_small_t:
        raise PreconditionViolated(f'test sets of size {t} need t > {bound:.2f}')


def hom_on_test_set(rep: GiantRep, subgroup: StabChain, test_set: Sequence[int]) -> GroupHom:
    '''phi restricted to a subgroup of G_T, read on the positions of T.'''
    phi = rep.hom
    points = list(test_set)
    return GroupHom.from_action(subgroup, len(points), lambda g: phi.image_of(g).restricted(points))


def window_isomorphisms(solver, coset: Coset, psi: GroupHom, x: Sequence[Hashable], y: Sequence[Hashable],
                        window: frozenset[int]) -> Coset:
    '''
    Iso^W over coset = H*s. Small windows recurse directly; large ones split H into
    cosets of ker(psi) along a transversal of the image.
    '''
    if coset.is_empty():
        return coset
    n = coset.degree
    s = coset.rep
    z = tuple(y[s.images[a]] for a in range(n))
    if 2 * len(window) <= n:
        return solver.solve(coset.subgroup, x, z, window).shifted(s)
    return solver.standard_luks(coset.subgroup, tuple(x), z, window, psi, None).shifted(s)


def local_certificates(solver, x: Sequence[Hashable], rep: GiantRep, test_set: Sequence[int], d: int,
                       config: Optional[CertificateConfig] = None) -> CertOutcome:
    config = config or solver.config.certificate
    test_set = tuple(sorted(test_set))
    check_test_set_size(len(test_set), d, config)
    phi = rep.hom
    current = phi.preimage_of_subgroup(setwise_stabilizer(rep.image, test_set, solver.config.solver.d_cap))
    window: frozenset[int] = frozenset()
    trace = []
    while True:
        psi = hom_on_test_set(rep, current, test_set)
        if not contains_alternating(psi.image):
            logger.debug('test set %s is not full after %d windows', test_set, len(trace))
            return CertOutcome(CertKind.NONFULL, psi.image, test_set, trace)
        affected = affected_points(current, GiantRep(psi))
        if affected == window:
            break
        window = affected
        trace.append(len(window))
        current = window_isomorphisms(solver, Coset.of_group(current), psi, x, x, window).subgroup
    fixer = current.pointwise_stabilizer(p for p in range(current.degree) if p not in window)
    logger.debug('test set %s is full with a window of %d points', test_set, len(window))
    return CertOutcome(CertKind.FULL, fixer, test_set, trace)


def compare_local_certificates(solver, x1: Sequence[Hashable], x2: Sequence[Hashable], rep: GiantRep,
                               first: Sequence[int], second: Sequence[int], d: int,
                               config: Optional[CertificateConfig] = None
                               ) -> Optional[tuple[StabChain, Permutation]]:
    '''
    (M, sigma) on positions of the test sets: every g in Iso_G(x1, x2) taking first to second
    restricts, through phi, to an element of M * sigma. None when no such mapping can exist.
    '''
    config = config or solver.config.certificate
    first, second = tuple(sorted(first)), tuple(sorted(second))
    if len(first) != len(second):
        return None
    check_test_set_size(len(first), d, config)
    phi = rep.hom
    d_cap = solver.config.solver.d_cap
    transporter = set_transporter(rep.image, first, second, d_cap)
    if transporter is None:
        return None
    n = phi.source_degree
    current = Coset(n, phi.preimage_of_subgroup(setwise_stabilizer(rep.image, first, d_cap)), phi.preimage(transporter))
    window: frozenset[int] = frozenset()
    while True:
        psi = hom_on_test_set(rep, current.subgroup, first)
        if not contains_alternating(psi.image):
            break
        affected = affected_points(current.subgroup, GiantRep(psi))
        if affected == window:
            raise T1FullViolation(f'test set {first} is full for the first string')
        window = affected
        current = window_isomorphisms(solver, current, psi, x1, x2, window)
        if current.is_empty():
            return None
    image = phi.image_of(current.rep)
    position = {p: i for i, p in enumerate(second)}
    sigma = Permutation([position[image.images[p]] for p in first])
    return psi.image, sigma
