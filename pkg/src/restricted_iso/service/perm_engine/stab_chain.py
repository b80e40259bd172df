import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from random import Random
from typing import Iterable, Iterator, Optional, Sequence

from ...utils import get_engine_settings
from .errors import CapExceeded, DomainMismatch
from .permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorList:
    '''Generators of a permutation group, all on the same domain.'''
    degree: int
    gens: tuple[Permutation, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f'degree must be non-negative, got {self.degree}')
        object.__setattr__(self, 'gens', tuple(self.gens))
        for g in self.gens:
            if g.degree != self.degree:
                raise DomainMismatch(f'generator of degree {g.degree} in a list of degree {self.degree}')


class _Level:
    '''One base point with its fundamental orbit and transversal.'''
    __slots__ = ('base_point', 'gens', 'transversal', '_inverse')

    def __init__(self, base_point: int, gens: list[Permutation], degree: int):
        self.base_point = base_point
        self.gens = gens
        self.transversal: dict[int, Permutation] = {}
        self._inverse: dict[int, Permutation] = {}
        self.rebuild_orbit(degree)

    def rebuild_orbit(self, degree: int):
        identity = Permutation.identity(degree)
        transversal = {self.base_point: identity}
        queue = [self.base_point]
        for point in queue:
            u = transversal[point]
            for s in self.gens:
                image = s.images[point]
                if image not in transversal:
                    transversal[image] = u * s
                    queue.append(image)
        self.transversal = transversal
        self._inverse = {}

    def inverse(self, point: int) -> Permutation:
        u_inv = self._inverse.get(point)
        if u_inv is None:
            u_inv = ~self.transversal[point]
            self._inverse[point] = u_inv
        return u_inv

    def orbit_size(self) -> int:
        return len(self.transversal)


class StabChain:
    '''
    Base and strong generating set of a permutation group.

    Level i stores the pointwise stabilizer of base[:i] acting on the orbit of base[i];
    its transversal maps base[i] to each orbit point. Every element factors uniquely as
    u_{m-1} * ... * u_0 with u_i from the transversal of level i.
    '''

    def __init__(self, degree: int, levels: Sequence[_Level]):
        self.degree = degree
        self._levels = tuple(levels)

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.base_point for level in self._levels)

    @property
    def levels(self) -> tuple[_Level, ...]:
        return self._levels

    @cached_property
    def strong_gens(self) -> tuple[Permutation, ...]:
        seen = []
        for level in self._levels:
            for g in level.gens:
                if g not in seen:
                    seen.append(g)
        return tuple(seen)

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self.strong_gens

    @cached_property
    def _order(self) -> int:
        return math.prod(level.orbit_size() for level in self._levels)

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __repr__(self) -> str:
        return f'StabChain(degree={self.degree}, order={self.order()}, base={list(self.base)})'

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        '''Strip g through the levels from start; returns the residue and the level where it stopped.'''
        if g.degree != self.degree:
            raise DomainMismatch(f'element of degree {g.degree} against chain of degree {self.degree}')
        for i in range(start, len(self._levels)):
            level = self._levels[i]
            beta = g.images[level.base_point]
            if beta not in level.transversal:
                return g, i
            g = g * level.inverse(beta)
        return g, len(self._levels)

    def contains(self, g: Permutation) -> bool:
        residue, _ = self.sift(g)
        return residue.is_identity()

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def contains_group(self, other: 'StabChain') -> bool:
        return all(self.contains(g) for g in other.strong_gens)

    def same_group(self, other: 'StabChain') -> bool:
        return self.order() == other.order() and self.contains_group(other)

    def factor(self, g: Permutation) -> list[int]:
        '''Base images of g level by level; g must belong to the group.'''
        points = []
        for level in self._levels:
            beta = g.images[level.base_point]
            points.append(beta)
            g = g * level.inverse(beta)
        return points

    def elements(self, cap: Optional[int] = None) -> Iterator[Permutation]:
        '''Every element exactly once, ordered lexicographically by the images of the base.'''
        cap = get_engine_settings().solver.enumeration_cap if cap is None else cap
        if self.order() > cap:
            raise CapExceeded(f'group order {self.order()} exceeds enumeration cap {cap}')
        levels = self._levels
        depth = len(levels)

        def walk(i: int, acc: Permutation) -> Iterator[Permutation]:
            if i == depth:
                yield acc
                return
            level = levels[i]
            for beta in sorted(level.transversal, key=lambda p: acc.images[p]):
                yield from walk(i + 1, level.transversal[beta] * acc)

        yield from walk(0, Permutation.identity(self.degree))

    def random_element(self, rng: Random) -> Permutation:
        g = Permutation.identity(self.degree)
        for level in self._levels:
            points = sorted(level.transversal)
            g = level.transversal[points[rng.randrange(len(points))]] * g
        return g

    def stabilizer_chain(self, depth: int) -> 'StabChain':
        '''Pointwise stabilizer of base[:depth], read off the existing levels.'''
        return StabChain(self.degree, self._levels[depth:])

    def with_base_prefix(self, prefix: Sequence[int]) -> 'StabChain':
        if tuple(self.base[:len(prefix)]) == tuple(prefix):
            return self
        return build_chain(self.strong_gens, self.degree, base_prefix=prefix, known_order=self.order())

    def pointwise_stabilizer(self, points: Iterable[int]) -> 'StabChain':
        prefix = sorted(set(points))
        if not prefix:
            return self
        chain = self.with_base_prefix(prefix)
        return chain.stabilizer_chain(len(prefix))

    def transversal(self, level: int = 0) -> dict[int, Permutation]:
        return dict(self._levels[level].transversal)


def _first_moved_point(g: Permutation, exclude: Sequence[int]) -> Optional[int]:
    for point, image in enumerate(g.images):
        if point != image and point not in exclude:
            return point
    return None


class _ChainBuilder:
    '''Mutable state of one Schreier-Sims run.'''

    def __init__(self, degree: int, base_prefix: Sequence[int]):
        self.degree = degree
        self.levels: list[_Level] = [_Level(b, [], degree) for b in base_prefix]

    def order(self) -> int:
        return math.prod(level.orbit_size() for level in self.levels)

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            beta = g.images[level.base_point]
            if beta not in level.transversal:
                return g, i
            g = g * level.inverse(beta)
        return g, len(self.levels)

    def add_residue(self, h: Permutation, start: int, stop: int):
        '''Add h as a strong generator on levels start..stop, extending the base if needed.'''
        if stop == len(self.levels):
            point = _first_moved_point(h, [level.base_point for level in self.levels])
            self.levels.append(_Level(point, [], self.degree))
        for i in range(start, stop + 1):
            self.levels[i].gens.append(h)
            self.levels[i].rebuild_orbit(self.degree)

    def absorb(self, g: Permutation) -> bool:
        h, stop = self.sift(g)
        if h.is_identity():
            return False
        self.add_residue(h, 0, stop)
        return True

    def verify(self):
        '''Deterministic Schreier-Sims pass; repairs the chain until every Schreier generator sifts.'''
        i = len(self.levels) - 1
        while i >= 0:
            level = self.levels[i]
            jumped = False
            for beta in list(level.transversal):
                u_beta = level.transversal[beta]
                for s in list(level.gens):
                    image = s.images[beta]
                    schreier = u_beta * s * level.inverse(image)
                    if schreier.is_identity():
                        continue
                    h, stop = self.sift(schreier, i + 1)
                    if not h.is_identity():
                        self.add_residue(h, i + 1, stop)
                        i = stop
                        jumped = True
                        break
                if jumped:
                    break
            if not jumped:
                i -= 1


def build_chain(gens: Iterable[Permutation], degree: int, base_prefix: Sequence[int] = (),
                known_order: Optional[int] = None, seed: Optional[int] = None,
                rounds: Optional[int] = None) -> StabChain:
    '''
    Schreier-Sims with a seeded product-replacement warm-up.
    With known_order the warm-up alone may certify the chain; otherwise a deterministic
    verification pass always runs.
    '''
    gens = [g for g in gens if not g.is_identity()]
    for g in gens:
        if g.degree != degree:
            raise DomainMismatch(f'generator of degree {g.degree} for domain of size {degree}')
    builder = _ChainBuilder(degree, base_prefix)
    for g in gens:
        builder.absorb(g)
    if gens and (known_order is None or builder.order() != known_order):
        rng = Random(get_engine_settings().solver.random_seed if seed is None else seed)
        rounds = get_engine_settings().solver.random_rounds if rounds is None else rounds
        pool = list(gens) * 2 if len(gens) < 5 else list(gens)
        acc = Permutation.identity(degree)
        quiet = 0
        limit = rounds if known_order is None else max(rounds, 4 * degree + 40)
        while quiet < limit:
            if known_order is not None and builder.order() == known_order:
                break
            a, b = rng.sample(range(len(pool)), 2) if len(pool) > 1 else (0, 0)
            pool[a] = pool[a] * pool[b] if a != b else pool[a] * pool[a]
            acc = acc * pool[a]
            quiet = 0 if builder.absorb(acc) else quiet + 1
        if known_order is None or builder.order() != known_order:
            builder.verify()
    for level in builder.levels:
        level.gens = tuple(level.gens)
    chain = StabChain(degree, builder.levels)
    logger.debug('built chain degree=%d order=%d base=%s', degree, chain.order(), list(chain.base))
    return chain


def bsgs_build(g: GeneratorList) -> StabChain:
    return build_chain(g.gens, g.degree)


def trivial_chain(degree: int) -> StabChain:
    return StabChain(degree, ())


def symmetric_chain(degree: int) -> StabChain:
    gens = []
    if degree >= 2:
        gens.append(Permutation.from_cycles(degree, [[0, 1]]))
    if degree >= 3:
        gens.append(Permutation.from_cycles(degree, [list(range(degree))]))
    return build_chain(gens, degree, known_order=math.factorial(degree))


def alternating_chain(degree: int) -> StabChain:
    gens = [Permutation.from_cycles(degree, [[0, 1, i]]) for i in range(2, degree)]
    order = math.factorial(degree) // 2 if degree >= 2 else 1
    return build_chain(gens, degree, known_order=order)
