import logging
from functools import cached_property
from random import Random
from typing import Callable, Hashable, Optional, Sequence

from .errors import DomainMismatch, NotInvariant
from .permutation import Permutation, direct_sum
from .stab_chain import StabChain, build_chain

logger = logging.getLogger(__name__)


class GroupHom:
    '''
    Homomorphism from a permutation group into Sym(k), given by generator images.

    Kernel and preimages come from the graph subgroup {(g, phi(g))} acting on the
    n + k points of the disjoint union, with a base that starts on the target points.
    An optional action callable evaluates arbitrary elements directly.
    '''

    def __init__(self, source: StabChain, target_degree: int, images: Sequence[Permutation],
                 gens: Optional[Sequence[Permutation]] = None,
                 action: Optional[Callable[[Permutation], Permutation]] = None):
        self.source = source
        self.target_degree = target_degree
        self.gens = tuple(source.strong_gens if gens is None else gens)
        self.images = tuple(images)
        self.action = action
        if len(self.gens) != len(self.images):
            raise ValueError(f'{len(self.gens)} generators but {len(self.images)} images')
        for image in self.images:
            if image.degree != target_degree:
                raise DomainMismatch(f'image of degree {image.degree}, target degree {target_degree}')

    @classmethod
    def from_action(cls, source: StabChain, target_degree: int,
                    action: Callable[[Permutation], Permutation]) -> 'GroupHom':
        gens = source.strong_gens
        return cls(source, target_degree, [action(g) for g in gens], gens=gens, action=action)

    @property
    def source_degree(self) -> int:
        return self.source.degree

    def _pairs(self) -> list[Permutation]:
        return [direct_sum(g, image) for g, image in zip(self.gens, self.images)]

    @cached_property
    def _target_first(self) -> StabChain:
        n, k = self.source_degree, self.target_degree
        return build_chain(self._pairs(), n + k, base_prefix=range(n, n + k),
                           known_order=self.source.order())

    @cached_property
    def _source_first(self) -> StabChain:
        moved = sorted({p for g in self.gens for p in g.support()})
        return build_chain(self._pairs(), self.source_degree + self.target_degree,
                           base_prefix=moved, known_order=self.source.order())

    @cached_property
    def image(self) -> StabChain:
        return build_chain(self.images, self.target_degree)

    @cached_property
    def kernel(self) -> StabChain:
        n, k = self.source_degree, self.target_degree
        stab = self._target_first.stabilizer_chain(k)
        gens = [Permutation._trusted(g.images[:n]) for g in stab.strong_gens]
        return build_chain(gens, n, known_order=stab.order())

    def image_of(self, g: Permutation) -> Permutation:
        if g.degree != self.source_degree:
            raise DomainMismatch(f'element of degree {g.degree}, source degree {self.source_degree}')
        if self.action is not None:
            return self.action(g)
        n, k = self.source_degree, self.target_degree
        residue, _ = self._source_first.sift(direct_sum(g, Permutation.identity(k)))
        if any(residue.images[p] != p for p in range(n)):
            raise ValueError('element is not in the source group')
        return ~Permutation._trusted(tuple(i - n for i in residue.images[n:]))

    def preimage(self, target: Permutation) -> Optional[Permutation]:
        '''Some g with image_of(g) = target, or None when target is outside the image.'''
        n, k = self.source_degree, self.target_degree
        if target.degree != k:
            raise DomainMismatch(f'target element of degree {target.degree}, expected {k}')
        residue = direct_sum(Permutation.identity(n), target)
        for level in self._target_first.levels[:k]:
            beta = residue.images[level.base_point]
            if beta not in level.transversal:
                return None
            residue = residue * level.inverse(beta)
        return ~Permutation._trusted(residue.images[:n])

    def image_transversal(self) -> list[tuple[Permutation, Permutation]]:
        '''(g, image) pairs, one per element of the image, in a deterministic order.'''
        n, k = self.source_degree, self.target_degree
        chain = self._target_first
        depth = min(k, len(chain.levels))
        out = []

        def walk(i: int, acc: Permutation):
            if i == depth:
                out.append((Permutation._trusted(acc.images[:n]),
                            Permutation._trusted(tuple(p - n for p in acc.images[n:]))))
                return
            level = chain.levels[i]
            for beta in sorted(level.transversal, key=lambda p: acc.images[p]):
                walk(i + 1, level.transversal[beta] * acc)

        walk(0, Permutation.identity(n + k))
        return out

    def restrict_to(self, subgroup: StabChain) -> 'GroupHom':
        return GroupHom(subgroup, self.target_degree,
                        [self.image_of(g) for g in subgroup.strong_gens],
                        gens=subgroup.strong_gens, action=self.action)

    def then(self, other: 'GroupHom') -> 'GroupHom':
        '''self followed by other; other must be defined on the image of self.'''
        action = None
        if self.action is not None and other.action is not None:
            first, second = self.action, other.action
            action = lambda g: second(first(g))
        return GroupHom(self.source, other.target_degree,
                        [other.image_of(image) for image in self.images],
                        gens=self.gens, action=action)

    def image_of_subgroup(self, subgroup: StabChain) -> StabChain:
        return build_chain([self.image_of(g) for g in subgroup.strong_gens], self.target_degree)

    def preimage_of_subgroup(self, subgroup: StabChain) -> StabChain:
        '''phi^-1(subgroup), for subgroup inside the image.'''
        gens = list(self.kernel.strong_gens)
        for g in subgroup.strong_gens:
            pre = self.preimage(g)
            if pre is None:
                raise ValueError('subgroup is not contained in the image')
            gens.append(pre)
        return build_chain(gens, self.source_degree,
                           known_order=self.kernel.order() * subgroup.order())

    def check_sampled(self, samples: int = 20, seed: int = 0) -> bool:
        rng = Random(seed)
        for _ in range(samples):
            g, h = self.source.random_element(rng), self.source.random_element(rng)
            if self.image_of(g * h) != self.image_of(g) * self.image_of(h):
                return False
        return True


def identity_hom(chain: StabChain) -> GroupHom:
    return GroupHom.from_action(chain, chain.degree, lambda g: g)


def induced_action(chain: StabChain, blocks: Sequence[Sequence[int]]) -> GroupHom:
    '''Action on the blocks, indexed in order of their minimum element.'''
    ordered = sorted((sorted(b) for b in blocks), key=lambda b: b[0])
    index = {}
    for i, block in enumerate(ordered):
        for p in block:
            index[p] = i
    for g in chain.strong_gens:
        for block in ordered:
            if len({index.get(g.images[p]) for p in block}) != 1:
                raise NotInvariant(f'generator does not map block {block} onto a block')

    def action(g: Permutation) -> Permutation:
        return Permutation._trusted(tuple(index[g.images[block[0]]] for block in ordered))

    return GroupHom.from_action(chain, len(ordered), action)


def restrict_hom(chain: StabChain, points: Sequence[int]) -> GroupHom:
    '''Action on an invariant point set, relabelled by sorted position.'''
    points = sorted(points)
    position = {p: i for i, p in enumerate(points)}
    for g in chain.strong_gens:
        if any(g.images[p] not in position for p in points):
            raise NotInvariant('point set is not invariant under the group')

    def action(g: Permutation) -> Permutation:
        return Permutation._trusted(tuple(position[g.images[p]] for p in points))

    return GroupHom.from_action(chain, len(points), action)


def set_action_hom(chain: StabChain, family: Sequence[Hashable]) -> tuple[GroupHom, dict]:
    '''
    Action on an invariant family of frozensets or tuples of points.
    Returns the hom and the index of each member.
    '''
    family = list(family)
    index = {member: i for i, member in enumerate(family)}

    def move(g: Permutation, member):
        if isinstance(member, frozenset):
            return frozenset(g.images[p] for p in member)
        return tuple(g.images[p] for p in member)

    for g in chain.strong_gens:
        if any(move(g, member) not in index for member in family):
            raise NotInvariant('family is not invariant under the group')

    def action(g: Permutation) -> Permutation:
        return Permutation._trusted(tuple(index[move(g, member)] for member in family))

    return GroupHom.from_action(chain, len(family), action), index


def trivial_hom(chain: StabChain, target_degree: int) -> GroupHom:
    identity = Permutation.identity(target_degree)
    return GroupHom.from_action(chain, target_degree, lambda g: identity)
