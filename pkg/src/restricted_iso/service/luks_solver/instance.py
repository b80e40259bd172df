from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

from ..perm_engine import Coset, DomainMismatch, GroupHom, NotInvariant, Permutation, StabChain, restrict_hom


@dataclass(frozen=True)
class StringInstance:
    '''
    Strings x, y over the domain of group, compared on the invariant window.
    With shift set, the ambient set is the coset group * shift.
    '''
    x: tuple
    y: tuple
    group: StabChain
    window: Optional[frozenset[int]] = None
    shift: Optional[Permutation] = None

    def __post_init__(self):
        object.__setattr__(self, 'x', tuple(self.x))
        object.__setattr__(self, 'y', tuple(self.y))
        if self.window is not None:
            object.__setattr__(self, 'window', frozenset(self.window))
        n = self.group.degree
        if len(self.x) != n or len(self.y) != n:
            raise DomainMismatch(f'strings of length {len(self.x)}/{len(self.y)} for a domain of size {n}')
        if self.shift is not None and self.shift.degree != n:
            raise DomainMismatch('shift lives on a different domain')

    @classmethod
    def from_coset(cls, coset: Coset, x: Sequence[Hashable], y: Sequence[Hashable],
                   window: Optional[Iterable[int]] = None) -> 'StringInstance':
        return cls(tuple(x), tuple(y), coset.subgroup, None if window is None else frozenset(window), coset.rep)

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def alphabet(self) -> list:
        return sorted(set(self.x) | set(self.y), key=repr)

    @property
    def points(self) -> frozenset[int]:
        return frozenset(range(self.degree)) if self.window is None else self.window

    def check_window(self):
        inside = self.points
        for g in self.group.strong_gens:
            if any(g.images[p] not in inside for p in inside):
                raise NotInvariant('window is not invariant under the group')


def restrict_instance(inst: StringInstance, points: Iterable[int],
                      hom: Optional[GroupHom] = None) -> tuple[StringInstance, GroupHom]:
    '''
    The instance seen on an invariant point set: the group acting on the points
    (relabelled by sorted position) and both strings cut down to them.
    '''
    points = sorted(set(points))
    hom = restrict_hom(inst.group, points) if hom is None else hom
    if hom.target_degree != len(points):
        raise DomainMismatch(f'restriction acts on {hom.target_degree} points, expected {len(points)}')
    sub = StringInstance(tuple(inst.x[p] for p in points), tuple(inst.y[p] for p in points), hom.image)
    return sub, hom
