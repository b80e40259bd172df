from typing import Iterator, Optional

from .errors import DomainMismatch
from .permutation import Permutation
from .stab_chain import StabChain, build_chain, trivial_chain


class Coset:
    '''
    Right coset subgroup * rep (apply an element of subgroup, then rep), or the empty set.
    '''
    __slots__ = ('degree', 'subgroup', 'rep')

    def __init__(self, degree: int, subgroup: Optional[StabChain] = None, rep: Optional[Permutation] = None):
        if (subgroup is None) != (rep is None):
            raise ValueError('subgroup and rep must be both given or both absent')
        if subgroup is not None:
            if subgroup.degree != degree or rep.degree != degree:
                raise DomainMismatch(f'coset parts do not live on a domain of size {degree}')
        self.degree = degree
        self.subgroup = subgroup
        self.rep = rep

    @classmethod
    def empty(cls, degree: int) -> 'Coset':
        return cls(degree)

    @classmethod
    def of_group(cls, chain: StabChain) -> 'Coset':
        return cls(chain.degree, chain, Permutation.identity(chain.degree))

    @classmethod
    def single(cls, g: Permutation) -> 'Coset':
        return cls(g.degree, trivial_chain(g.degree), g)

    @property
    def empty_flag(self) -> bool:
        return self.subgroup is None

    def is_empty(self) -> bool:
        return self.subgroup is None

    def __bool__(self) -> bool:
        return self.subgroup is not None

    def order(self) -> int:
        return 0 if self.subgroup is None else self.subgroup.order()

    def contains(self, g: Permutation) -> bool:
        if self.subgroup is None:
            return False
        return self.subgroup.contains(g * ~self.rep)

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def elements(self, cap: Optional[int] = None) -> Iterator[Permutation]:
        if self.subgroup is None:
            return
        for h in self.subgroup.elements(cap):
            yield h * self.rep

    def shifted(self, g: Permutation) -> 'Coset':
        '''The set {c * g : c in self}.'''
        if self.subgroup is None:
            return self
        return Coset(self.degree, self.subgroup, self.rep * g)

    def conjugate_subgroup_shift(self, g: Permutation) -> 'Coset':
        '''The set {g * c : c in self}, written as a right coset.'''
        if self.subgroup is None:
            return self
        gens = [h.conjugate(~g) for h in self.subgroup.strong_gens]
        return Coset(self.degree, build_chain(gens, self.degree, known_order=self.subgroup.order()), g * self.rep)

    def __repr__(self) -> str:
        if self.subgroup is None:
            return f'Coset(empty, n={self.degree})'
        return f'Coset(order={self.order()}, rep={self.rep!r})'


def right_coset_reps(group: StabChain, subgroup: StabChain) -> list[Permutation]:
    '''One element of each right coset subgroup * g of group, identity first.'''
    reps = [Permutation.identity(group.degree)]
    seen = set(reps)
    for r in reps:
        for s in group.strong_gens:
            c = r * s
            if subgroup.is_trivial():
                if c in seen:
                    continue
                seen.add(c)
            elif any(subgroup.contains(c * ~rep) for rep in reps):
                continue
            reps.append(c)
    return reps
