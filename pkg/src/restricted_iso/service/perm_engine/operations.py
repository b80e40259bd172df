from typing import Iterable, Iterator, Optional

from ...utils import get_engine_settings
from .errors import DomainMismatch
from .homomorphism import GroupHom
from .orbits import all_orbits as _all_orbits, min_block_system as _min_block_system, orbit as _orbit
from .permutation import Permutation
from .stab_chain import GeneratorList, StabChain


def orbit(g: GeneratorList, point: int) -> list[int]:
    return _orbit(g.gens, point, g.degree)


def all_orbits(g: GeneratorList) -> list[list[int]]:
    return _all_orbits(g.gens, g.degree)


def membership(chain: StabChain, p: Permutation) -> bool:
    if p.degree != chain.degree:
        raise DomainMismatch(f'element of degree {p.degree} against chain of degree {chain.degree}')
    return chain.contains(p)


def point_stabilizer(chain: StabChain, points: Iterable[int]) -> StabChain:
    return chain.pointwise_stabilizer(points)


def min_block_system(g: GeneratorList) -> list[list[int]]:
    return _min_block_system(g.gens, g.degree)


def hom_kernel(h: GroupHom) -> StabChain:
    return h.kernel


def hom_preimage(h: GroupHom, target: Permutation) -> Optional[Permutation]:
    return h.preimage(target)


def enumerate_elements(chain: StabChain, cap: Optional[int] = None) -> Iterator[Permutation]:
    return chain.elements(get_engine_settings().solver.enumeration_cap if cap is None else cap)
