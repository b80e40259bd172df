from itertools import combinations
from typing import Optional, Sequence

from ...utils import find_orbits
from ..perm_engine import Permutation, StabChain
from ..perm_engine.orbits import is_transitive, orbits_on


def _three_cycle(n: int, a: int, b: int, c: int) -> Permutation:
    return Permutation.from_cycles(n, [[a, b, c]])


def largest_alternating_support(chain: StabChain) -> list[int]:
    '''
    Largest D with Alt(D) <= G. Alt(D) is generated by the 3-cycles (a b c) through the two
    smallest points a, b of D, so each pair (a, b) inside one orbit determines its best D.
    '''
    n = chain.degree
    best = list(range(min(n, 2)))
    for orb in orbits_on(chain.strong_gens, range(n)):
        if len(orb) <= len(best):
            continue
        for a, b in combinations(orb, 2):
            if len(orb) - orb.index(a) <= len(best):
                break
            extra = [c for c in orb if c > b and chain.contains(_three_cycle(n, a, b, c))]
            candidate = [a, b] + extra
            if extra and len(candidate) > len(best):
                best = candidate
    return best


def symmetry_defect(chain: StabChain) -> int:
    '''n - max{|D| : Alt(D) <= G}; at most n - 2.'''
    return chain.degree - len(largest_alternating_support(chain))


def relative_symmetry_defect(chain: StabChain) -> float:
    return symmetry_defect(chain) / chain.degree if chain.degree else 0.0


def orbital_configuration(chain: StabChain, points: Optional[Sequence[int]] = None) -> list[list[tuple[int, int]]]:
    '''
    Orbits of the group on ordered pairs of the invariant set points.
    Diagonal orbitals come first; every class is sorted.
    '''
    points = sorted(range(chain.degree) if points is None else points)
    pairs = [(a, b) for a in points for b in points]
    classes = find_orbits(chain.strong_gens, pairs, lambda g, pair: (g.images[pair[0]], g.images[pair[1]]))
    diagonal = [c for c in classes if c[0][0] == c[0][1]]
    rest = [c for c in classes if c[0][0] != c[0][1]]
    return diagonal + rest


def transitivity_degree(chain: StabChain, points: Optional[Sequence[int]] = None, cap: Optional[int] = None) -> int:
    '''Largest s such that the action on points is s-transitive (stopping at cap).'''
    remaining = sorted(range(chain.degree) if points is None else points)
    current = chain
    s = 0
    while remaining and (cap is None or s < cap):
        if not is_transitive(current.strong_gens, chain.degree, remaining):
            break
        s += 1
        point = remaining.pop(0)
        current = current.pointwise_stabilizer([point])
    return s
