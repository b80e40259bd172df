import logging
from typing import Iterable, Optional

from ...utils import get_engine_settings
from .errors import CapExceeded
from .orbits import all_orbits
from .permutation import Permutation
from .stab_chain import StabChain, build_chain

logger = logging.getLogger(__name__)


def _reduced_targets(chain: StabChain, first: set[int], second: set[int]) -> Optional[tuple[list[int], set[int]]]:
    '''
    Per orbit, keep the smaller side of the set; orbits met fully or not at all impose nothing.
    None when some orbit meets the two sets in different sizes.
    '''
    source, target = [], set()
    for orb in all_orbits(chain.strong_gens, chain.degree):
        inside = set(orb)
        a, b = first & inside, second & inside
        if len(a) != len(b):
            return None
        if not a or len(a) == len(inside):
            continue
        if 2 * len(a) > len(inside):
            a, b = inside - a, inside - b
        source.extend(a)
        target |= b
    return sorted(source), target


def _search(chain: StabChain, source: list[int], target: set[int]):
    '''Yields representatives of the G_(source)-cosets mapping source onto target.'''
    based = chain.with_base_prefix(source)
    depth = len(source)

    def walk(i: int, acc: Permutation):
        if i == depth:
            yield acc
            return
        level = based.levels[i]
        for beta in sorted(level.transversal, key=lambda p: acc.images[p]):
            if acc.images[beta] in target:
                yield from walk(i + 1, level.transversal[beta] * acc)

    return based, walk(0, Permutation.identity(chain.degree))


def setwise_stabilizer(chain: StabChain, points: Iterable[int], d_cap: Optional[int] = None) -> StabChain:
    '''{g : T^g = T} by backtracking over a base that starts with T.'''
    points = set(points)
    source, target = _reduced_targets(chain, points, points)
    if not source:
        return chain
    d_cap = get_engine_settings().solver.d_cap if d_cap is None else d_cap
    if len(source) > d_cap:
        raise CapExceeded(f'setwise stabilizer of {len(source)} points exceeds d-cap {d_cap}')
    based, reps = _search(chain, source, target)
    fixer = based.stabilizer_chain(len(source))
    result = build_chain(fixer.strong_gens, chain.degree, known_order=fixer.order())
    for rep in reps:
        if rep.is_identity() or result.contains(rep):
            continue
        result = build_chain(list(result.strong_gens) + [rep], chain.degree)
    logger.debug('setwise stabilizer of %d points: order %d', len(source), result.order())
    return result


def set_transporter(chain: StabChain, first: Iterable[int], second: Iterable[int],
                    d_cap: Optional[int] = None) -> Optional[Permutation]:
    '''Some g with first^g = second, or None.'''
    first, second = set(first), set(second)
    if len(first) != len(second):
        return None
    reduced = _reduced_targets(chain, first, second)
    if reduced is None:
        return None
    source, target = reduced
    if not source:
        return Permutation.identity(chain.degree)
    d_cap = get_engine_settings().solver.d_cap if d_cap is None else d_cap
    if len(source) > d_cap:
        raise CapExceeded(f'set transporter of {len(source)} points exceeds d-cap {d_cap}')
    _, reps = _search(chain, source, target)
    return next(iter(reps), None)


def block_stabilizer(chain: StabChain, block: Iterable[int]) -> StabChain:
    '''Stabilizer of a block of imprimitivity: G_alpha extended by transversal elements into the block.'''
    block = sorted(block)
    alpha = block[0]
    based = chain.with_base_prefix([alpha])
    level = based.levels[0]
    gens = list(based.stabilizer_chain(1).strong_gens)
    inside = [beta for beta in block if beta in level.transversal and beta != alpha]
    gens.extend(level.transversal[beta] for beta in inside)
    order = based.stabilizer_chain(1).order() * (len(inside) + 1)
    return build_chain(gens, chain.degree, known_order=order)
