import re
from typing import Iterable
from .permutation import Permutation
from .errors import PointOutOfRange

CYCLE_RE = re.compile(r'\(([^()]*)\)')
VALID_RE = re.compile(r'^\s*(\(\s*[0-9\s,]*\)\s*)*$')


def parse_cycles(text: str, n: int) -> Permutation:
    '''
    Parse 1-indexed cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.
    Commas are accepted as separators.
    '''
    if not VALID_RE.match(text):
        raise ValueError(f'malformed cycle notation: {text!r}')
    cycles = []
    for body in CYCLE_RE.findall(text):
        points = [int(token) - 1 for token in body.replace(',', ' ').split()]
        if not points:
            continue
        for point in points:
            if not 0 <= point < n:
                raise PointOutOfRange(f'point {point + 1} outside 1..{n}')
        cycles.append(points)
    return Permutation.from_cycles(n, cycles)


def format_cycles(perm: Permutation) -> str:
    seen = set()
    out = []
    for start in range(perm.degree):
        if start in seen or perm.images[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        point = perm.images[start]
        while point != start:
            seen.add(point)
            cycle.append(point)
            point = perm.images[point]
        out.append('(%s)' % ' '.join(str(p + 1) for p in cycle))
    if not out:
        return '()'
    return ''.join(out)


def parse_generators(texts: Iterable[str], n: int) -> list[Permutation]:
    return [parse_cycles(text, n) for text in texts]


def format_generators(gens: Iterable[Permutation]) -> list[str]:
    return [format_cycles(g) for g in gens]
