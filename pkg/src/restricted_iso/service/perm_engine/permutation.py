from typing import Iterable, Sequence
from .errors import DomainMismatch, PointOutOfRange


class Permutation:
    '''
    A bijection of {0,...,n-1}, stored as the tuple of images.
    Products read left to right: (a * b)(x) = b(a(x)).
    '''
    __slots__ = ('images', '_hash')

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f'not a permutation: {images}')
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> 'Permutation':
        perm = cls.__new__(cls)
        perm.images = images
        perm._hash = hash(images)
        return perm

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls._trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < n:
                    raise PointOutOfRange(f'point {point} outside domain of size {n}')
                if point in seen:
                    raise ValueError(f'point {point} repeated in cycles')
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> 'Permutation':
        '''Points missing from mapping are fixed.'''
        images = list(range(n))
        for src, dst in mapping.items():
            images[src] = dst
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if len(other.images) != len(self.images):
            raise DomainMismatch(f'cannot compose degree {self.degree} with degree {other.degree}')
        second = other.images
        return Permutation._trusted(tuple([second[i] for i in self.images]))

    def __invert__(self) -> 'Permutation':
        inverse = [0] * len(self.images)
        for i, image in enumerate(self.images):
            inverse[image] = i
        return Permutation._trusted(tuple(inverse))

    def __pow__(self, exponent: int) -> 'Permutation':
        base = self if exponent >= 0 else ~self
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: 'Permutation') -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        from .cycle_notation import format_cycles
        return f'Permutation({format_cycles(self)!r}, n={self.degree})'

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, image in enumerate(self.images) if i != image]

    def conjugate(self, by: 'Permutation') -> 'Permutation':
        '''by^-1 * self * by, i.e. self relabelled through by.'''
        return ~by * self * by

    def sign(self) -> int:
        seen = [False] * self.degree
        transpositions = 0
        for start in range(self.degree):
            if seen[start]:
                continue
            length = 0
            point = start
            while not seen[point]:
                seen[point] = True
                point = self.images[point]
                length += 1
            transpositions += length - 1
        return -1 if transpositions % 2 else 1

    def image_set(self, points: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[p] for p in points)

    def restricted(self, points: Sequence[int]) -> 'Permutation':
        '''Action on the invariant set points, relabelled by position in points.'''
        position = {p: i for i, p in enumerate(points)}
        try:
            return Permutation([position[self.images[p]] for p in points])
        except KeyError as e:
            raise ValueError(f'point set is not invariant: {e}') from e

    def extended(self, n: int) -> 'Permutation':
        '''Same permutation on a larger domain, fixing the new points.'''
        return Permutation._trusted(self.images + tuple(range(self.degree, n)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    '''Apply a, then b.'''
    return a * b


def invert(a: Permutation) -> Permutation:
    return ~a


def apply(a: Permutation, point: int) -> int:
    if not 0 <= point < a.degree:
        raise PointOutOfRange(f'point {point} outside domain of size {a.degree}')
    return a.images[point]


def direct_sum(a: Permutation, b: Permutation) -> Permutation:
    '''a on the first points, b shifted past them.'''
    shift = a.degree
    return Permutation._trusted(a.images + tuple(shift + image for image in b.images))
