from typing import Callable, Hashable, Iterable, TypeVar

T = TypeVar('T', bound=Hashable)


class UnionFind:
    '''Disjoint sets with union by rank; classes are reported sorted by their minimal member.'''

    def __init__(self, items: Iterable[T]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def add(self, x: T):
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0

    def find(self, x: T) -> T:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: T, y: T) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        del self.rank[y]
        return True

    def same(self, x: T, y: T) -> bool:
        return self.find(x) == self.find(y)

    def reps(self) -> set:
        return set(self.rank)

    def __len__(self):
        return len(self.rank)

    def classes(self) -> list[list]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted((sorted(members) for members in groups.values()), key=lambda c: c[0])


def find_orbits(gens, space: Iterable[T], action: Callable) -> list[list]:
    '''Orbits of a general group action, sorted by minimal member.'''
    space = list(space)
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    return uf.classes()
