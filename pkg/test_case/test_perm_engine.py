import math
from random import Random

import pytest
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup
from sympy.utilities.iterables import multiset_partitions

from restricted_iso.service.brute_oracle import closure_elements
from restricted_iso.service.perm_engine import (CapExceeded, Coset, GeneratorList, GiantKind, NotTransitive, Permutation,
                                                PointOutOfRange, all_orbits, alternating_chain, block_stabilizer,
                                                build_chain, format_cycles, hom_kernel, hom_preimage,
                                                induced_action, is_block_system, is_giant, membership,
                                                min_block_system, parse_cycles, point_stabilizer, restrict_hom,
                                                right_coset_reps, set_transporter, setwise_stabilizer,
                                                symmetric_chain)


def random_permutation(rng: Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def random_generators(rng: Random, n: int) -> list[Permutation]:
    return [random_permutation(rng, n) for _ in range(rng.randint(1, 2))]


def sympy_order(gens: list[Permutation], n: int) -> int:
    if not gens:
        return 1
    return PermutationGroup([SympyPermutation(list(g.images)) for g in gens]).order()


def test_cycle_notation():
    g = parse_cycles('(1 2 3)(4 5)', 6)
    assert g.images == (1, 2, 0, 4, 3, 5)
    assert format_cycles(g) == '(1 2 3)(4 5)'
    assert format_cycles(Permutation.identity(4)) == '()'
    assert parse_cycles('(1, 4)', 4) == Permutation.from_cycles(4, [[0, 3]])
    with pytest.raises(PointOutOfRange):
        parse_cycles('(1 7)', 6)
    with pytest.raises(ValueError):
        parse_cycles('(1 2', 3)


def test_products_read_left_to_right():
    a = parse_cycles('(1 2)', 3)
    b = parse_cycles('(2 3)', 3)
    assert (a * b).images[0] == b.images[a.images[0]]
    assert (a * ~a).is_identity()
    assert a.conjugate(b) == ~b * a * b


def test_named_groups():
    assert symmetric_chain(5).order() == 120
    assert alternating_chain(5).order() == 60
    assert symmetric_chain(1).order() == 1
    assert is_giant(symmetric_chain(6)) == GiantKind.SYM
    assert is_giant(alternating_chain(6)) == GiantKind.ALT
    c5 = build_chain([Permutation.from_cycles(5, [[0, 1, 2, 3, 4]])], 5)
    assert is_giant(c5) == GiantKind.NEITHER


def test_chain_agrees_with_enumeration():
    rng = Random(7)
    for _ in range(500):
        n = rng.randint(2, 8)
        gens = random_generators(rng, n)
        chain = build_chain(gens, n)
        elements = closure_elements(gens, n)
        assert chain.order() == len(elements) == sympy_order(gens, n)
        for _ in range(5):
            g = random_permutation(rng, n)
            assert membership(chain, g) == (g in elements)
        fixed = rng.sample(range(n), rng.randint(1, n - 1))
        stab = point_stabilizer(chain, fixed)
        assert stab.order() == sum(1 for e in elements if all(e.images[p] == p for p in fixed))
        sym_orbits = PermutationGroup([SympyPermutation(list(g.images)) for g in gens]).orbits()
        assert sorted(sorted(o) for o in sym_orbits) == sorted(all_orbits(GeneratorList(n, gens)))


def test_enumeration_is_complete():
    chain = alternating_chain(5)
    elements = list(chain.elements())
    assert len(elements) == len(set(elements)) == 60
    with pytest.raises(CapExceeded):
        list(symmetric_chain(6).elements(cap=100))


def test_min_block_system():
    c4 = GeneratorList(4, (Permutation.from_cycles(4, [[0, 1, 2, 3]]),))
    assert min_block_system(c4) == [[0, 2], [1, 3]]
    s4 = GeneratorList(4, tuple(symmetric_chain(4).strong_gens))
    assert min_block_system(s4) == [[0], [1], [2], [3]]
    c8 = GeneratorList(8, (Permutation.from_cycles(8, [list(range(8))]),))
    assert min_block_system(c8) == [[0, 2, 4, 6], [1, 3, 5, 7]]
    d6 = GeneratorList(6, (Permutation.from_cycles(6, [list(range(6))]),
                           Permutation.from_cycles(6, [[1, 5], [2, 4]])))
    assert min_block_system(d6) == [[0, 2, 4], [1, 3, 5]]
    for group in (c4, c8, d6):
        assert quotient_is_primitive(group, min_block_system(group))
    with pytest.raises(NotTransitive):
        min_block_system(GeneratorList(4, (Permutation.from_cycles(4, [[0, 1]]),)))


def quotient_is_primitive(group: GeneratorList, blocks: list[list[int]]) -> bool:
    hom = induced_action(build_chain(group.gens, group.degree), blocks)
    quotient = GeneratorList(hom.target_degree, tuple(hom.images))
    return len(min_block_system(quotient)) == hom.target_degree


def invariant_partitions(group: GeneratorList):
    for parts in multiset_partitions(list(range(group.degree))):
        if is_block_system(group.gens, parts):
            yield [sorted(p) for p in parts]


def as_set(parts) -> frozenset:
    return frozenset(frozenset(p) for p in parts)


def coarsens(coarse: list[list[int]], fine: list[list[int]]) -> bool:
    return all(any(set(block) <= set(other) for other in coarse) for block in fine)


def test_min_block_system_has_no_invariant_partition_above_it():
    rng = Random(11)
    checked = 0
    while checked < 150:
        n = rng.randint(2, 7)
        group = GeneratorList(n, tuple(random_generators(rng, n)))
        if len(all_orbits(group)) != 1:
            continue
        checked += 1
        blocks = min_block_system(group)
        assert is_block_system(group.gens, blocks)
        assert len(blocks) > 1
        assert sorted(p for b in blocks for p in b) == list(range(n))
        for parts in invariant_partitions(group):
            if len(parts) == 1 or as_set(parts) == as_set(blocks):
                continue
            assert not coarsens(parts, blocks), (group.gens, blocks, parts)
        if len(blocks) < n:
            assert quotient_is_primitive(group, blocks)


def test_homomorphisms_agree_with_enumeration():
    rng = Random(13)
    for _ in range(200):
        n = rng.randint(3, 8)
        gens = random_generators(rng, n)
        chain = build_chain(gens, n)
        elements = closure_elements(gens, n)
        orbits = all_orbits(GeneratorList(n, tuple(gens)))
        if len(orbits) == 1:
            blocks = min_block_system(GeneratorList(n, tuple(gens)))
            hom = induced_action(chain, blocks)
            in_kernel = [e for e in elements if all(e.images[b[0]] in b for b in blocks)]
        else:
            points = orbits[0]
            hom = restrict_hom(chain, points)
            in_kernel = [e for e in elements if all(e.images[p] == p for p in points)]
        assert hom.kernel.order() == len(in_kernel) == hom_kernel(hom).order()
        assert all(hom.kernel.contains(e) for e in in_kernel)
        image = {hom.image_of(e) for e in elements}
        listed = sorted(elements, key=lambda g: g.images)
        assert hom.image.order() == len(image) == len(elements) // len(in_kernel)
        for _ in range(4):
            e = rng.choice(listed)
            pre = hom_preimage(hom, hom.image_of(e))
            assert pre is not None and pre in elements and hom.image_of(pre) == hom.image_of(e)
            target = random_permutation(rng, hom.target_degree)
            assert (hom.preimage(target) is not None) == (target in image)


def wreath_s2(k: int):
    n = 2 * k
    gens = [Permutation.from_cycles(n, [[0, 1]]),
            Permutation.from_cycles(n, [[0, 2], [1, 3]]),
            Permutation.from_cycles(n, [list(range(0, n, 2)), list(range(1, n, 2))])]
    return build_chain(gens, n)


def test_induced_action_kernel_and_preimage():
    group = wreath_s2(3)
    assert group.order() == 48
    hom = induced_action(group, [[0, 1], [2, 3], [4, 5]])
    assert hom.image.order() == 6
    assert hom.kernel.order() == 8
    target = Permutation.from_cycles(3, [[0, 1, 2]])
    pre = hom.preimage(target)
    assert pre is not None and group.contains(pre)
    assert hom.image_of(pre) == target
    assert hom.preimage_of_subgroup(hom.image).order() == 48


def test_restrict_hom_relabels_by_position():
    g = Permutation.from_cycles(6, [[1, 3], [0, 2]])
    chain = build_chain([g], 6)
    hom = restrict_hom(chain, [1, 3, 5])
    assert hom.image_of(g) == Permutation.from_cycles(3, [[0, 1]])
    assert hom.kernel.order() == 1


def test_setwise_stabilizer_and_transporter():
    s5 = symmetric_chain(5)
    assert setwise_stabilizer(s5, [0, 1]).order() == 12
    c5 = build_chain([Permutation.from_cycles(5, [[0, 1, 2, 3, 4]])], 5)
    g = set_transporter(c5, [0, 1], [1, 2])
    assert g is not None and g.image_set([0, 1]) == frozenset([1, 2])
    assert set_transporter(c5, [0, 1], [0, 2]) is None
    assert set_transporter(c5, [0, 1], [0]) is None


def test_block_stabilizer():
    group = wreath_s2(3)
    assert block_stabilizer(group, [2, 3]).order() == 16


def test_cosets():
    s4 = symmetric_chain(4)
    a4 = alternating_chain(4)
    reps = right_coset_reps(s4, a4)
    assert len(reps) == 2 and reps[0].is_identity()
    t = Permutation.from_cycles(4, [[0, 1]])
    coset = Coset(4, a4, t)
    assert coset.contains(Permutation.from_cycles(4, [[2, 3]]))
    assert not coset.contains(Permutation.identity(4))
    assert coset.shifted(t).contains(Permutation.identity(4))
    assert Coset.empty(4).order() == 0 and not Coset.empty(4)
    assert len(list(coset.elements())) == 12
    assert math.factorial(4) == sum(Coset(4, a4, r).order() for r in reps)


if __name__ == "__main__":
    test_chain_agrees_with_enumeration()
    test_min_block_system()
    test_induced_action_kernel_and_preimage()
