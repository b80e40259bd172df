from random import Random

import pytest

from restricted_iso.service.partition_lattice import (Partition, PartitionSequence, index, induced,
                                                      is_semi_regular, orbit_partition, refines,
                                                      restrict_sequence, validate_almost_d_ary)
from restricted_iso.service.perm_engine import (NotInvariant, NotRefinement, Permutation, StructurallyInvalid,
                                                build_chain, symmetric_chain)
from restricted_iso.service.perm_engine.orbits import orbits_on


def wreath_s2(k: int):
    n = 2 * k
    gens = [Permutation.from_cycles(n, [[0, 1]]),
            Permutation.from_cycles(n, [[0, 2], [1, 3]]),
            Permutation.from_cycles(n, [list(range(0, n, 2)), list(range(1, n, 2))])]
    return build_chain(gens, n)


def cyclic(n: int):
    return build_chain([Permutation.from_cycles(n, [list(range(n))])], n)


def test_partition_basics():
    p = Partition(6, [[5, 3], [0, 1], [2, 4]])
    assert p.blocks == ((0, 1), (2, 4), (3, 5))
    assert p.block_of(4) == (2, 4)
    assert Partition.singletons(3).is_singletons()
    with pytest.raises(StructurallyInvalid):
        Partition(4, [[0, 1], [1, 2]])
    with pytest.raises(StructurallyInvalid):
        Partition(3, [[0, 3]])


def test_refinement_and_index():
    fine = Partition(6, [[0, 1], [2, 3], [4, 5]])
    coarse = Partition(6, [[0, 1, 2, 3], [4, 5]])
    assert refines(fine, coarse)
    assert not refines(coarse, fine)
    assert index(fine, coarse) == 2
    with pytest.raises(NotRefinement):
        index(coarse, fine)
    assert induced(coarse, [1, 2, 5]).blocks == ((1, 2), (5,))


def test_semi_regular():
    assert is_semi_regular(cyclic(6))
    assert not is_semi_regular(symmetric_chain(3))
    assert orbit_partition(build_chain([Permutation.from_cycles(4, [[0, 1]])], 4)).blocks == ((0, 1), (2,), (3,))


def test_wreath_sequence_needs_d_three():
    group = wreath_s2(3)
    chain = [Partition.whole(6), Partition(6, [[0, 1], [2, 3], [4, 5]]), Partition.singletons(6)]
    report = validate_almost_d_ary(PartitionSequence(group, chain, 2))
    assert not report.valid
    assert [v.level for v in report.violations] == [1]
    assert validate_almost_d_ary(PartitionSequence(group, chain, 3)).valid


def test_semi_regular_levels_pass_with_d_one():
    group = cyclic(6)
    chain = [Partition.whole(6), Partition(6, [[0, 2, 4], [1, 3, 5]]), Partition.singletons(6)]
    assert validate_almost_d_ary(PartitionSequence(group, chain, 1)).valid


def test_structural_errors():
    group = cyclic(4)
    with pytest.raises(StructurallyInvalid):
        validate_almost_d_ary(PartitionSequence(group, [Partition.whole(4)], 2))
    not_invariant = [Partition.whole(4), Partition(4, [[0, 1], [2, 3]]), Partition.singletons(4)]
    with pytest.raises(StructurallyInvalid):
        validate_almost_d_ary(PartitionSequence(group, not_invariant, 2))


def test_block_tower():
    seq = PartitionSequence.from_block_tower(wreath_s2(3))
    assert [len(p) for p in seq.chain] == [1, 3, 6]
    assert seq.d == 3
    assert seq.sub_blocks(1, seq.chain[0].blocks[0]) == [(0, 1), (2, 3), (4, 5)]
    intransitive = build_chain([Permutation.from_cycles(5, [[0, 1]]), Permutation.from_cycles(5, [[2, 3, 4]])], 5)
    seq = PartitionSequence.from_block_tower(intransitive)
    assert seq.chain[1].blocks == ((0, 1), (2, 3, 4))
    assert validate_almost_d_ary(seq).valid


def test_restrict_sequence_rejects_non_invariant_points():
    group = wreath_s2(2)
    seq = PartitionSequence.from_block_tower(group)
    with pytest.raises(NotInvariant):
        restrict_sequence(seq, group, [0, 2])


def test_restriction_to_invariant_subsets_stays_valid():
    rng = Random(11)
    checked = 0
    for _ in range(40):
        n = rng.randint(3, 8)
        images = list(range(n))
        rng.shuffle(images)
        group = build_chain([Permutation(images), Permutation.from_cycles(n, [[0, 1]])], n)
        seq = PartitionSequence.from_block_tower(group)
        assert validate_almost_d_ary(seq).valid
        fixed = rng.randrange(n)
        subgroup = group.pointwise_stabilizer([fixed])
        for orb in orbits_on(subgroup.strong_gens, range(n)):
            restricted = restrict_sequence(seq, subgroup, orb)
            assert restricted.degree == len(orb)
            assert validate_almost_d_ary(restricted).valid
            checked += 1
    assert checked > 40


if __name__ == "__main__":
    test_wreath_sequence_needs_d_three()
    test_restriction_to_invariant_subsets_stays_valid()
