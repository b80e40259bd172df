import math
from random import Random

import pytest

from restricted_iso.config import ReductionConfig
from restricted_iso.service.brute_oracle import brute_string_iso, brute_string_iso_elements
from restricted_iso.service.group_reduction import (BlockNode, JohnsonRecognition, PrimitiveKind,
                                                    build_unfold_graph, classify_primitive,
                                                    compute_giant_representation, giant_threshold,
                                                    johnson_action, johnson_induced_permutation,
                                                    johnson_recognize, johnson_subsets, maximal_branches,
                                                    reduce_instance, reduce_step_one, reduce_step_two, size_threshold,
                                                    socle, unfold_graph_to_dot)
from restricted_iso.service.partition_lattice import (Partition, PartitionSequence, is_semi_regular,
                                                      validate_almost_d_ary)
from restricted_iso.service.perm_engine import (ClassificationFailed, GiantKind, NotInduced, Permutation,
                                                alternating_chain, block_stabilizer, build_chain, direct_sum,
                                                is_giant, set_action_hom, symmetric_chain)


def pair_action(chain, m: int = 5):
    '''The group acting on the 2-subsets of [m] in lexicographic order.'''
    gens = johnson_action(m, 2, chain.strong_gens)
    return build_chain(gens, math.comb(m, 2))


def figure_sequence() -> PartitionSequence:
    gens = [Permutation.from_cycles(9, [[0, 1, 2]]), Permutation.from_cycles(9, [[0, 1]]),
            Permutation.from_cycles(9, [[0, 3, 6], [1, 4, 7], [2, 5, 8]]),
            Permutation.from_cycles(9, [[0, 3], [1, 4], [2, 5]])]
    chain = [Partition.whole(9), Partition(9, [[0, 1, 2], [3, 4, 5], [6, 7, 8]]), Partition.singletons(9)]
    return PartitionSequence(build_chain(gens, 9), chain, 3)


def figure_unfold_graph():
    seq = figure_sequence()
    rec = JohnsonRecognition(3, 2, tuple(johnson_subsets(3, 2)))
    recognitions = {1: {tuple(range(9)): rec},
                    2: {block: rec for block in seq.chain[1].blocks}}
    return build_unfold_graph(seq, recognitions)


def test_socle():
    assert socle(symmetric_chain(4)).order() == 4
    assert socle(alternating_chain(5)).order() == 60
    gens = [direct_sum(g, Permutation.identity(5)) for g in alternating_chain(5).strong_gens]
    gens += [direct_sum(Permutation.identity(5), g) for g in alternating_chain(5).strong_gens]
    assert socle(build_chain(gens, 10)).order() == 3600


def test_johnson_recognition_of_pairs():
    chain = pair_action(alternating_chain(5))
    assert chain.order() == 60
    rec = johnson_recognize(chain, 5)
    assert (rec.m, rec.t) == (5, 2)
    assert rec.is_bijection() and rec.verify(chain)
    for g in chain.strong_gens:
        sigma = rec.induced(g)
        assert rec.johnson_permutation(sigma) == g
    natural = johnson_recognize(symmetric_chain(4))
    assert (natural.m, natural.t) == (4, 1)


def test_induced_permutation():
    sigma = Permutation.from_cycles(7, [[0, 1, 2], [3, 4]])
    gamma = johnson_action(7, 3, [sigma])[0]
    assert johnson_induced_permutation(gamma, 7, 3) == sigma
    complement = Permutation([5, 4, 3, 2, 1, 0])
    with pytest.raises(NotInduced):
        johnson_induced_permutation(complement, 4, 2)


def test_small_groups_classify_as_small():
    chain = pair_action(alternating_chain(5))
    report = classify_primitive(chain, 5)
    assert report.kind == PrimitiveKind.SMALL
    assert size_threshold(10, 5) >= 60


def test_johnson_tower_and_guard():
    chain = pair_action(symmetric_chain(6), 6)
    assert chain.order() == 720
    low = ReductionConfig(c1=0, c2=1, johnson_guard=False)
    report = classify_primitive(chain, 6, low)
    assert report.kind == PrimitiveKind.JOHNSON_TOWER
    assert (report.m, report.t) == (6, 2)
    assert report.socle.order() == 360
    assert report.to_dict()['levels'] == [{'m': 6, 't': 2}]
    guarded = ReductionConfig(c1=0, c2=1, johnson_guard=True)
    assert classify_primitive(chain, 6, guarded).kind == PrimitiveKind.SMALL


def test_non_johnson_socle_fails():
    frobenius = build_chain([Permutation.from_cycles(7, [list(range(7))]),
                             Permutation.from_cycles(7, [[1, 2, 4], [3, 6, 5]])], 7)
    assert frobenius.order() == 21
    with pytest.raises(ClassificationFailed):
        classify_primitive(frobenius, 7, ReductionConfig(c1=0, c2=1))


def test_giant_representation():
    assert giant_threshold(10) == math.ceil(10 ** (1 + math.log2(10)))
    assert compute_giant_representation(pair_action(symmetric_chain(5)), 10) is None
    a10 = alternating_chain(10)
    found = compute_giant_representation(a10, 10)
    assert found is not None
    assert found.subgroup.same_group(a10)
    assert found.blocks.is_singletons()
    assert found.k == 10
    g = a10.random_element(Random(1))
    assert found.rep.hom.image_of(g) == g


def test_figure_unfold_graph():
    unfold = figure_unfold_graph()
    assert unfold.graph.number_of_nodes() == 41
    assert unfold.graph.number_of_edges() == 52
    assert [v for v, deg in unfold.graph.in_degree() if deg == 0] == [unfold.root]
    branches = maximal_branches(unfold)
    assert len(branches) == 36
    assert len(set(branches)) == 36
    for branch in branches:
        assert isinstance(branch[-1], BlockNode) and len(branch[-1].block) == 1
    assert sorted({branch[-1].block[0] for branch in branches}) == list(range(9))
    assert maximal_branches(figure_unfold_graph()) == branches


def test_unfold_graph_dot():
    dot = unfold_graph_to_dot(figure_unfold_graph(), 'figure')
    assert dot.startswith('digraph figure {')
    assert dot.count('->') == 52
    assert 'label="{1,2,3,4,5,6,7,8,9}", shape=box' in dot
    assert 'label="(1,{1,2,3,4,5,6,7,8,9},{1,2})", shape=ellipse' in dot


def test_pairs_unfold_into_twenty_branches():
    chain = pair_action(alternating_chain(5))
    seq = PartitionSequence(chain, [Partition.whole(10), Partition.singletons(10)], 10)
    x = tuple('aabbaabbab')
    augmented = reduce_step_two(chain, x, x, seq, 5, levels=[1])
    assert augmented.degree == 20
    assert augmented.group_star.order() == 60
    assert augmented.seq_star.d == 5
    assert validate_almost_d_ary(augmented.seq_star).valid
    assert augmented.johnson_levels == {1: (5, 2)}
    assert augmented.x_star == tuple(x[a] for a in augmented.origin)


def test_reduce_instance_preserves_isomorphism():
    gens = [Permutation.from_cycles(6, [[0, 1]]), Permutation.from_cycles(6, [[0, 2], [1, 3]]),
            Permutation.from_cycles(6, [[0, 2, 4], [1, 3, 5]])]
    group = build_chain(gens, 6)
    rng = Random(13)
    for _ in range(4):
        x = tuple(rng.choice('ab') for _ in range(6))
        g = group.random_element(rng)
        y = [None] * 6
        for a in range(6):
            y[g.images[a]] = x[a]
        augmented = reduce_instance(group, x, tuple(y), 3)
        assert augmented.group_star.order() == group.order()
        assert validate_almost_d_ary(augmented.seq_star).valid
        assert augmented.degree <= 6 ** ((math.log2(3) + 10 + 1) * math.log2(3))
        g_star = augmented.star(g)
        assert all(augmented.x_star[p] == augmented.y_star[g_star.images[p]] for p in range(augmented.degree))
        for a, b in zip(gens, gens[1:]):
            assert augmented.star(a * b) == augmented.star(a) * augmented.star(b)
        other = tuple(rng.choice('ab') for _ in range(6))
        plain = reduce_instance(group, x, other, 3)
        assert (brute_string_iso(plain.group_star, plain.x_star, plain.y_star).is_empty()
                == brute_string_iso(group, x, other).is_empty())


def cycle(n: int, shift: int = 1) -> Permutation:
    return Permutation([(i + shift) % n for i in range(n)])


def wreath_gens(m: int, k: int) -> list[Permutation]:
    '''S_m wr S_k on blocks {m*i, ..., m*i + m - 1}.'''
    n = m * k
    gens = [Permutation.from_cycles(n, [[0, 1]])]
    if m >= 3:
        gens.append(Permutation.from_cycles(n, [list(range(m))]))
    gens.append(Permutation.from_cycles(n, [[j, m + j] for j in range(m)]))
    if k >= 3:
        gens.append(Permutation.from_cycles(n, [list(range(j, n, m)) for j in range(m)]))
    return gens


def small_transitive_groups():
    groups = [build_chain([cycle(n)], n) for n in range(3, 9)]
    groups += [build_chain([cycle(n), Permutation([(-i) % n for i in range(n)])], n) for n in range(4, 9)]
    groups += [symmetric_chain(3), symmetric_chain(4), symmetric_chain(5), alternating_chain(4), alternating_chain(5)]
    groups.append(build_chain([cycle(5), Permutation([(2 * i) % 5 for i in range(5)])], 5))
    groups += [build_chain(wreath_gens(m, k), m * k) for m, k in ((2, 3), (3, 2), (2, 4))]
    groups.append(build_chain([Permutation.from_cycles(4, [[0, 1], [2, 3]]),
                               Permutation.from_cycles(4, [[0, 2], [1, 3]])], 4))
    return groups


def string_pairs(rng: Random, group, count: int = 5):
    n = group.degree
    for i in range(count):
        x = tuple(rng.choice('ab') for _ in range(n))
        if i % 2 == 0:
            g = group.random_element(rng)
            y = [None] * n
            for a in range(n):
                y[g.images[a]] = x[a]
            yield x, tuple(y)
        else:
            yield x, tuple(rng.choice('ab') for _ in range(n))


def giant_levels(group, seq: PartitionSequence) -> list[int]:
    '''Levels whose quotient on the sub-blocks of the first parent block is a non-regular giant.'''
    levels = []
    for level in range(1, len(seq.chain)):
        parents = seq.chain[level - 1].blocks
        block = parents[0]
        stab = group if len(parents) == 1 else block_stabilizer(group, block)
        hom, _ = set_action_hom(stab, [frozenset(b) for b in seq.sub_blocks(level, block)])
        if is_giant(hom.image) != GiantKind.NEITHER and not is_semi_regular(hom.image):
            levels.append(level)
    return levels


def test_first_change_of_action_preserves_isomorphism():
    rng = Random(47)
    checked = 0
    for group in small_transitive_groups():
        for x, y in string_pairs(rng, group):
            isos = brute_string_iso_elements(group, x, y)
            augmented = reduce_step_one(group, x, y)
            assert augmented.group_star.order() == group.order()
            assert augmented.x_star == tuple(x[a] for a in augmented.origin)
            found = brute_string_iso_elements(augmented.group_star, augmented.x_star, augmented.y_star)
            assert bool(found) == bool(isos)
            if isos:
                g_star = augmented.star(min(isos, key=lambda g: g.images))
                assert all(augmented.x_star[p] == augmented.y_star[g_star.images[p]]
                           for p in range(augmented.degree))
            checked += 1
    assert checked >= 100


def test_second_change_of_action_preserves_isomorphism():
    rng = Random(53)
    checked = 0
    for group in small_transitive_groups():
        seq = PartitionSequence.from_block_tower(group)
        levels = giant_levels(group, seq)
        for x, y in string_pairs(rng, group):
            isos = brute_string_iso_elements(group, x, y)
            augmented = reduce_step_two(group, x, y, seq, levels=levels)
            assert augmented.group_star.order() == group.order()
            assert validate_almost_d_ary(augmented.seq_star).valid
            found = brute_string_iso_elements(augmented.group_star, augmented.x_star, augmented.y_star)
            assert bool(found) == bool(isos)
            checked += 1
    assert checked >= 100


if __name__ == "__main__":
    test_figure_unfold_graph()
    test_reduce_instance_preserves_isomorphism()
    test_first_change_of_action_preserves_isomorphism()
