import math
from fractions import Fraction
from random import Random

import pytest

from restricted_iso.config import CertificateConfig, SolverConfig, ToolkitConfig
from restricted_iso.service.brute_oracle import brute_string_iso, coset_equal
from restricted_iso.service.luks_solver import (LuksSolver, StringInstance, base_case, certificate_recursion,
                                                coset_union, iso_window_shift, orbit_by_orbit,
                                                restrict_instance, standard_luks_reduction, string_iso_main)
from restricted_iso.service.partition_lattice import Partition, PartitionSequence
from restricted_iso.service.perm_engine import (Coset, DomainMismatch, InconsistentAmbient, NotInvariant,
                                                Permutation, alternating_chain, build_chain, induced_action,
                                                symmetric_chain, trivial_chain)
from restricted_iso.utils import get_recursion_tracer


def small_solver(brute_cap: int = 8) -> LuksSolver:
    return LuksSolver(ToolkitConfig(solver=SolverConfig(brute_cap=brute_cap)))


def random_permutation(rng: Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def wreath_s2(k: int):
    n = 2 * k
    gens = [Permutation.from_cycles(n, [[0, 1]]),
            Permutation.from_cycles(n, [[0, 2], [1, 3]]),
            Permutation.from_cycles(n, [list(range(0, n, 2)), list(range(1, n, 2))])]
    return build_chain(gens, n)


def cyclic(n: int):
    return build_chain([Permutation.from_cycles(n, [list(range(n))])], n)


def maps_x_to_y(g: Permutation, x, y) -> bool:
    return all(x[a] == y[g.images[a]] for a in range(len(x)))


def permuted(x, g: Permutation) -> tuple:
    '''The string y with x(a) = y(a^g).'''
    y = [None] * len(x)
    for a, symbol in enumerate(x):
        y[g.images[a]] = symbol
    return tuple(y)


def test_constant_strings_give_the_whole_group():
    group = symmetric_chain(5)
    result = string_iso_main(StringInstance('aaaaa', 'aaaaa', group))
    assert result.order() == 120
    assert coset_equal(result, Coset.of_group(group))


def test_s4_natural_example():
    result = string_iso_main(StringInstance('aabb', 'abab', symmetric_chain(4)))
    assert result and result.order() == 4
    assert maps_x_to_y(result.rep, 'aabb', 'abab')


def test_window_shift():
    group = symmetric_chain(4)
    x, y = 'abca', 'aabc'
    plain = string_iso_main(StringInstance(x, y, group))
    shifted = iso_window_shift(StringInstance(x, y, group, shift=Permutation.identity(4)))
    assert coset_equal(plain, shifted)
    rng = Random(3)
    for _ in range(20):
        n = rng.randint(3, 6)
        sub = build_chain([random_permutation(rng, n)], n)
        g = random_permutation(rng, n)
        x = tuple(rng.choice('ab') for _ in range(n))
        y = tuple(rng.choice('ab') for _ in range(n))
        result = iso_window_shift(StringInstance(x, y, sub, shift=g))
        expected = {h * g for h in sub.elements() if maps_x_to_y(h * g, x, y)}
        assert set(result.elements()) == expected


def test_trivial_group_shift():
    g = Permutation.from_cycles(3, [[0, 1, 2]])
    inst = StringInstance('abc', 'cab', trivial_chain(3), shift=g)
    result = iso_window_shift(inst)
    assert bool(result) == maps_x_to_y(g, 'abc', 'cab')


def test_orbit_by_orbit_example():
    g = Permutation.from_cycles(4, [[0, 1], [2, 3]])
    group = build_chain([g], 4)
    result = orbit_by_orbit(StringInstance('abab', 'baba', group))
    assert result.contains(g)
    same = orbit_by_orbit(StringInstance('abab', 'abab', group))
    assert same.contains(Permutation.identity(4))


def test_standard_luks_reduction():
    group = cyclic(4)
    blocks = Partition(4, [[0, 2], [1, 3]])
    result = standard_luks_reduction(StringInstance('abab', 'abab', group), blocks)
    assert result.order() >= 2
    assert coset_equal(result, brute_string_iso(group, 'abab', 'abab'))
    singletons = standard_luks_reduction(StringInstance('abab', 'baba', group), Partition.singletons(4))
    assert coset_equal(singletons, brute_string_iso(group, 'abab', 'baba'))


def test_base_case():
    one = trivial_chain(1)
    assert base_case(StringInstance('a', 'a', one)).order() == 1
    assert base_case(StringInstance('a', 'b', one)).is_empty()
    a5 = alternating_chain(5)
    rng = Random(5)
    x = tuple(rng.choice('ab') for _ in range(5))
    y = tuple(sorted(x))
    assert coset_equal(base_case(StringInstance(x, y, a5)), brute_string_iso(a5, x, y))


def test_certificate_recursion_on_semi_regular_quotient():
    solver = small_solver(2)
    group = cyclic(6)
    seq = PartitionSequence(group, [Partition.whole(6), Partition(6, [[0, 2, 4], [1, 3, 5]]),
                                    Partition.singletons(6)], 2)
    hom = induced_action(group, seq.chain[1].blocks)
    x, y = 'aabbab', 'babaab'
    direct = certificate_recursion(solver, group, x, y, seq, hom)
    assert coset_equal(direct, solver.standard_luks(group, tuple(x), tuple(y), None, hom, seq))
    assert coset_equal(direct, brute_string_iso(group, x, y))


def test_wreath_product_matches_enumeration():
    solver = small_solver(16)
    group = wreath_s2(5)
    assert group.order() == 3840
    rng = Random(17)
    for _ in range(6):
        x = tuple(rng.choice('ab') for _ in range(10))
        y = permuted(x, group.random_element(rng)) if rng.random() < 0.5 else tuple(rng.choice('ab') for _ in range(10))
        result = string_iso_main(StringInstance(x, y, group), solver=solver)
        assert coset_equal(result, brute_string_iso(group, x, y))


def test_distinct_symbols_give_trivial_automorphisms():
    solver = small_solver(16)
    group = wreath_s2(4)
    x = tuple('abcdefgh')
    g = group.random_element(Random(2))
    result = string_iso_main(StringInstance(x, permuted(x, g), group), solver=solver)
    assert result.order() == 1 and result.rep == g
    assert string_iso_main(StringInstance(x, tuple('hgfedcba'), group), solver=solver).is_empty() == (
        brute_string_iso(group, x, tuple('hgfedcba')).is_empty())


def test_oracle_sweep():
    solver = small_solver(12)
    rng = Random(23)
    for _ in range(80):
        n = rng.randint(2, 7)
        gens = [random_permutation(rng, n) for _ in range(rng.randint(1, 2))]
        group = build_chain(gens, n)
        alphabet = rng.choice(['ab', 'abc'])
        x = tuple(rng.choice(alphabet) for _ in range(n))
        if rng.random() < 0.5:
            y = permuted(x, group.random_element(rng))
        else:
            y = tuple(rng.choice(alphabet) for _ in range(n))
        result = string_iso_main(StringInstance(x, y, group), solver=solver)
        expected = brute_string_iso(group, x, y)
        assert coset_equal(result, expected)
        if result:
            for _ in range(10):
                g = result.subgroup.random_element(rng) * result.rep
                assert maps_x_to_y(g, x, y)
            assert result.subgroup.same_group(brute_string_iso(group, x, x).subgroup)


def test_self_isomorphism_contains_identity():
    solver = small_solver(6)
    rng = Random(29)
    for _ in range(20):
        n = rng.randint(3, 7)
        group = build_chain([random_permutation(rng, n), Permutation.from_cycles(n, [[0, 1]])], n)
        x = tuple(rng.choice('abc') for _ in range(n))
        result = string_iso_main(StringInstance(x, x, group), solver=solver)
        assert result.contains(Permutation.identity(n))


def test_window_restricted_instance():
    group = build_chain([Permutation.from_cycles(5, [[0, 1]]), Permutation.from_cycles(5, [[2, 3, 4]])], 5)
    inst = StringInstance('abcab', 'bacba', group)
    sub, hom = restrict_instance(inst, [2, 3, 4])
    assert sub.x == ('c', 'a', 'b') and sub.y == ('c', 'b', 'a')
    assert sub.group.order() == 3
    with pytest.raises(NotInvariant):
        restrict_instance(inst, [1, 2])
    windowed = string_iso_main(StringInstance('abcab', 'bacba', group, window=[0, 1]))
    assert coset_equal(windowed, brute_string_iso(group, 'abcab', 'bacba', window=[0, 1]))


def test_instance_validation():
    with pytest.raises(DomainMismatch):
        StringInstance('abc', 'ab', symmetric_chain(3))
    inst = StringInstance('abc', 'abc', cyclic(3), window=[0])
    with pytest.raises(NotInvariant):
        inst.check_window()


def test_coset_union():
    a4 = alternating_chain(4)
    t = Permutation.from_cycles(4, [[0, 1]])
    part = Coset(4, a4, Permutation.identity(4))
    assert coset_union([part]) is part
    assert coset_union([Coset.empty(4), Coset.empty(4)]).is_empty()
    same = coset_union([part, Coset(4, a4, Permutation.from_cycles(4, [[0, 1, 2]]))])
    assert same.order() == 12
    grown = coset_union([part, Coset.single(t)])
    assert grown.order() == 24
    with pytest.raises(InconsistentAmbient):
        coset_union([part, Coset.empty(5)])


def test_recursion_accounting():
    solver = small_solver(4)
    tracer = get_recursion_tracer()
    tracer.reset()
    group = build_chain([Permutation.from_cycles(7, [[0, 1, 2]]), Permutation.from_cycles(7, [[3, 4], [5, 6]]),
                         Permutation.from_cycles(7, [[3, 5], [4, 6]])], 7)
    string_iso_main(StringInstance('abcabab', 'bcaabba', group), solver=solver)
    assert tracer.calls >= 1
    for record in tracer.records:
        if record.branch == 'orbits':
            assert sum(record.sizes) == record.parent_size
        elif record.branch == 'luks':
            assert all(size <= record.parent_size for size in record.sizes)


def test_binomial_bound():
    for m in range(2, 65):
        for k in range(1, m // 2 + 1):
            assert math.log2(math.comb(m, k)) * math.log2(m) >= k * math.log2(m) - 1e-9


def certificate_solver() -> LuksSolver:
    return LuksSolver(ToolkitConfig(solver=SolverConfig(brute_cap=8),
                                    certificate=CertificateConfig(t_override=3, kernel_luks_factor=1,
                                                                  allow_small_t=True)))


def test_plain_solver_skips_certificates():
    solver = certificate_solver()
    plain = solver.plain()
    assert solver.certificates and not plain.certificates
    assert plain is solver.plain() and plain.plain() is plain
    assert plain.config is solver.config


def test_giant_quotient_through_certificates():
    solver = certificate_solver()
    tracer = get_recursion_tracer()
    tracer.reset()
    s6 = symmetric_chain(6)
    for x, y in (('aaaaaa', 'aaaaaa'), ('aaaaab', 'aaabaa'), ('aabbbb', 'bbaabb'), ('abcabc', 'aabbcc')):
        result = string_iso_main(StringInstance(x, y, s6), solver=solver)
        assert coset_equal(result, brute_string_iso(s6, x, y))
    group = wreath_s2(6)
    rng = Random(41)
    x = tuple('ab' * 6)
    for y in (x, permuted(x, group.random_element(rng))):
        result = string_iso_main(StringInstance(x, y, group), solver=solver)
        assert coset_equal(result, brute_string_iso(group, x, y))
        assert maps_x_to_y(result.rep, x, y)
    branches = {record.branch for record in tracer.records}
    assert 'giant' in branches
    assert branches & {'symmetry', 'structures'}


def test_recursion_inductive_step():
    rng = Random(43)
    for _ in range(300):
        n = rng.randint(2, 40)
        k = rng.randint(0, 4)
        sizes = []
        while True:
            size = rng.randint(1, n // 2)
            if sum(sizes) + size > 2 ** k * n:
                break
            sizes.append(size)
        assert sum(Fraction(s, n) ** (k + 1) for s in sizes) <= 1


def test_recursion_trace_sizes_satisfy_the_bound():
    solver = small_solver(4)
    tracer = get_recursion_tracer()
    tracer.reset()
    rng = Random(37)
    for _ in range(60):
        n = rng.randint(3, 7)
        group = build_chain([random_permutation(rng, n) for _ in range(rng.randint(1, 2))], n)
        x = tuple(rng.choice('ab') for _ in range(n))
        y = permuted(x, group.random_element(rng)) if rng.random() < 0.5 else tuple(rng.choice('ab') for _ in range(n))
        string_iso_main(StringInstance(x, y, group), solver=solver)
    group = wreath_s2(4)
    for _ in range(4):
        x = tuple(rng.choice('ab') for _ in range(8))
        string_iso_main(StringInstance(x, permuted(x, group.random_element(rng)), group), solver=solver)
    checked = 0
    for record in tracer.records:
        if record.branch not in ('orbits', 'luks'):
            continue
        n, sizes = record.parent_size, record.sizes
        total = sum(sizes)
        assert total <= n
        if all(2 * s <= n for s in sizes):
            k = max(0, math.ceil(math.log2(total / n))) if total else 0
            assert total <= 2 ** k * n
            assert sum(Fraction(s, n) ** (k + 1) for s in sizes) <= 1
        else:
            assert len(sizes) >= 2 or total < n
        checked += 1
    assert checked > 0


if __name__ == "__main__":
    test_s4_natural_example()
    test_oracle_sweep()
    test_giant_quotient_through_certificates()
