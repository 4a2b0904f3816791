import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import pair_reference, subset_sums
from cardsum.arith import ACC_MAX
from cardsum.combinatorics import binomial, unrank_indices
from cardsum.errors import CapacityError, InvalidArgument
from cardsum.instance import ProblemInstance
from cardsum.mitm import build_sum_table, find_pairs, solve, solve_even, solve_odd, tau
from cardsum.oracle import check_solution, enumerate_solutions
from cardsum.report import INFEASIBLE, Counters
from conftest import EXAMPLE3_SOLUTION, EXAMPLE3_VALUES


def test_tau_examples():
    assert tau(137, 42) == 3990
    assert tau(137, 95) == 3990
    assert tau(12345, 0) == 0
    with pytest.raises(CapacityError):
        tau(1 << 126, -(1 << 63))


@given(st.integers(-(10**12), 10**12), st.integers(-(10**12), 10**12), st.integers(-(10**12), 10**12))
def test_tau_collision_algebra(s, z1, z2):
    assert (tau(s, z1) == tau(s, z2)) == (z1 == z2 or z1 + z2 == s)


def test_tau_collision_algebra_on_constructed_roots():
    rng = random.Random(1)
    for _ in range(1000):
        s, z = rng.randint(-1000, 1000), rng.randint(-1000, 1000)
        assert tau(s, z) == tau(s, s - z)


def test_example3_table():
    table = build_sum_table(EXAMPLE3_VALUES, None, 3)
    assert len(table) == 560
    by_rank = dict(zip(table.ranks, table.z))
    assert by_rank[0] == 17 + 2 + 3
    assert by_rank[1] == 42
    assert by_rank[559] == 95
    assert table.decode(559) == (13, 14, 15)
    assert table.z == sorted(table.z)


def test_table_invariants_sampled():
    rng = random.Random(3)
    values = [rng.randint(-100, 100) for _ in range(12)]
    universe = (0, 2, 3, 5, 7, 8, 10, 11)
    table = build_sum_table(values, universe, 3)
    assert len(table) == binomial(len(universe), 3)
    assert sorted(table.ranks) == list(range(len(table)))
    assert list(zip(table.z, table.ranks)) == sorted(zip(table.z, table.ranks))
    for pos in rng.sample(range(len(table)), 20):
        decoded = tuple(universe[p] for p in unrank_indices(len(universe), 3, table.ranks[pos]))
        assert decoded == table.combos[pos]
        assert table.z[pos] == sum(values[i] for i in decoded)
        assert table.masks[pos] == sum(1 << i for i in decoded)


def test_table_k0_and_errors():
    table = build_sum_table([5, 6], None, 0)
    assert table.entries == [(0, 0)]
    with pytest.raises(InvalidArgument):
        build_sum_table([5, 6], None, 3)
    with pytest.raises(CapacityError):
        build_sum_table(EXAMPLE3_VALUES, None, 3, cap=559)
    with pytest.raises(InvalidArgument):
        build_sum_table([1, 2, 3], (2, 0), 1)


def test_table_independent_of_threads():
    base = build_sum_table(EXAMPLE3_VALUES, None, 4)
    for threads in (2, 8):
        other = build_sum_table(EXAMPLE3_VALUES, None, 4, threads=threads)
        assert (other.z, other.ranks, other.combos) == (base.z, base.ranks, base.combos)


def test_find_pairs_example3():
    table = build_sum_table(EXAMPLE3_VALUES, None, 3)
    pairs = find_pairs(table, 137)
    hit = [p for p in pairs if (p.rank_a, p.rank_b) == (1, 559)]
    assert hit and (hit[0].z_a, hit[0].z_b) == (42, 95)
    assert all(p.rank_a < p.rank_b and p.z_a + p.z_b == 137 for p in pairs)
    assert all(not set(table.decode(p.rank_a)) & set(table.decode(p.rank_b)) for p in pairs)


def _decoded_pairs(table, pairs):
    return {(table.decode(p.rank_a), table.decode(p.rank_b)) for p in pairs}


def test_find_pairs_small_cases():
    table = build_sum_table([1, 2, 3, 4], None, 1)
    assert _decoded_pairs(table, find_pairs(table, 5)) == {((0,), (3,)), ((1,), (2,))}
    table = build_sum_table([3, 3], None, 1)
    assert _decoded_pairs(table, find_pairs(table, 6)) == {((0,), (1,))}


@given(st.lists(st.integers(-6, 6), min_size=0, max_size=8), st.integers(0, 3), st.integers(-20, 20))
@settings(max_examples=300)
def test_find_pairs_matches_brute_force(values, k, s):
    if k > len(values):
        return
    table = build_sum_table(values, None, k)
    pairs = find_pairs(table, s)
    decoded = _decoded_pairs(table, pairs)
    assert len(decoded) == len(pairs)
    assert decoded == pair_reference(values, k, s)


def test_find_pairs_limit_and_probes():
    table = build_sum_table(EXAMPLE3_VALUES, None, 3)
    counters = Counters()
    assert len(find_pairs(table, 137, 3, counters=counters)) == 3
    assert counters.probes > 0


def test_solve_even_example3(example3):
    counters = Counters()
    sols = solve_even(example3, counters=counters)
    assert EXAMPLE3_SOLUTION in sols
    assert sols == enumerate_solutions(example3)
    assert counters.entries_built == 560


def test_solve_even_out_of_range_builds_nothing(example3):
    counters = Counters()
    assert solve_even(example3.with_target(500), counters=counters) == []
    assert counters.entries_built == 0


def test_solve_odd_table_sizes():
    values = (4, 8, 15, 16, 23, 42, 7)
    inst = ProblemInstance(values, 4 + 8 + 15 + 16 + 7, 5)
    counters = Counters()
    sols = solve_odd(inst, counters=counters)
    assert sols == enumerate_solutions(inst)
    assert counters.table_sizes == [15] * 7
    assert counters.exclusions_tried == 7


def test_solve_odd_m1():
    inst = ProblemInstance((5, 3, 5, 9), 5, 1)
    assert solve_odd(inst) == [(0,), (2,)]


def test_solve_odd_first_success():
    inst = ProblemInstance((1, 2, 3, 4, 5, 6, 7), 12, 3)
    counters = Counters()
    sols = solve_odd(inst, 1, counters=counters)
    assert len(sols) == 1
    check_solution(inst, sols[0])
    assert counters.exclusions_tried == 1


def test_parity_guards(example3):
    with pytest.raises(InvalidArgument):
        solve_odd(example3)
    with pytest.raises(InvalidArgument):
        solve_even(ProblemInstance((1, 2, 3), 3, 1))


instances = st.lists(st.integers(-12, 12), min_size=0, max_size=10).flatmap(
    lambda vs: st.tuples(st.just(tuple(vs)), st.integers(0, len(vs)), st.integers(-40, 40))
)


@given(instances, st.booleans())
@settings(max_examples=300, deadline=None)
def test_solve_matches_brute_force(case, use_complement):
    values, m, s = case
    inst = ProblemInstance(values, s, m)
    report = solve(inst, use_complement=use_complement)
    assert report.solutions == subset_sums(values, m, s)
    for sol in report.solutions:
        check_solution(inst, sol)


def test_solve_report_example3(example3):
    report = solve(example3)
    assert report.status == "found"
    assert report.entries_built == 560
    assert EXAMPLE3_SOLUTION in report.solutions
    assert any((c.z_a, c.z_b) == (42, 95) for c in report.collisions)


def test_solve_m0():
    report = solve(ProblemInstance((3, 4), 0, 0))
    assert report.solutions == [()]
    assert report.entries_built == 1
    assert solve(ProblemInstance((3, -3), 0, 0)).solutions == [()]
    assert solve(ProblemInstance((3, 4), 1, 0)).status == INFEASIBLE


def test_solve_uses_complement_for_large_m():
    values = (3, 9, 4, 1, 7, 7, 2, 8)
    inst = ProblemInstance(values, sum(values) - 7, 7)
    report = solve(inst)
    assert report.complemented
    assert report.exclusions_tried == 8  # solved as m'=1
    assert report.solutions == enumerate_solutions(inst) == [(0, 1, 2, 3, 4, 6, 7), (0, 1, 2, 3, 5, 6, 7)]
    plain = solve(inst, use_complement=False)
    assert not plain.complemented and plain.solutions == report.solutions


def test_solve_determinism_across_threads():
    rng = random.Random(11)
    values = tuple(rng.randint(1, 60) for _ in range(18))
    for m in (4, 5, 6):
        inst = ProblemInstance(values, sum(values[:m]), m)
        base = solve(inst, threads=1).solutions
        for threads in (2, 8):
            assert solve(inst, threads=threads).solutions == base


def test_solve_limit(example3):
    sols = solve(example3, 4).solutions
    assert len(sols) == 4 and len(set(sols)) == 4
    assert set(sols) <= set(enumerate_solutions(example3))


def test_extreme_values_stay_exact():
    big = 1 << 62
    inst = ProblemInstance((big, big, -big, big), 2 * big, 4)
    assert solve(inst).solutions == [(0, 1, 2, 3)]
    assert tau(ACC_MAX, 1) == ACC_MAX - 1
