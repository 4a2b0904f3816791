import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import popcount_subsets, subset_sums
from cardsum.errors import CapacityError, InfeasibleCardinality, ParseError
from cardsum.instance import (
    FeasibleRange,
    ProblemInstance,
    complement_indices,
    complement_transform,
    feasible_range,
    in_range,
    parse_instance,
    render_instance,
    total_sum,
)
from conftest import EXAMPLE3_TEXT, EXAMPLE3_VALUES


def test_parse_example3(example3):
    assert parse_instance(EXAMPLE3_TEXT) == example3
    assert parse_instance(EXAMPLE3_TEXT.encode()) == example3


def test_parse_empty_instance():
    inst = parse_instance("0 0 0\n")
    assert inst.values == () and inst.m == 0 and inst.target == 0


def test_parse_tolerates_comments_and_whitespace():
    text = "# seed=3\n  3\t2   7 \n\n# mid comment\n 1\n2   3\n"
    assert parse_instance(text) == ProblemInstance((1, 2, 3), 7, 2)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("3 2 7\n1 2 x", 2, 5),
        ("3 2\n", 1, 3),
        ("3 2 7\n1 2", 1, 5),
        ("3 2 7\n1 2 3 4", 2, 7),
        ("-1 0 0\n", 1, 1),
    ],
)
def test_parse_errors_carry_location(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_parse_width_cap():
    big = 1 << 62
    assert parse_instance(f"1 1 {big}\n{big}\n").values == (big,)
    with pytest.raises(CapacityError):
        parse_instance(f"1 1 0\n{big + 1}\n")
    with pytest.raises(ParseError):
        parse_instance(f"1 1 0\n{-big - 1}\n")


def test_feasible_range_examples(example3):
    assert feasible_range(example3) == FeasibleRange(21, 177)
    assert feasible_range(ProblemInstance((4, 9), 0, 0)) == (0, 0)
    assert feasible_range(ProblemInstance((5, 1, 3), 0, 2)) == (4, 8)
    with pytest.raises(InfeasibleCardinality):
        feasible_range(ProblemInstance((1, 2), 0, 3))


def test_feasible_range_leaves_input_order(example3):
    feasible_range(example3)
    assert example3.values == EXAMPLE3_VALUES


def test_in_range_examples(example3):
    assert in_range(example3)
    assert not in_range(example3.with_target(178))
    assert not in_range(example3.with_target(20))
    assert in_range(example3.with_target(21)) and in_range(example3.with_target(177))


def test_total_sum():
    assert total_sum(ProblemInstance(EXAMPLE3_VALUES, 0, 0)) == 246
    assert total_sum(ProblemInstance((), 0, 0)) == 0
    assert total_sum(ProblemInstance((-3, 3), 0, 0)) == 0


def test_complement_transform_examples(example3):
    flipped = complement_transform(example3)
    assert (flipped.m, flipped.target) == (10, 109)
    assert complement_transform(flipped) == example3
    full = ProblemInstance((1, 2, 3), 6, 3)
    assert complement_transform(full) == ProblemInstance((1, 2, 3), 0, 0)


def test_complement_solution_sets_are_complements(example3):
    ours = subset_sums(example3.values, 6, 137)
    theirs = subset_sums(example3.values, 10, 109)
    assert sorted(complement_indices(s, 16) for s in ours) == theirs


@given(st.lists(st.integers(-20, 20), max_size=10), st.data())
def test_every_subset_sum_lies_in_range(values, data):
    m = data.draw(st.integers(0, len(values)))
    lo, hi = feasible_range(ProblemInstance(tuple(values), 0, m))
    sums = [sum(values[i] for i in s) for s in popcount_subsets(len(values), m)]
    assert min(sums) == lo and max(sums) == hi


@given(st.lists(st.integers(-(1 << 62), 1 << 62), max_size=12), st.integers(-(1 << 70), 1 << 70), st.data())
def test_render_parse_round_trip(values, target, data):
    inst = ProblemInstance(tuple(values), target, data.draw(st.integers(0, 15)))
    assert parse_instance(render_instance(inst, ["seed=1"])) == inst


def test_render_shape():
    assert render_instance(ProblemInstance((3, -1), 2, 1)) == "2 1 2\n3 -1\n"


def test_instances_are_immutable(example3):
    with pytest.raises(AttributeError):
        example3.target = 5
    with pytest.raises(InfeasibleCardinality):
        ProblemInstance((1,), 0, -1)
