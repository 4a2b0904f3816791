"""Exact solvers for fixed-cardinality subset sum: choose m of n integers summing to S."""

from .combinatorics import Combination, binomial, first_combination, next_combination, rank, unrank
from .errors import CapacityError, CardsumError, InfeasibleCardinality, InvalidArgument, ParseError
from .instance import (
    FeasibleRange,
    ProblemInstance,
    complement_transform,
    feasible_range,
    in_range,
    parse_instance,
    render_instance,
    total_sum,
)
from .mitm import CollisionPair, SumTable, build_sum_table, find_pairs, solve, solve_even, solve_odd, tau
from .oracle import Solution, count_solutions, enumerate_solutions
from .partition import PartitionPlan, enumerate_compositions, make_partition, solve_composition_mode, solve_pair_mode
from .report import SolverReport

__version__ = "0.1.0"
