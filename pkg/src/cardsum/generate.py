"""Seeded random instances, optionally with a planted solution."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidArgument
from .instance import ProblemInstance, feasible_range, render_instance


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    m: int
    low: int = 1
    high: int = 100
    seed: int = 0
    planted: bool = True

    def __post_init__(self) -> None:
        if self.n < 0 or not 0 <= self.m <= self.n:
            raise InvalidArgument(f"need 0 <= m <= n, got n={self.n}, m={self.m}")
        if self.low > self.high:
            raise InvalidArgument(f"empty value range [{self.low}, {self.high}]")


def draw_instance(spec: GeneratorSpec, rng: random.Random) -> ProblemInstance:
    values = tuple(rng.randint(spec.low, spec.high) for _ in range(spec.n))
    return draw_target(values, spec.m, spec.planted, rng)


def draw_target(values: tuple[int, ...], m: int, planted: bool, rng: random.Random) -> ProblemInstance:
    if planted:
        chosen = rng.sample(range(len(values)), m)
        return ProblemInstance(values, sum(values[i] for i in chosen), m)
    lo, hi = feasible_range(ProblemInstance(values, 0, m))
    return ProblemInstance(values, rng.randint(lo, hi), m)


def generate(spec: GeneratorSpec) -> ProblemInstance:
    return draw_instance(spec, random.Random(spec.seed))


def header(spec: GeneratorSpec) -> list[str]:
    return [
        f"seed={spec.seed}",
        f"n={spec.n} m={spec.m} range=[{spec.low},{spec.high}] planted={'yes' if spec.planted else 'no'}",
    ]


def render_generated(spec: GeneratorSpec) -> str:
    return render_instance(generate(spec), header(spec))
