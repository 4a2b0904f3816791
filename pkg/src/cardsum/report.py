from __future__ import annotations

import threading
from dataclasses import dataclass, field

FOUND = "found"
NONE = "none"
INFEASIBLE = "infeasible-by-range"
CAPACITY = "capacity-exceeded"


@dataclass
class Counters:
    """Operation counters shared by a solver run; safe to bump from worker threads."""

    entries_built: int = 0
    probes: int = 0
    exclusions_tried: int = 0
    tasks_run: int = 0
    table_sizes: list[int] = field(default_factory=list)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def add_table(self, size: int) -> None:
        with self._lock:
            self.entries_built += size
            self.table_sizes.append(size)

    def merge(self, other: "Counters") -> None:
        with self._lock:
            self.entries_built += other.entries_built
            self.probes += other.probes
            self.exclusions_tried += other.exclusions_tried
            self.tasks_run += other.tasks_run
            self.table_sizes.extend(other.table_sizes)

    def add(self, *, probes: int = 0, exclusions: int = 0, tasks: int = 0) -> None:
        with self._lock:
            self.probes += probes
            self.exclusions_tried += exclusions
            self.tasks_run += tasks


@dataclass
class SolverReport:
    algorithm: str
    solutions: list[tuple[int, ...]]
    entries_built: int = 0
    probes: int = 0
    exclusions_tried: int = 0
    tasks_run: int = 0
    wall_time: float = 0.0  # milliseconds
    status: str = NONE
    table_sizes: list[int] = field(default_factory=list)
    collisions: list = field(default_factory=list)
    complemented: bool = False

    @classmethod
    def from_counters(cls, algorithm: str, solutions, counters: Counters, wall_ms: float) -> "SolverReport":
        return cls(
            algorithm=algorithm,
            solutions=list(solutions),
            entries_built=counters.entries_built,
            probes=counters.probes,
            exclusions_tried=counters.exclusions_tried,
            tasks_run=counters.tasks_run,
            wall_time=wall_ms,
            status=FOUND if solutions else NONE,
            table_sizes=list(counters.table_sizes),
        )

    @property
    def found(self) -> bool:
        return self.status == FOUND
