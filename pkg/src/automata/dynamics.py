"""Dynamical systems induced by a rule and an update mode"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from automata import kernels
from automata.configuration import Configuration, InputError, check_ring_size
from automata.modes import Mode, mode_arrays
from automata.rules import RuleTable, as_rule

logger = logging.getLogger("EcaSeq.dynamics")


@dataclass(frozen=True)
class DynamicalSystem:
    """A rule applied on a ring of n cells under one update mode"""
    rule: RuleTable
    n: int
    mode: Mode

    def __post_init__(self):
        object.__setattr__(self, "rule", as_rule(self.rule))
        check_ring_size(self.n)
        if self.mode.n != self.n:
            raise InputError(f"mode {self.mode} is defined on {self.mode.n} cells, ring has {self.n}")

    @cached_property
    def step_map(self) -> np.ndarray:
        """Image of every configuration under one step, indexed by bits"""
        cells, offsets = mode_arrays(self.mode)
        table = kernels.step_table(self.rule.array, self.n, cells, offsets)
        table.setflags(write=False)
        return table

    def fixed_points(self) -> frozenset[Configuration]:
        """Fixed points of the step map"""
        step_map = self.step_map
        hits = np.flatnonzero(step_map == np.arange(step_map.shape[0]))
        return frozenset(Configuration(self.n, int(bits)) for bits in hits)


@dataclass(frozen=True)
class OrbitRecord:
    """Trajectory of one configuration at step granularity

    `states` holds x^0 .. x^(transient + cycle - 1); the cycle is the tail of
    length `cycle`. `trace[t]` lists the substep configurations of step t when
    requested.
    """
    transient: int
    cycle: int
    states: tuple[Configuration, ...]
    trace: Optional[tuple[tuple[Configuration, ...], ...]] = field(default=None, compare=False)

    @property
    def cycle_states(self) -> tuple[Configuration, ...]:
        """Configurations on the limit cycle, in visit order"""
        return self.states[self.transient:]

    @property
    def limit_set(self) -> frozenset[Configuration]:
        return frozenset(self.cycle_states)

    @property
    def reaches_fixed_point(self) -> bool:
        return self.cycle == 1

    def to_dict(self) -> dict:
        return {
            "transient": self.transient,
            "cycle": self.cycle,
            "limit_set": [str(x) for x in self.cycle_states],
        }


def _check_block(system: DynamicalSystem, block: Iterable[int]) -> frozenset[int]:
    block = frozenset(block)
    if not block:
        raise InputError("a substep needs a non-empty block")
    bad = [cell for cell in block if not 0 <= cell < system.n]
    if bad:
        raise InputError(f"cell {min(bad)} is outside 0..{system.n - 1}")
    return block


def substep(system: DynamicalSystem, x: Configuration, block: Iterable[int]) -> Configuration:
    """Update the cells of block simultaneously against x, keep the others"""
    block = _check_block(system, block)
    if x.n != system.n:
        raise InputError(f"configuration has {x.n} cells, ring has {system.n}")
    bits = x.bits
    for cell in block:
        state = system.rule.outputs[x.neighborhood(cell)]
        bits = (bits & ~(1 << cell)) | (state << cell)
    return Configuration(x.n, bits)


def _step_with_trace(system: DynamicalSystem, x: Configuration) -> tuple[Configuration, tuple[Configuration, ...]]:
    substeps = []
    for block in system.mode.blocks:
        x = substep(system, x, block)
        substeps.append(x)
    return x, tuple(substeps)


def step(system: DynamicalSystem, x: Configuration) -> Configuration:
    """Apply the blocks of one period in order, each reading the previous result"""
    for block in system.mode.blocks:
        x = substep(system, x, block)
    return x


def orbit(system: DynamicalSystem, x: Configuration, max_steps: Optional[int] = None,
          trace: bool = False) -> OrbitRecord:
    """Iterate step until a configuration repeats

    Args:
        system: The dynamical system to iterate
        x: Initial configuration
        max_steps: Upper bound on steps, at least 2^n; defaults to 2^n
        trace: Keep the substep configurations of every step

    Returns:
        OrbitRecord: transient and cycle lengths with the visited configurations
    """
    bound = 1 << system.n
    if max_steps is None:
        max_steps = bound
    elif max_steps < bound:
        raise InputError(f"max_steps must be at least 2^n = {bound}, got {max_steps}")

    seen: dict[Configuration, int] = {}
    states: list[Configuration] = []
    substeps: list[tuple[Configuration, ...]] = []
    current = x
    for t in range(max_steps + 1):
        if current in seen:
            start = seen[current]
            return OrbitRecord(
                transient=start,
                cycle=t - start,
                states=tuple(states),
                trace=tuple(substeps) if trace else None,
            )
        seen[current] = t
        states.append(current)
        if trace:
            current, rows = _step_with_trace(system, current)
            substeps.append(rows)
        else:
            current = step(system, current)
    # A deterministic map on 2^n states repeats within 2^n steps
    raise AssertionError(f"no repeat within {max_steps} steps from {x}")


def fixed_points_parallel(rule: RuleTable, n: int) -> frozenset[Configuration]:
    """All configurations left unchanged by the simultaneous update"""
    rule = as_rule(rule)
    check_ring_size(n)
    logger.debug("Enumerating parallel fixed points of rule %d on %d cells", rule.code, n)
    found = kernels.parallel_fixed_points(rule.array, n)
    return frozenset(Configuration(n, int(bits)) for bits in found)
