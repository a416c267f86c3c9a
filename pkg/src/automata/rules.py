"""Wolfram-coded local rules and their static properties"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Literal, Optional

import numpy as np

from automata.configuration import Configuration, InputError
from utilities.constants import MAX_WALL_LENGTH, NEIGHBORHOODS_DESC

DasCondition = Literal["i", "ii", "iii"]


def pattern_of(left: int, center: int, right: int) -> int:
    """Neighborhood pattern index 4l+2c+r"""
    return (left << 2) | (center << 1) | right


def pattern_text(pattern: int) -> str:
    return format(pattern, "03b")


@dataclass(frozen=True)
class RuleTable:
    """Truth table of an elementary rule, outputs[p] is the new state for pattern p"""
    outputs: tuple[int, ...]

    def __post_init__(self):
        if len(self.outputs) != 8 or any(bit not in (0, 1) for bit in self.outputs):
            raise InputError(f"a rule table needs 8 binary outputs, got {self.outputs!r}")

    @classmethod
    def from_code(cls, code: int) -> "RuleTable":
        if not 0 <= code <= 255:
            raise InputError(f"rule code must be between 0 and 255, got {code}")
        return cls(tuple((code >> p) & 1 for p in range(8)))

    @property
    def code(self) -> int:
        return sum(bit << p for p, bit in enumerate(self.outputs))

    @cached_property
    def array(self) -> np.ndarray:
        """Outputs as the int64 array the numba kernels expect"""
        table = np.array(self.outputs, dtype=np.int64)
        table.setflags(write=False)
        return table

    def output(self, pattern: int) -> int:
        return self.outputs[pattern]

    def reflected(self) -> "RuleTable":
        """Rule seen in a mirror: f'(l,c,r) = f(r,c,l)"""
        return RuleTable(tuple(
            self.outputs[pattern_of(p & 1, (p >> 1) & 1, p >> 2)] for p in range(8)))

    def conjugated(self) -> "RuleTable":
        """Rule with both states swapped: f'(l,c,r) = 1 - f(1-l,1-c,1-r)"""
        return RuleTable(tuple(1 - self.outputs[7 - p] for p in range(8)))

    def __str__(self) -> str:
        return f"Rule {self.code}"


def as_rule(rule: "RuleTable | int") -> RuleTable:
    """Accept either a table or a Wolfram code"""
    if isinstance(rule, RuleTable):
        return rule
    return RuleTable.from_code(int(rule))


def local_apply(rule: RuleTable, left: int, center: int, right: int) -> int:
    """Output of the local rule for one neighborhood"""
    return rule.outputs[pattern_of(left, center, right)]


def parallel_step(rule: RuleTable, x: Configuration) -> Configuration:
    """Update every cell at once against the current configuration"""
    return Configuration.from_cells(rule.outputs[x.neighborhood(i)] for i in range(x.n))


def is_active(rule: RuleTable, pattern: int) -> bool:
    """True if the rule flips the center cell of pattern"""
    return rule.outputs[pattern] != (pattern >> 1) & 1


def is_passive(rule: RuleTable, pattern: int) -> bool:
    return not is_active(rule, pattern)


def _all_passive(rule: RuleTable, words: tuple[str, ...]) -> bool:
    return all(is_passive(rule, int(word, 2)) for word in words)


def _any_active(rule: RuleTable, words: tuple[str, ...]) -> bool:
    return any(is_active(rule, int(word, 2)) for word in words)


def das_condition(rule: RuleTable) -> Optional[DasCondition]:
    """First satisfied sufficient condition for asynchronous convergence, or None

    (i)   000 passive and 010 active, or 111 passive and 101 active
    (ii)  000, 001, 010, 100 passive and 011 or 110 active, or
          011, 101, 110, 111 passive and 001 or 100 active
    (iii) 001, 010, 100, 101 passive, or 010, 011, 101, 110 passive
    """
    if ((_all_passive(rule, ("000",)) and _any_active(rule, ("010",)))
            or (_all_passive(rule, ("111",)) and _any_active(rule, ("101",)))):
        return "i"
    if ((_all_passive(rule, ("000", "001", "010", "100")) and _any_active(rule, ("011", "110")))
            or (_all_passive(rule, ("011", "101", "110", "111"))
                and _any_active(rule, ("001", "100")))):
        return "ii"
    if (_all_passive(rule, ("001", "010", "100", "101"))
            or _all_passive(rule, ("010", "011", "101", "110"))):
        return "iii"
    return None


@dataclass(frozen=True)
class SymmetryClass:
    """Rules related by reflection and conjugation"""
    members: frozenset[int]

    @property
    def representative(self) -> int:
        return min(self.members)

    def __contains__(self, code: int) -> bool:
        return code in self.members


@lru_cache(maxsize=256)
def symmetry_class(code: int) -> SymmetryClass:
    """Closure of a rule under reflection and conjugation"""
    rule = RuleTable.from_code(code)
    members = {
        rule.code,
        rule.reflected().code,
        rule.conjugated().code,
        rule.reflected().conjugated().code,
    }
    return SymmetryClass(frozenset(members))


@lru_cache(maxsize=1)
def symmetry_representatives() -> tuple[int, ...]:
    """Minimal member of every symmetry class, ascending"""
    return tuple(sorted({symmetry_class(code).representative for code in range(256)}))


def find_walls(rule: RuleTable, k: int) -> frozenset[str]:
    """Words of length k whose cells keep their state whatever surrounds them

    For u of length k every boundary pair (a, b) is tried and the rule is applied
    at each position of u inside the word a u b.
    """
    if not 1 <= k <= MAX_WALL_LENGTH:
        raise InputError(f"wall length must be between 1 and {MAX_WALL_LENGTH}, got {k}")
    walls = set()
    for cells in product((0, 1), repeat=k):
        stable = True
        for left, right in product((0, 1), repeat=2):
            padded = (left, *cells, right)
            if any(local_apply(rule, *padded[j:j + 3]) != cells[j] for j in range(k)):
                stable = False
                break
        if stable:
            walls.add("".join(map(str, cells)))
    return frozenset(walls)


def activity_map(rule: RuleTable) -> dict[str, str]:
    """'active' or 'passive' for each neighborhood, 111 first"""
    return {
        pattern_text(p): "active" if is_active(rule, p) else "passive"
        for p in NEIGHBORHOODS_DESC
    }
