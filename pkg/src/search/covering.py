"""Coverings by sequential modes, non-convergent configurations and word blockers"""
import logging
from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from automata import kernels
from automata.configuration import Configuration, InputError, all_configurations, check_ring_size
from automata.modes import SequentialMode, UpdateMode, representative_modes, temporal_compose
from automata.rules import RuleTable, as_rule
from search import check_search_bound
from search.enumeration import modes_array
from utilities.constants import MAX_CLASS_SEARCH_SIZE, MAX_COVERING_SIZE, MAX_ISOLATION_SIZE

logger = logging.getLogger("EcaSeq.search.covering")

Strategy = Literal["greedy", "exact"]
STRATEGIES: tuple[Strategy, ...] = ("greedy", "exact")


@dataclass(frozen=True)
class CoveringResult:
    """A covering with its per-configuration assignment, or the configurations no mode saves"""
    rule: int
    n: int
    strategy: Strategy
    modes: Optional[tuple[SequentialMode, ...]]
    assignment: dict[Configuration, SequentialMode] = field(default_factory=dict, compare=False)
    uncovered: frozenset[Configuration] = frozenset()

    @property
    def found(self) -> bool:
        return self.modes is not None

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "n": self.n,
            "strategy": self.strategy,
            "covering": None if self.modes is None else [str(mode) for mode in self.modes],
            "assignment": {str(x): str(mode) for x, mode in sorted(self.assignment.items())},
            "witnesses": [str(x) for x in sorted(self.uncovered)],
        }


def _mask_of(row: np.ndarray) -> int:
    """Boolean row over configurations as a Python int bitmask"""
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def _configs_of(n: int, mask: int) -> frozenset[Configuration]:
    return frozenset(Configuration(n, bits) for bits in range(1 << n) if (mask >> bits) & 1)


def converged_sets(rule: RuleTable, n: int,
                   modes: tuple[SequentialMode, ...]) -> list[int]:
    """Per mode, the bitmask of configurations whose orbit reaches a fixed point"""
    rows = kernels.converged_masks(rule.array, n, modes_array(modes))
    return [_mask_of(row) for row in rows]


def _prepare(rule: RuleTable | int, n: int, limit: int, search: str):
    rule = as_rule(rule)
    check_ring_size(n)
    check_search_bound(n, limit, search)
    modes = representative_modes(n)
    return rule, modes, converged_sets(rule, n, modes)


def _greedy(universe: int, masks: list[int]) -> list[int]:
    chosen = []
    uncovered = universe
    while uncovered:
        best, gain = -1, 0
        for index, mask in enumerate(masks):
            covered = (mask & uncovered).bit_count()
            if covered > gain:
                best, gain = index, covered
        chosen.append(best)
        uncovered &= ~masks[best]
    return chosen


def _undominated(masks: list[int]) -> list[int]:
    """Indices of masks not contained in another mask; first index kept among equals"""
    order = sorted(range(len(masks)), key=lambda i: (-masks[i].bit_count(), i))
    kept: list[int] = []
    for index in order:
        mask = masks[index]
        if not any((mask | masks[other]) == masks[other] for other in kept):
            kept.append(index)
    return sorted(kept)


def _exact(universe: int, masks: list[int]) -> list[int]:
    """Minimum set cover by branch and bound, seeded with the greedy solution"""
    candidates = _undominated(masks)
    best = sorted(_greedy(universe, masks))
    largest = max(masks[i].bit_count() for i in candidates)

    def branch(uncovered: int, chosen: list[int]) -> None:
        nonlocal best
        if not uncovered:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        # Every further set covers at most `largest` new configurations
        if len(chosen) + -(-uncovered.bit_count() // largest) >= len(best):
            return
        # Branch on the uncovered configuration with the fewest covering sets
        element, options = None, None
        remaining = uncovered
        while remaining:
            low = remaining & -remaining
            holders = [i for i in candidates if masks[i] & low]
            if options is None or len(holders) < len(options):
                element, options = low, holders
                if len(holders) <= 1:
                    break
            remaining ^= low
        options.sort(key=lambda i: (-(masks[i] & uncovered).bit_count(), i))
        for index in options:
            branch(uncovered & ~masks[index], chosen + [index])

    branch(universe, [])
    return best


def find_covering(rule: RuleTable | int, n: int, strategy: Strategy = "greedy") -> CoveringResult:
    """Set of representative modes under which every configuration reaches a fixed point

    Greedy repeatedly takes the mode saving the most uncovered configurations;
    exact returns a smallest such set. When some configuration converges under
    no representative mode the result carries those configurations instead.
    """
    if strategy not in STRATEGIES:
        raise InputError(f"strategy must be one of {', '.join(STRATEGIES)}, got {strategy!r}")
    limit = MAX_COVERING_SIZE if strategy == "exact" else MAX_CLASS_SEARCH_SIZE
    rule, modes, masks = _prepare(rule, n, limit, f"{strategy} covering")
    universe = (1 << (1 << n)) - 1

    union = 0
    for mask in masks:
        union |= mask
    if union != universe:
        uncovered = _configs_of(n, universe & ~union)
        logger.info("Rule %d, n=%d: %d configurations converge under no sequential mode",
                    rule.code, n, len(uncovered))
        return CoveringResult(rule.code, n, strategy, None, {}, uncovered)

    picks = _greedy(universe, masks) if strategy == "greedy" else _exact(universe, masks)
    chosen = tuple(modes[i] for i in picks)
    assignment = {}
    for x in all_configurations(n):
        for index in picks:
            if (masks[index] >> x.bits) & 1:
                assignment[x] = modes[index]
                break
    logger.info("Rule %d, n=%d: %s covering of size %d", rule.code, n, strategy, len(chosen))
    return CoveringResult(rule.code, n, strategy, chosen, assignment)


def non_convergent_configs(rule: RuleTable | int, n: int) -> frozenset[Configuration]:
    """Configurations that end on a cycle of length >= 2 under every representative mode"""
    rule, _, masks = _prepare(rule, n, MAX_COVERING_SIZE, "non-convergence")
    union = 0
    for mask in masks:
        union |= mask
    return _configs_of(n, ((1 << (1 << n)) - 1) & ~union)


def word_blocker_check(rule: RuleTable | int, n: int, word: str) -> bool:
    """True iff every configuration containing word (cyclically) is non-convergent"""
    if not word or any(ch not in "01" for ch in word):
        raise InputError(f"word must be a non-empty 0/1 string, got {word!r}")
    if len(word) > n:
        raise InputError(f"word {word!r} is longer than the ring size {n}")
    blocked = non_convergent_configs(rule, n)
    containing = [x for x in all_configurations(n) if x.contains_word(word)]
    return all(x in blocked for x in containing)


#region Periodic modes built from two sequential modes
@dataclass(frozen=True)
class CompositionCover:
    """Composed mode found for each configuration, and those with none"""
    rule: int
    n: int
    assignment: dict[Configuration, UpdateMode]
    uncovered: frozenset[Configuration]

    @property
    def complete(self) -> bool:
        return not self.uncovered

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "n": self.n,
            "assignment": {str(x): str(mode) for x, mode in sorted(self.assignment.items())},
            "witnesses": [str(x) for x in sorted(self.uncovered)],
        }


def _composition_reach(first: np.ndarray, second: np.ndarray, fixed: np.ndarray) -> np.ndarray:
    """Configurations whose orbit under second-after-first ends on a parallel fixed point"""
    composed = second[first]
    depths = kernels.convergence_depths(composed)
    ends = np.arange(composed.shape[0])
    for _ in range(int(depths.max(initial=0))):
        ends = composed[ends]
    return (depths >= 0) & fixed[ends]


def _compose_search(rule: RuleTable, n: int, targets: np.ndarray) -> dict[int, UpdateMode]:
    """First composed mode, in lexicographic pair order, carrying each target to a fixed point"""
    modes = representative_modes(n)
    maps = kernels.sequential_step_tables(rule.array, n, modes_array(modes))
    fixed = np.zeros(1 << n, dtype=bool)
    fixed[kernels.parallel_fixed_points(rule.array, n)] = True
    if not fixed.any():
        return {}

    found: dict[int, UpdateMode] = {}
    pending = set(int(x) for x in targets)
    for a, first in enumerate(modes):
        for b, second in enumerate(modes):
            if not pending:
                return found
            reach = _composition_reach(maps[a], maps[b], fixed)
            hits = [x for x in pending if reach[x]]
            if hits:
                mode = temporal_compose(first, second)
                for x in hits:
                    found[x] = mode
                pending.difference_update(hits)
    return found


def find_composed_mode(rule: RuleTable | int, n: int, x: Configuration) -> Optional[UpdateMode]:
    """Composition of two representative modes under which x reaches a fixed point"""
    rule = as_rule(rule)
    check_ring_size(n)
    check_search_bound(n, MAX_ISOLATION_SIZE, "composed mode search")
    if x.n != n:
        raise InputError(f"configuration has {x.n} cells, ring has {n}")
    return _compose_search(rule, n, np.array([x.bits])).get(x.bits)


def periodic_cover(rule: RuleTable | int, n: int) -> CompositionCover:
    """Composed mode for every configuration of the ring"""
    rule = as_rule(rule)
    check_ring_size(n)
    check_search_bound(n, MAX_ISOLATION_SIZE, "composed mode search")
    found = _compose_search(rule, n, np.arange(1 << n))
    assignment = {Configuration(n, bits): mode for bits, mode in found.items()}
    uncovered = frozenset(x for x in all_configurations(n) if x.bits not in found)
    return CompositionCover(rule.code, n, assignment, uncovered)
#endregion
