"""Universality of update modes and universal-mode counting"""
import logging
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from automata import kernels
from automata.configuration import Configuration, InputError, check_ring_size
from automata.dynamics import DynamicalSystem, OrbitRecord, orbit
from automata.modes import Mode, SequentialMode
from automata.rules import RuleTable, as_rule
from search import check_search_bound
from search.enumeration import permutation_shards, prefix_permutations, representatives_array
from search.pool import run_sharded, shared
from utilities.constants import (MAX_CLASS_SEARCH_SIZE, MAX_RAW_SEARCH_SIZE, MAX_UNIVERSALITY_SIZE,
                                 PUBLISHED_MODE_COUNTS)

logger = logging.getLogger("EcaSeq.search.universality")

Counting = Literal["raw", "classes"]
COUNTINGS: tuple[Counting, ...] = ("raw", "classes")


@dataclass(frozen=True)
class ConvergenceProfile:
    """How many configurations reach a fixed point and how long they take"""
    converged: int
    total: int
    max_transient: Optional[int]
    mean_transient: Optional[float]


@dataclass(frozen=True)
class UniversalityVerdict:
    """Whether every configuration reaches a fixed point under one mode"""
    rule: int
    n: int
    mode: Mode
    universal: bool
    profile: ConvergenceProfile
    witness: Optional[Configuration] = None
    witness_orbit: Optional[OrbitRecord] = None

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "n": self.n,
            "mode": str(self.mode),
            "universal": self.universal,
            "witness": None if self.witness is None else str(self.witness),
            "orbit": None if self.witness_orbit is None else self.witness_orbit.to_dict(),
            "converged": self.profile.converged,
            "max_transient": self.profile.max_transient,
            "mean_transient": self.profile.mean_transient,
        }


def convergence_profile(depths: np.ndarray) -> ConvergenceProfile:
    """Summarize the kernel's steps-to-fixed-point labels"""
    reached = depths[depths >= 0]
    if reached.size == 0:
        return ConvergenceProfile(0, int(depths.size), None, None)
    return ConvergenceProfile(
        converged=int(reached.size),
        total=int(depths.size),
        max_transient=int(reached.max()),
        mean_transient=round(float(reached.mean()), 6),
    )


def is_universal(rule: RuleTable | int, n: int, mode: Mode) -> UniversalityVerdict:
    """Check that every configuration's orbit under mode ends on a fixed point

    The witness of a negative verdict is the smallest failing configuration.
    """
    rule = as_rule(rule)
    check_ring_size(n)
    check_search_bound(n, MAX_UNIVERSALITY_SIZE, "universality")
    system = DynamicalSystem(rule, n, mode)
    depths = kernels.convergence_depths(system.step_map)
    profile = convergence_profile(depths)
    failing = np.flatnonzero(depths < 0)
    if failing.size == 0:
        return UniversalityVerdict(rule.code, n, mode, True, profile)

    witness = Configuration(n, int(failing[0]))
    logger.debug("Rule %d, mode %s: %d configurations miss a fixed point, first %s",
                 rule.code, mode, failing.size, witness)
    return UniversalityVerdict(rule.code, n, mode, False, profile, witness, orbit(system, witness))


#region Mode counting
def _universal_prefix(prefix: tuple[int, ...]) -> np.ndarray:
    n = shared("n")
    perms = prefix_permutations(n, prefix)
    return perms[kernels.universal_flags(shared("table"), n, perms)]


def _universal_rows(perms: np.ndarray) -> np.ndarray:
    return perms[kernels.universal_flags(shared("table"), shared("n"), perms)]


def _universal_orders(rule: RuleTable, n: int, counting: Counting, workers: int,
                      progress: bool) -> list[np.ndarray]:
    check_ring_size(n)
    payload = {"table": rule.array, "n": n}
    if counting == "raw":
        check_search_bound(n, MAX_RAW_SEARCH_SIZE, "raw permutation search")
        shards = permutation_shards(n)
        return run_sharded(_universal_prefix, shards, payload, workers, progress,
                           desc=f"rule {rule.code} n={n} raw")
    if counting == "classes":
        check_search_bound(n, MAX_CLASS_SEARCH_SIZE, "signature class search")
        reps = representatives_array(n)
        shards = np.array_split(reps, max(1, min(len(reps), workers * 4)))
        return run_sharded(_universal_rows, shards, payload, workers, progress,
                           desc=f"rule {rule.code} n={n} classes")
    raise InputError(f"counting must be one of {', '.join(COUNTINGS)}, got {counting!r}")


def universal_modes(rule: RuleTable | int, n: int, counting: Counting = "raw",
                    workers: int = 1, progress: bool = False) -> tuple[SequentialMode, ...]:
    """Universal sequential modes in lexicographic order"""
    rule = as_rule(rule)
    chunks = _universal_orders(rule, n, counting, workers, progress)
    return tuple(SequentialMode(tuple(int(cell) for cell in row))
                 for chunk in chunks for row in chunk)


def count_universal_modes(rule: RuleTable | int, n: int, counting: Counting = "raw",
                          workers: int = 1, progress: bool = False) -> int:
    """Number of universal sequential modes, over raw permutations or signature classes"""
    rule = as_rule(rule)
    chunks = _universal_orders(rule, n, counting, workers, progress)
    count = sum(len(chunk) for chunk in chunks)
    logger.info("Rule %d, n=%d: %d universal modes (%s)", rule.code, n, count, counting)
    return count
#endregion


#region Published counts
@dataclass(frozen=True)
class ModeCount:
    """A universal mode count, set against the published count when one exists

    With a published count both countings are filled in, and the count is a
    discrepancy when it matches neither.
    """
    rule: int
    n: int
    counting: Counting
    count: int
    raw: Optional[int] = None
    classes: Optional[int] = None
    published: Optional[int] = None

    @property
    def discrepancy(self) -> bool:
        return self.published is not None and self.published not in (self.raw, self.classes)

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "n": self.n,
            "counting": self.counting,
            "count": self.count,
            "raw": self.raw,
            "classes": self.classes,
            "published": self.published,
            "discrepancy": self.discrepancy,
        }


def mode_count(rule: RuleTable | int, n: int, counting: Counting = "raw", workers: int = 1,
               progress: bool = False, count: Optional[int] = None) -> ModeCount:
    """Count universal modes and compare with the published count for (rule, n)

    `count` skips recounting when the caller already enumerated the modes.
    """
    rule = as_rule(rule)
    if count is None:
        count = count_universal_modes(rule, n, counting, workers, progress)
    counts = {counting: count}
    published = PUBLISHED_MODE_COUNTS.get((rule.code, n))
    if published is not None:
        other: Counting = "classes" if counting == "raw" else "raw"
        counts[other] = count_universal_modes(rule, n, other, workers, progress)
    result = ModeCount(rule.code, n, counting, count, counts.get("raw"), counts.get("classes"),
                       published)
    if result.discrepancy:
        logger.warning("Rule %d, n=%d: published count %d, found %d raw and %d classes",
                       rule.code, n, published, result.raw, result.classes)
    return result
#endregion
