"""Fixed-point existence and isolation under sequential modes"""
import logging
from dataclasses import dataclass

import numpy as np

from automata import kernels
from automata.configuration import Configuration, check_ring_size
from automata.dynamics import fixed_points_parallel
from automata.rules import RuleTable, as_rule
from search import check_search_bound
from search.enumeration import representatives_array
from utilities.constants import MAX_ISOLATION_SIZE

logger = logging.getLogger("EcaSeq.search.fixed_points")


@dataclass(frozen=True)
class FixedPointReport:
    rule: int
    n: int
    fixed_points: frozenset[Configuration]

    @property
    def exists(self) -> bool:
        return bool(self.fixed_points)

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "n": self.n,
            "exists": self.exists,
            "fixed_points": [str(x) for x in sorted(self.fixed_points)],
        }


@dataclass(frozen=True)
class IsolationReport:
    """Fixed points no other configuration ever reaches

    `degenerate` marks rules where every configuration is fixed, so no fixed
    point can be told apart from the rest.
    """
    rule: int
    n: int
    fixed_points: frozenset[Configuration]
    isolated: frozenset[Configuration]
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "n": self.n,
            "fixed_points": [str(x) for x in sorted(self.fixed_points)],
            "isolated": [str(x) for x in sorted(self.isolated)],
            "degenerate": self.degenerate,
        }


def fixed_point_existence(rule: RuleTable | int, n: int) -> FixedPointReport:
    """Fixed points shared by the parallel and every sequential mode"""
    rule = as_rule(rule)
    return FixedPointReport(rule.code, n, fixed_points_parallel(rule, n))


def isolated_fixed_points(rule: RuleTable | int, n: int) -> IsolationReport:
    """Fixed points whose only preimage is themselves under every representative mode"""
    rule = as_rule(rule)
    check_ring_size(n)
    check_search_bound(n, MAX_ISOLATION_SIZE, "isolation sweep")
    fixed = fixed_points_parallel(rule, n)
    if len(fixed) == 1 << n:
        logger.debug("Rule %d, n=%d: every configuration is fixed", rule.code, n)
        return IsolationReport(rule.code, n, fixed, frozenset(), degenerate=True)

    candidates = np.array(sorted(x.bits for x in fixed), dtype=np.int64)
    isolated = np.ones(candidates.shape[0], dtype=bool)
    if candidates.size:
        maps = kernels.sequential_step_tables(rule.array, n, representatives_array(n))
        for step_map in maps:
            isolated &= kernels.preimage_counts(step_map)[candidates] == 1
            if not isolated.any():
                break
    found = frozenset(Configuration(n, int(bits)) for bits in candidates[isolated])
    return IsolationReport(rule.code, n, fixed, found)
