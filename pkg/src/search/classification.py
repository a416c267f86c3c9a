"""Empirical classification of rules by how their orbits converge"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from automata import kernels
from automata.configuration import InputError, check_ring_size
from automata.modes import audit_modes
from automata.rules import RuleTable, as_rule, das_condition, symmetry_class, symmetry_representatives
from search import check_search_bound
from search.enumeration import representatives_array
from search.pool import run_sharded, shared
from search.universality import is_universal
from utilities.constants import (ALL_MODES_UNIVERSAL, ALL_SEQUENTIAL_UNIVERSAL, CATEGORY_ORDER,
                                 CONJECTURED_RULES, EXISTS_COVERING, EXISTS_UNIVERSAL_SEQUENTIAL,
                                 INSIDE_CONDITIONS_TABLE, MAX_CLASS_SEARCH_SIZE, NO_COVERING,
                                 NO_FIXED_POINTS, OUTSIDE_CONDITIONS_TABLE, PARITY_SPLIT_RULES,
                                 RESTRICTED_COVERING, RESTRICTED_UNIVERSAL, RESTRICTION_TAGS)

logger = logging.getLogger("EcaSeq.search.classification")

CONVERGENT_CATEGORIES = (ALL_MODES_UNIVERSAL, ALL_SEQUENTIAL_UNIVERSAL,
                         EXISTS_UNIVERSAL_SEQUENTIAL, EXISTS_COVERING)
UNIVERSAL_CATEGORIES = (ALL_MODES_UNIVERSAL, ALL_SEQUENTIAL_UNIVERSAL, EXISTS_UNIVERSAL_SEQUENTIAL)


def weakest(categories: Iterable[str]) -> str:
    return max(categories, key=CATEGORY_ORDER.index)


def published_entry(rule: int) -> Optional[tuple[str, str]]:
    """(category, Wolfram class) recorded for the rule's symmetry class, if any"""
    representative = symmetry_class(rule).representative
    for table in (INSIDE_CONDITIONS_TABLE, OUTSIDE_CONDITIONS_TABLE):
        for category, classes in table.items():
            for wolfram_class, rules in classes.items():
                if representative in rules:
                    return category, wolfram_class
    return None


@dataclass(frozen=True)
class ClassificationReport:
    """Category of one rule with the verdict behind it for every tested ring size"""
    rule: int
    n_values: tuple[int, ...]
    category: str
    per_n: dict[int, str] = field(compare=False)
    restriction: Optional[str] = None
    condition: Optional[str] = None
    wolfram_class: Optional[str] = None
    expected: Optional[str] = None
    conjectured: bool = False
    parity: dict[str, str] = field(default_factory=dict, compare=False)

    @property
    def discrepancy(self) -> bool:
        """True when the measured category differs from the published one"""
        return self.expected is not None and self.expected != self.category

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "category": self.category,
            "restriction": self.restriction,
            "condition": self.condition,
            "wolfram_class": self.wolfram_class,
            "expected": self.expected,
            "discrepancy": self.discrepancy,
            "conjectured": self.conjectured,
            "per_n": {str(n): category for n, category in sorted(self.per_n.items())},
            "parity": dict(sorted(self.parity.items())),
        }


def category_at(rule: RuleTable | int, n: int) -> str:
    """Category of a rule on one ring size"""
    rule = as_rule(rule)
    table = rule.array
    if kernels.parallel_fixed_points(table, n).size == 0:
        return NO_FIXED_POINTS
    reps = representatives_array(n)
    flags = kernels.universal_flags(table, n, reps)
    if flags.all():
        if all(is_universal(rule, n, mode).universal for mode in audit_modes(n)):
            return ALL_MODES_UNIVERSAL
        return ALL_SEQUENTIAL_UNIVERSAL
    if flags.any():
        return EXISTS_UNIVERSAL_SEQUENTIAL
    converged = kernels.converged_masks(table, n, reps)
    if np.logical_or.reduce(converged, axis=0).all():
        return EXISTS_COVERING
    return NO_COVERING


def _restriction_tag(good: list[int], n_values: tuple[int, ...]) -> Optional[str]:
    if good == [n for n in n_values if n % 2 == 0]:
        return "E"
    if good == [n for n in n_values if n % 3 == 0]:
        return "T"
    return None


def _combine(rule: int, n_values: tuple[int, ...], per_n: dict[int, str]) -> tuple[str, Optional[str]]:
    """Fold per-size categories into one rule category and restriction tag"""
    with_fixed = [n for n in n_values if per_n[n] != NO_FIXED_POINTS]
    if not with_fixed:
        return NO_FIXED_POINTS, None
    if das_condition(RuleTable.from_code(rule)) is not None:
        return weakest(per_n[n] for n in with_fixed), None

    good = [n for n in n_values if per_n[n] in CONVERGENT_CATEGORIES]
    if not good:
        return NO_COVERING, None
    if good == list(n_values):
        return weakest(per_n[n] for n in good), None
    tag = _restriction_tag(good, n_values)
    if weakest(per_n[n] for n in good) in UNIVERSAL_CATEGORIES:
        return RESTRICTED_UNIVERSAL, tag
    return RESTRICTED_COVERING, tag


def _parity_facets(n_values: tuple[int, ...], per_n: dict[int, str]) -> dict[str, str]:
    facets = {}
    for name, remainder in (("even", 0), ("odd", 1)):
        sizes = [n for n in n_values if n % 2 == remainder and per_n[n] != NO_FIXED_POINTS]
        if sizes:
            facets[name] = weakest(per_n[n] for n in sizes)
    if len(set(facets.values())) < 2:
        return {}
    return facets


def classify_rule(rule: RuleTable | int, n_values: Iterable[int]) -> ClassificationReport:
    """Category of a rule from the verdicts over the given ring sizes"""
    rule = as_rule(rule)
    n_values = tuple(sorted(set(n_values)))
    if not n_values:
        raise InputError("at least one ring size is needed")
    for n in n_values:
        check_ring_size(n)
        check_search_bound(n, MAX_CLASS_SEARCH_SIZE, "classification")

    per_n = {n: category_at(rule, n) for n in n_values}
    category, restriction = _combine(rule.code, n_values, per_n)
    published = published_entry(rule.code)
    expected = published[0] if published else None
    representative = symmetry_class(rule.code).representative
    report = ClassificationReport(
        rule=rule.code,
        n_values=n_values,
        category=category,
        per_n=per_n,
        restriction=restriction,
        condition=das_condition(rule),
        wolfram_class=published[1] if published else None,
        expected=expected,
        conjectured=representative in CONJECTURED_RULES,
        parity=_parity_facets(n_values, per_n) if representative in PARITY_SPLIT_RULES else {},
    )
    if report.discrepancy:
        logger.warning("Rule %d classified as %s, published as %s", rule.code, category, expected)
    published_tag = RESTRICTION_TAGS.get(representative)
    if published_tag and restriction and published_tag != restriction:
        logger.warning("Rule %d restricted to %s, published as %s", rule.code, restriction, published_tag)
    return report


def _classify_shard(rule: int) -> ClassificationReport:
    return classify_rule(rule, shared("n_values"))


def classify_rules(rules: Optional[Iterable[int]] = None, n_values: Iterable[int] = (4, 5, 6, 7, 8),
                   workers: int = 1, progress: bool = False) -> list[ClassificationReport]:
    """Classify several rules, by default the 88 symmetry representatives"""
    rules = list(symmetry_representatives() if rules is None else rules)
    n_values = tuple(sorted(set(n_values)))
    return run_sharded(_classify_shard, rules, {"n_values": n_values}, workers, progress,
                       desc="classify")


def table_rows(reports: Iterable[ClassificationReport]) -> dict[str, dict[str, list[int]]]:
    """Category -> Wolfram class -> rules, the layout of the published tables"""
    rows: dict[str, dict[str, list[int]]] = {}
    for report in reports:
        column = report.wolfram_class or "?"
        rows.setdefault(report.category, {}).setdefault(column, []).append(report.rule)
    return {
        category: {column: sorted(rules) for column, rules in sorted(rows[category].items())}
        for category in CATEGORY_ORDER if category in rows
    }
