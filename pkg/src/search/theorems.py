"""Registry of checkable statements about sequential update modes

Each entry binds rules, ring sizes and modes to an expected outcome and runs
the bounded exhaustive check. Conjecture entries report evidence, never a pass.

Entries registered with `flag_discrepancies` restate a published result the
simulation is known to disagree with on some sizes. Their failing checks are
kept as discrepancies, with the counterexample in the detail, and do not fail
the certificate.
"""
import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Literal, Optional

import numpy as np

from automata import kernels
from automata.configuration import Configuration, InputError
from automata.dynamics import DynamicalSystem, orbit
from automata.modes import SequentialMode, forward_sweep, reverse_sweep
from automata.rules import RuleTable
from search.covering import find_covering, non_convergent_configs, periodic_cover, word_blocker_check
from search.enumeration import prefix_permutations, representatives_array
from search.fixed_points import fixed_point_existence, isolated_fixed_points
from search.universality import is_universal, mode_count
from utilities.constants import PUBLISHED_MODE_COUNTS

logger = logging.getLogger("EcaSeq.search.theorems")

Kind = Literal["theorem", "lemma", "corollary", "conjecture", "count"]
Status = Literal["pass", "fail", "evidence", "discrepancy"]

# Conjecture checks enumerate raw permutations up to this ring size
RAW_EVIDENCE_SIZE = 7

# Rule 90 admits a covering on 6 and 8 cells, so its entries default to these sizes
RULE90_SIZES = (5, 7, 9)


class UnknownTheoremError(InputError):
    """Exception raised for an id that is not in the registry"""


class NoApplicableSizeError(InputError):
    """Exception raised when none of the requested ring sizes applies to an entry"""


@dataclass(frozen=True)
class Check:
    """One bounded check: a claim about a rule on one ring size"""
    rule: int
    n: int
    claim: str
    ok: bool
    detail: Optional[str] = None
    published: Optional[int] = None
    discrepancy: bool = False

    @property
    def failed(self) -> bool:
        return not self.ok and not self.discrepancy

    def to_dict(self) -> dict:
        return {"rule": self.rule, "n": self.n, "claim": self.claim, "ok": self.ok,
                "detail": self.detail, "published": self.published,
                "discrepancy": self.discrepancy}


@dataclass(frozen=True)
class Certificate:
    theorem_id: str
    kind: Kind
    statement: str
    status: Status
    n_values: tuple[int, ...]
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        return {
            "id": self.theorem_id,
            "kind": self.kind,
            "statement": self.statement,
            "status": self.status,
            "n_values": list(self.n_values),
            "checks": [check.to_dict() for check in self.checks],
        }


@dataclass(frozen=True)
class TheoremEntry:
    theorem_id: str
    kind: Kind
    statement: str
    n_values: tuple[int, ...]
    check: Callable[[int], list[Check]]
    flag_discrepancies: bool = False


REGISTRY: dict[str, TheoremEntry] = {}


def register(theorem_id: str, kind: Kind, statement: str, n_values: Iterable[int],
             flag_discrepancies: bool = False):
    """Decorator adding a per-ring-size check function to the registry"""
    def decorator(func: Callable[[int], list[Check]]):
        REGISTRY[theorem_id] = TheoremEntry(theorem_id, kind, statement, tuple(n_values), func,
                                            flag_discrepancies)
        return func
    return decorator


#region Helpers
def _word(text: str) -> Configuration:
    return Configuration.from_cells(int(ch) for ch in text)


def _rotations(text: str) -> frozenset[Configuration]:
    x = _word(text)
    return frozenset(x.rotate(shift) for shift in range(x.n))


def _universal_check(rule: int, n: int, mode, label: str, expected: bool = True) -> Check:
    verdict = is_universal(rule, n, mode)
    detail = None if verdict.witness is None else f"witness {verdict.witness}"
    claim = f"{label} universal" if expected else f"{label} not universal"
    return Check(rule, n, claim, verdict.universal == expected, detail)


def _covering_check(rule: int, n: int, expected: bool) -> Check:
    result = find_covering(rule, n)
    if result.found:
        detail = f"{len(result.modes)} modes"
    else:
        detail = (f"{len(result.uncovered)} configurations never converge, "
                  f"e.g. {min(result.uncovered)}")
    claim = "covering exists" if expected else "no covering"
    return Check(rule, n, claim, result.found == expected, detail)


def _fixed_points_check(rule: int, n: int, expected: frozenset[Configuration]) -> Check:
    found = fixed_point_existence(rule, n).fixed_points
    shown = ", ".join(str(x) for x in sorted(expected)) or "none"
    return Check(rule, n, f"fixed points are {{{shown}}}", found == expected,
                 None if found == expected else "found " + ", ".join(str(x) for x in sorted(found)))


def _isolation_check(rule: int, n: int, expected: frozenset[Configuration]) -> Check:
    report = isolated_fixed_points(rule, n)
    ok = report.fixed_points == expected and report.isolated == expected
    shown = ", ".join(str(x) for x in sorted(expected))
    detail = None if ok else "isolated " + ", ".join(str(x) for x in sorted(report.isolated))
    return Check(rule, n, f"only isolated fixed points {{{shown}}}", ok, detail)


def _converging_modes(rule: int, x: Configuration, perms: np.ndarray) -> list[SequentialMode]:
    """Those of the given orders, kept in their order, that take x to a fixed point"""
    converged = kernels.converged_masks(RuleTable.from_code(rule).array, x.n, perms)
    return [SequentialMode(tuple(int(cell) for cell in perms[row]))
            for row in np.flatnonzero(converged[:, x.bits])]
#endregion


#region Universality
@register("THM2", "theorem",
          "(n-1,...,0) is universal for rules 2, 10, 26, 34, 42, 58, 130, 138, 154, 162 and 170",
          range(5, 11))
def _reverse_sweep_rules(n: int) -> list[Check]:
    rules = (2, 10, 26, 34, 42, 58, 130, 138, 154, 162, 170)
    return [_universal_check(rule, n, reverse_sweep(n), "(n-1,...,0)") for rule in rules]


@register("THM-R24", "theorem", "(0,...,n-1) is universal for rule 24", range(5, 11))
def _rule24(n: int) -> list[Check]:
    return [_universal_check(24, n, forward_sweep(n), "(0,...,n-1)")]


@register("THM3", "theorem",
          "Rule 104: (n-1,...,0) is universal for even n; for odd n (01)1^(n-2) cycles under it",
          range(5, 11))
def _rule104(n: int) -> list[Check]:
    if n % 2 == 0:
        return [_universal_check(104, n, reverse_sweep(n), "(n-1,...,0)")]
    witness = _word("01" + "1" * (n - 2))
    record = orbit(DynamicalSystem(104, n, reverse_sweep(n)), witness)
    return [
        _universal_check(104, n, reverse_sweep(n), "(n-1,...,0)", expected=False),
        Check(104, n, f"{witness} ends on a cycle", record.cycle >= 2, f"cycle length {record.cycle}"),
    ]


@register("THM3-ODD", "theorem", "Rule 104 admits a covering on rings of odd size", (5, 7, 9))
def _rule104_odd(n: int) -> list[Check]:
    return [_covering_check(104, n, True)] if n % 2 else []


@register("THM4", "theorem", "Rule 106: (n-1,...,0) is universal for even n", (6, 8, 10))
def _rule106(n: int) -> list[Check]:
    return [] if n % 2 else [_universal_check(106, n, reverse_sweep(n), "(n-1,...,0)")]


@register("THM4-ODD", "theorem", "Rule 106 has no covering on rings of odd size", (5, 7, 9))
def _rule106_odd(n: int) -> list[Check]:
    if n % 2 == 0:
        return []
    stuck = non_convergent_configs(106, n)
    return [Check(106, n, "some configuration never converges", bool(stuck),
                  f"{len(stuck)} configurations")]


@register("THM-E7", "theorem", "(0,...,n-1) is universal for rules 7 and 15 on even rings",
          (4, 6, 8, 10))
def _rules7_15(n: int) -> list[Check]:
    if n % 2:
        return []
    return [_universal_check(rule, n, forward_sweep(n), "(0,...,n-1)") for rule in (7, 15)]


@register("CONJ45", "conjecture", "(0,...,n-1) is universal for rule 45 when 3 divides n",
          (6, 9, 12))
def _rule45_forward(n: int) -> list[Check]:
    return [] if n % 3 else [_universal_check(45, n, forward_sweep(n), "(0,...,n-1)")]
#endregion


#region Coverings
@register("THM6", "theorem", "Rules 18, 50, 74, 122, 146 and 178 admit a covering", range(5, 9),
          flag_discrepancies=True)
def _coverings(n: int) -> list[Check]:
    return [_covering_check(rule, n, True) for rule in (18, 50, 74, 122, 146, 178)]


@register("THM-E23", "theorem", "Rules 23 and 30 admit a covering on even rings", (4, 6, 8))
def _rules23_30(n: int) -> list[Check]:
    return [] if n % 2 else [_covering_check(rule, n, True) for rule in (23, 30)]


@register("THM5", "theorem",
          "Rule 90: configurations holding only two adjacent 1s never reach a fixed point",
          RULE90_SIZES)
def _rule90_pairs(n: int) -> list[Check]:
    stuck = non_convergent_configs(90, n)
    pairs = _rotations("11" + "0" * (n - 2))
    missing = sorted(pairs - stuck)
    return [Check(90, n, "every rotation of 0^(n-2)11 never converges", not missing,
                  None if not missing else f"{missing[0]} converges")]


@register("COR1", "corollary", "Rule 90 has no covering", RULE90_SIZES)
def _rule90_cover(n: int) -> list[Check]:
    return [_covering_check(90, n, False)]


@register("THM7", "theorem",
          "Rule 45: every configuration reaches a fixed point under a composition of two "
          "sequential modes when 3 divides n", (6,))
def _rule45_composed(n: int) -> list[Check]:
    if n % 3:
        return []
    cover = periodic_cover(45, n)
    return [Check(45, n, "every configuration has a composed mode", cover.complete,
                  f"{len(cover.uncovered)} configurations left")]
#endregion


#region Fixed points
@register("LEM1", "lemma",
          "Rules 7, 15 and 23 have (01)^(n/2) and (10)^(n/2) as fixed points iff n is even; "
          "rule 30 also fixes 0^n", range(4, 13))
def _alternating_fixed_points(n: int) -> list[Check]:
    alternating = _rotations("01" * (n // 2)) if n % 2 == 0 else frozenset()
    checks = [_fixed_points_check(rule, n, alternating) for rule in (7, 15, 23)]
    checks.append(_fixed_points_check(30, n, alternating | {Configuration.uniform(n, 0)}))
    return checks


@register("LEM4", "lemma",
          "Rules 45 and 37 have the three rotations of (001)^(n/3) as fixed points iff 3 divides n",
          range(4, 13))
def _period3_fixed_points(n: int) -> list[Check]:
    expected = _rotations("001" * (n // 3)) if n % 3 == 0 else frozenset()
    return [_fixed_points_check(rule, n, expected) for rule in (45, 37)]


@register("THM8", "theorem", "Rules 38, 46, 54, 60 and 62 only fix 0^n, and it is isolated",
          range(4, 8))
def _isolated_zero(n: int) -> list[Check]:
    expected = frozenset({Configuration.uniform(n, 0)})
    return [_isolation_check(rule, n, expected) for rule in (38, 46, 54, 60, 62)]


@register("THM9", "theorem", "Rules 110 and 126 only fix 0^n, and it is isolated", range(4, 8))
def _isolated_zero_complex(n: int) -> list[Check]:
    expected = frozenset({Configuration.uniform(n, 0)})
    return [_isolation_check(rule, n, expected) for rule in (110, 126)]


@register("THM10", "theorem",
          "Rules 134, 142, 150 and 156 only have isolated fixed points: 0^n and 1^n, plus "
          "(01)^(n/2) and (10)^(n/2) for even n", range(4, 8))
def _isolated_uniform(n: int) -> list[Check]:
    expected = frozenset({Configuration.uniform(n, 0), Configuration.uniform(n, 1)})
    if n % 2 == 0:
        expected |= _rotations("01" * (n // 2))
    return [_isolation_check(rule, n, expected) for rule in (134, 142, 150, 156)]


@register("THM12", "theorem",
          "Rule 105 has fixed points iff 4 divides n, the rotations of (0011)^(n/4), all isolated",
          range(4, 9))
def _rule105(n: int) -> list[Check]:
    expected = _rotations("0011" * (n // 4)) if n % 4 == 0 else frozenset()
    checks = [_fixed_points_check(105, n, expected)]
    if expected:
        checks.append(_isolation_check(105, n, expected))
    return checks


@register("COR-ISO", "corollary",
          "Rules 38, 46, 54, 60, 62, 110, 126, 134, 142, 150, 156 and 105 have no covering",
          range(4, 8))
def _isolated_no_covering(n: int) -> list[Check]:
    rules = (38, 46, 54, 60, 62, 110, 126, 134, 142, 150, 156, 105)
    return [_covering_check(rule, n, False) for rule in rules]
#endregion


#region Blocking configurations
@register("THM11", "theorem",
          "Rules 28 and 29 never converge from configurations holding 01001, rule 108 from "
          "configurations holding 0011100", (7, 8))
def _word_blockers(n: int) -> list[Check]:
    checks = []
    for rule, word in ((28, "01001"), (29, "01001"), (108, "0011100")):
        if len(word) <= n:
            checks.append(Check(rule, n, f"every configuration holding {word} never converges",
                                word_blocker_check(rule, n, word)))
    return checks


@register("THM13", "theorem",
          "Rules 6, 14 and 22 never converge from a single isolated 1; rule 73 has "
          "configurations that never converge", range(5, 9))
def _isolated_ones(n: int) -> list[Check]:
    single = _word("0" * (n - 1) + "1")
    checks = []
    for rule in (6, 14, 22):
        checks.append(Check(rule, n, f"{single} never converges",
                            single in non_convergent_configs(rule, n)))
    stuck = non_convergent_configs(73, n)
    checks.append(Check(73, n, "some configuration never converges", bool(stuck),
                        f"{len(stuck)} configurations"))
    return checks


@register("COR-WORD", "corollary", "Rules 73, 6, 14, 22, 28, 29 and 108 have no covering", (7, 8))
def _blocked_no_covering(n: int) -> list[Check]:
    return [_covering_check(rule, n, False) for rule in (73, 6, 14, 22, 28, 29, 108)]


@register("CONJ37", "conjecture",
          "Rule 37 has no covering: 001000 (n=6) and 000010001 (n=9) never converge", (6, 9),
          flag_discrepancies=True)
def _rule37(n: int) -> list[Check]:
    known = {6: "001000", 9: "000010001"}
    if n not in known:
        stuck = non_convergent_configs(37, n)
        return [Check(37, n, "some configuration never converges", bool(stuck),
                      f"{len(stuck)} configurations")]
    x = _word(known[n])
    if n <= RAW_EVIDENCE_SIZE:
        perms = prefix_permutations(n, ())
        claim = f"{x} never converges under all {math.factorial(n)} sequential modes"
    else:
        perms = representatives_array(n)
        claim = f"{x} never converges under any sequential mode"
    converging = _converging_modes(37, x, perms)
    detail = None
    if converging:
        detail = (f"reaches a fixed point under {converging[0]}; "
                  f"{len(converging)} of {len(perms)} modes converge")
    return [Check(37, n, claim, not converging, detail)]
#endregion


#region Mode counts
@register("COUNT104", "count", "Rule 104 has 544 universal sequential modes on 8 cells", (8,),
          flag_discrepancies=True)
def _rule104_count(n: int) -> list[Check]:
    return _count_checks(104, n)


@register("COUNT45", "count",
          "Rule 45 has 15 universal sequential modes on 6 cells and 117 on 9 cells", (6, 9),
          flag_discrepancies=True)
def _rule45_count(n: int) -> list[Check]:
    return _count_checks(45, n)


def _count_checks(rule: int, n: int) -> list[Check]:
    published = PUBLISHED_MODE_COUNTS.get((rule, n))
    if published is None:
        return []
    result = mode_count(rule, n)
    return [Check(rule, n, f"{published} universal sequential modes", not result.discrepancy,
                  f"raw {result.raw}, classes {result.classes}", published)]
#endregion


def theorem_ids() -> list[str]:
    return list(REGISTRY)


def verify_theorem(theorem_id: str, n_values: Optional[Iterable[int]] = None) -> Certificate:
    """Run the checks bound to a registry entry

    Raises:
        UnknownTheoremError: theorem_id is not registered
        NoApplicableSizeError: none of the requested ring sizes applies to the entry
    """
    entry = REGISTRY.get(theorem_id.upper())
    if entry is None:
        raise UnknownTheoremError(f"unknown theorem id {theorem_id!r}; known ids: {', '.join(REGISTRY)}")
    sizes = entry.n_values if n_values is None else tuple(sorted(set(n_values)))

    checks: list[Check] = []
    for n in sizes:
        checks.extend(entry.check(n))
    if not checks:
        raise NoApplicableSizeError(f"no ring size in {list(sizes)} applies to {entry.theorem_id}")

    if entry.flag_discrepancies:
        checks = [check if check.ok else replace(check, discrepancy=True) for check in checks]
        for check in checks:
            if check.discrepancy:
                logger.warning("%s disagrees with the simulation: rule %d, n=%d, %s (%s)",
                               entry.theorem_id, check.rule, check.n, check.claim, check.detail)

    if any(check.failed for check in checks):
        status: Status = "fail"
    elif any(check.discrepancy for check in checks):
        status = "discrepancy"
    elif entry.kind == "conjecture":
        status = "evidence"
    else:
        status = "pass"
    logger.info("%s: %s (%d checks)", entry.theorem_id, status, len(checks))
    return Certificate(entry.theorem_id, entry.kind, entry.statement, status, sizes, tuple(checks))
